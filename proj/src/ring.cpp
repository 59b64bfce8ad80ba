#include "bowtie/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "bowtie/polyops.hpp"

namespace bowtie {

// --- Ring base --------------------------------------------------------------

std::uint64_t Ring::cardinality() const {
  throw not_enumerable(descriptor() + " is not enumerable");
}

Value Ring::element_at(std::uint64_t) const {
  throw not_enumerable(descriptor() + " is not enumerable");
}

std::uint64_t Ring::index_of(const Value&) const {
  throw not_enumerable(descriptor() + " is not enumerable");
}

Value Ring::sample(SeededRng& rng, int bound) const {
  if (enumerable()) return element_at(rng.below(cardinality()));
  return sample_impl(rng, bound);
}

Value Ring::sample_impl(SeededRng&, int) const {
  throw not_enumerable(descriptor() + " has no sampler");
}

Value Ring::pow(Value a, std::uint64_t k) const {
  Value acc = one();
  while (k > 0) {
    if (k & 1) acc = mul(acc, a);
    a = mul(a, a);
    k >>= 1;
  }
  return acc;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || descriptor() == other.descriptor();
}

// --- Element ----------------------------------------------------------------

Element::Element(RingPtr ring, Value v) : ring_(std::move(ring)), value_(std::move(v)) {
  if (!ring_->contains(value_))
    throw invalid_element("value is not a canonical element of " + ring_->descriptor());
}

namespace {
void check_owners(const Element& a, const Element& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
    throw owner_mismatch("elements belong to different rings");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_owners(a, b);
  return Element(a.ring(), a.ring()->add(a.value(), b.value()));
}

Element operator-(const Element& a, const Element& b) {
  check_owners(a, b);
  return Element(a.ring(), a.ring()->sub(a.value(), b.value()));
}

Element operator*(const Element& a, const Element& b) {
  check_owners(a, b);
  return Element(a.ring(), a.ring()->mul(a.value(), b.value()));
}

bool operator==(const Element& a, const Element& b) {
  check_owners(a, b);
  return a.value() == b.value();
}

// --- number theory helpers ---------------------------------------------------

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_squarefree_u64(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return n >= 1;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// --- Z ------------------------------------------------------------------------

namespace {

class IntegerRing final : public Ring {
 public:
  Kind kind() const override { return Kind::Integers; }
  std::string descriptor() const override { return "Z"; }
  bool enumerable() const override { return false; }
  Value zero() const override { return Value(Int{0}); }
  Value one() const override { return Value(Int{1}); }
  Value add(const Value& a, const Value& b) const override { return Value(a.as_int() + b.as_int()); }
  Value neg(const Value& a) const override { return Value(-a.as_int()); }
  Value mul(const Value& a, const Value& b) const override { return Value(a.as_int() * b.as_int()); }
  bool contains(const Value& v) const override { return v.is_int(); }
  std::string format(const Value& v) const override { return std::to_string(v.as_int()); }
  Value parse_element(std::string_view text) const override;
  bool domain_handle() const override { return true; }

 protected:
  Value sample_impl(SeededRng& rng, int bound) const override {
    if (bound < 0) bound = 0;
    return Value(rng.in_range(-static_cast<Int>(bound), static_cast<Int>(bound)));
  }
};

Int parse_int_literal(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw parse_error("bad integer literal '" + s + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("bad integer literal '" + s + "'");
  return std::strtoll(s.c_str(), nullptr, 10);
}

Value IntegerRing::parse_element(std::string_view text) const {
  return Value(parse_int_literal(text));
}

// --- Z/n and GF(p) -------------------------------------------------------------

class ModularRing final : public Ring {
 public:
  ModularRing(std::uint64_t n, bool field_notation) : n_(static_cast<Int>(n)), field_(field_notation) {}

  Kind kind() const override { return Kind::Modular; }
  std::string descriptor() const override {
    return field_ ? "GF(" + std::to_string(n_) + ")" : "Z/" + std::to_string(n_);
  }
  bool enumerable() const override { return true; }
  std::uint64_t cardinality() const override { return static_cast<std::uint64_t>(n_); }
  Value element_at(std::uint64_t index) const override {
    if (index >= static_cast<std::uint64_t>(n_)) throw error("element index out of range");
    return Value(static_cast<Int>(index));
  }
  std::uint64_t index_of(const Value& v) const override { return static_cast<std::uint64_t>(v.as_int()); }
  Value zero() const override { return Value(Int{0}); }
  Value one() const override { return Value(Int{1}); }
  Value add(const Value& a, const Value& b) const override { return Value((a.as_int() + b.as_int()) % n_); }
  Value neg(const Value& a) const override { return Value((n_ - a.as_int()) % n_); }
  Value mul(const Value& a, const Value& b) const override { return Value((a.as_int() * b.as_int()) % n_); }
  bool contains(const Value& v) const override { return v.is_int() && v.as_int() >= 0 && v.as_int() < n_; }
  std::string format(const Value& v) const override { return std::to_string(v.as_int()); }
  Value parse_element(std::string_view text) const override {
    Int raw = parse_int_literal(text) % n_;
    return Value(raw < 0 ? raw + n_ : raw);
  }
  bool domain_handle() const override { return field_; }

 private:
  Int n_;
  bool field_;
};

// --- GF(p)[x] and GF(p)[x]/(f) --------------------------------------------------

class PolyRing final : public Ring {
 public:
  explicit PolyRing(std::uint64_t p) : p_(static_cast<Int>(p)) {}

  Kind kind() const override { return Kind::PolyOverGF; }
  std::string descriptor() const override { return "GF(" + std::to_string(p_) + ")[x]"; }
  bool enumerable() const override { return false; }
  Value zero() const override { return Value(Poly{}); }
  Value one() const override { return Value(Poly{1}); }
  Value add(const Value& a, const Value& b) const override {
    return Value(polyops::add(a.as_poly(), b.as_poly(), p_));
  }
  Value neg(const Value& a) const override { return Value(polyops::neg(a.as_poly(), p_)); }
  Value mul(const Value& a, const Value& b) const override {
    return Value(polyops::mul(a.as_poly(), b.as_poly(), p_));
  }
  bool contains(const Value& v) const override {
    if (!v.is_poly()) return false;
    const Poly& f = v.as_poly();
    if (!f.empty() && f.back() == 0) return false;
    for (Int c : f)
      if (c < 0 || c >= p_) return false;
    return true;
  }
  std::string format(const Value& v) const override { return polyops::format(v.as_poly()); }
  Value parse_element(std::string_view text) const override {
    return Value(polyops::parse(text, p_));
  }
  bool domain_handle() const override { return true; }
  Int characteristic() const override { return p_; }

 protected:
  Value sample_impl(SeededRng& rng, int bound) const override {
    if (bound < 0) bound = 0;
    Poly f(static_cast<std::size_t>(bound) + 1, 0);
    for (auto& c : f) c = static_cast<Int>(rng.below(static_cast<std::uint64_t>(p_)));
    return Value(polyops::normalize(std::move(f), p_));
  }

 private:
  Int p_;
};

class QuotPolyRing final : public Ring {
 public:
  QuotPolyRing(std::uint64_t p, Poly modulus)
      : p_(static_cast<Int>(p)), modulus_(std::move(modulus)) {}

  Kind kind() const override { return Kind::QuotPoly; }
  std::string descriptor() const override {
    return "GF(" + std::to_string(p_) + ")[x]/(" + polyops::format(modulus_) + ")";
  }
  bool enumerable() const override { return true; }
  std::uint64_t cardinality() const override {
    std::uint64_t card = 1;
    for (int i = 0; i < polyops::deg(modulus_); ++i) card *= static_cast<std::uint64_t>(p_);
    return card;
  }
  Value element_at(std::uint64_t index) const override {
    if (index >= cardinality()) throw error("element index out of range");
    Poly f;
    std::uint64_t k = index;
    while (k > 0) {
      f.push_back(static_cast<Int>(k % static_cast<std::uint64_t>(p_)));
      k /= static_cast<std::uint64_t>(p_);
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return Value(std::move(f));
  }
  std::uint64_t index_of(const Value& v) const override {
    const Poly& f = v.as_poly();
    std::uint64_t idx = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
      idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(*it);
    return idx;
  }
  Value zero() const override { return Value(Poly{}); }
  Value one() const override { return Value(Poly{1}); }
  Value add(const Value& a, const Value& b) const override {
    return Value(polyops::add(a.as_poly(), b.as_poly(), p_));
  }
  Value neg(const Value& a) const override { return Value(polyops::neg(a.as_poly(), p_)); }
  Value mul(const Value& a, const Value& b) const override {
    return Value(polyops::rem(polyops::mul(a.as_poly(), b.as_poly(), p_), modulus_, p_));
  }
  bool contains(const Value& v) const override {
    if (!v.is_poly()) return false;
    const Poly& f = v.as_poly();
    if (polyops::deg(f) >= polyops::deg(modulus_)) return false;
    if (!f.empty() && f.back() == 0) return false;
    for (Int c : f)
      if (c < 0 || c >= p_) return false;
    return true;
  }
  std::string format(const Value& v) const override { return polyops::format(v.as_poly()); }
  Value parse_element(std::string_view text) const override {
    return Value(polyops::rem(polyops::parse(text, p_), modulus_, p_));
  }
  Int characteristic() const override { return p_; }

 private:
  Int p_;
  Poly modulus_;
};

// --- products -------------------------------------------------------------------

class ProductRing final : public Ring {
 public:
  ProductRing(RingPtr a, RingPtr b) : a_(std::move(a)), b_(std::move(b)) {}

  Kind kind() const override { return Kind::Product; }
  std::string descriptor() const override { return a_->descriptor() + " x " + b_->descriptor(); }
  bool enumerable() const override { return a_->enumerable(); }
  std::uint64_t cardinality() const override { return a_->cardinality() * b_->cardinality(); }
  Value element_at(std::uint64_t index) const override {
    std::uint64_t nb = b_->cardinality();
    return Value(Tuple{a_->element_at(index / nb), b_->element_at(index % nb)});
  }
  std::uint64_t index_of(const Value& v) const override {
    const Tuple& t = v.as_tuple();
    return a_->index_of(t[0]) * b_->cardinality() + b_->index_of(t[1]);
  }
  Value zero() const override { return Value(Tuple{a_->zero(), b_->zero()}); }
  Value one() const override { return Value(Tuple{a_->one(), b_->one()}); }
  Value add(const Value& x, const Value& y) const override {
    const Tuple& s = x.as_tuple();
    const Tuple& t = y.as_tuple();
    return Value(Tuple{a_->add(s[0], t[0]), b_->add(s[1], t[1])});
  }
  Value neg(const Value& x) const override {
    const Tuple& s = x.as_tuple();
    return Value(Tuple{a_->neg(s[0]), b_->neg(s[1])});
  }
  Value mul(const Value& x, const Value& y) const override {
    const Tuple& s = x.as_tuple();
    const Tuple& t = y.as_tuple();
    return Value(Tuple{a_->mul(s[0], t[0]), b_->mul(s[1], t[1])});
  }
  bool contains(const Value& v) const override {
    if (!v.is_tuple() || v.as_tuple().size() != 2) return false;
    return a_->contains(v.as_tuple()[0]) && b_->contains(v.as_tuple()[1]);
  }
  std::string format(const Value& v) const override {
    const Tuple& t = v.as_tuple();
    return "(" + a_->format(t[0]) + "," + b_->format(t[1]) + ")";
  }
  Value parse_element(std::string_view text) const override;

 protected:
  Value sample_impl(SeededRng& rng, int bound) const override {
    return Value(Tuple{a_->sample(rng, bound), b_->sample(rng, bound)});
  }

 private:
  RingPtr a_, b_;
};

}  // namespace

// Splits "(a,b)" at the top-level comma. Shared by every pair-shaped ring.
std::pair<std::string, std::string> split_pair_literal(std::string_view text) {
  std::string s(text);
  std::size_t begin = s.find_first_not_of(" \t");
  std::size_t last = s.find_last_not_of(" \t");
  if (begin == std::string::npos || s[begin] != '(' || s[last] != ')')
    throw parse_error("expected tuple literal '(a,b)', got '" + s + "'");
  int depth = 0;
  for (std::size_t i = begin + 1; i < last; ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0)
      return {s.substr(begin + 1, i - begin - 1), s.substr(i + 1, last - i - 1)};
  }
  throw parse_error("expected tuple literal '(a,b)', got '" + s + "'");
}

namespace {

Value ProductRing::parse_element(std::string_view text) const {
  auto [lhs, rhs] = split_pair_literal(text);
  return Value(Tuple{a_->parse_element(lhs), b_->parse_element(rhs)});
}

}  // namespace

// --- factories --------------------------------------------------------------------

RingPtr make_integers() { return std::make_shared<IntegerRing>(); }

RingPtr make_modular(std::uint64_t n) {
  if (n == 1) throw zero_ring("Z/1 is the zero ring");
  if (n < 2) throw parse_error("modulus must be at least 2");
  // products of residues must stay inside int64
  if (n > (std::uint64_t{1} << 31)) throw parse_error("modulus too large");
  return std::make_shared<ModularRing>(n, false);
}

RingPtr make_prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw not_prime("GF(" + std::to_string(p) + "): " + std::to_string(p) + " is not prime");
  return std::make_shared<ModularRing>(p, true);
}

RingPtr make_poly_over_gf(std::uint64_t p) {
  if (!is_prime_u64(p)) throw not_prime("GF(" + std::to_string(p) + ")[x]: " + std::to_string(p) + " is not prime");
  return std::make_shared<PolyRing>(p);
}

RingPtr make_quot_poly(std::uint64_t p, Poly modulus) {
  if (!is_prime_u64(p)) throw not_prime("GF(" + std::to_string(p) + ")[x]: " + std::to_string(p) + " is not prime");
  if (polyops::deg(modulus) < 1) throw parse_error("quotient polynomial must have degree >= 1");
  if (modulus.back() != 1) throw parse_error("quotient polynomial must be monic");
  return std::make_shared<QuotPolyRing>(p, std::move(modulus));
}

RingPtr product_ring(const RingPtr& a, const RingPtr& b) {
  if (a->enumerable() != b->enumerable())
    throw mode_mismatch("cannot form the product of an enumerable and a sampleable ring");
  return std::make_shared<ProductRing>(a, b);
}

// --- ring-spec parser ----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_nat(std::string_view s, const char* what) {
  if (s.empty()) throw parse_error(std::string("missing ") + what);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(std::string("bad ") + what + " '" + std::string(s) + "'");
  return std::strtoull(std::string(s).c_str(), nullptr, 10);
}

RingPtr parse_factor(std::string_view spec) {
  spec = trim(spec);
  if (spec == "Z") return make_integers();
  if (spec.rfind("Z/", 0) == 0) {
    std::uint64_t n = parse_nat(spec.substr(2), "modulus");
    if (n == 0) throw parse_error("Z/0 is not supported");
    return make_modular(n);
  }
  if (spec.rfind("GF(", 0) == 0) {
    std::size_t close = spec.find(')');
    if (close == std::string_view::npos) throw parse_error("unterminated GF( in '" + std::string(spec) + "'");
    std::uint64_t p = parse_nat(trim(spec.substr(3, close - 3)), "characteristic");
    std::string_view rest = trim(spec.substr(close + 1));
    if (rest.empty()) return make_prime_field(p);
    if (rest == "[x]") return make_poly_over_gf(p);
    if (rest.rfind("[x]/(", 0) == 0 && rest.back() == ')') {
      std::string_view poly_text = rest.substr(5, rest.size() - 6);
      if (!is_prime_u64(p)) throw not_prime("GF(" + std::to_string(p) + "): not prime");
      Poly f = polyops::parse(poly_text, static_cast<Int>(p));
      return make_quot_poly(p, std::move(f));
    }
    throw parse_error("bad ring spec '" + std::string(spec) + "'");
  }
  throw parse_error("bad ring spec '" + std::string(spec) + "'");
}

}  // namespace

RingPtr make_ring(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw parse_error("empty ring spec");
  // split on top-level " x "
  std::vector<std::string_view> factors;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 2 < spec.size(); ++i) {
    char c = spec[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (depth == 0 && c == ' ' && spec[i + 1] == 'x' && spec[i + 2] == ' ') {
      factors.push_back(spec.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  factors.push_back(spec.substr(start));
  RingPtr ring = parse_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    ring = product_ring(ring, parse_factor(factors[i]));
  return ring;
}

// --- derived operations ------------------------------------------------------------------

std::vector<Element> enumerate(const RingPtr& r) {
  if (!r->enumerable()) throw not_enumerable(r->descriptor() + " is not enumerable");
  std::vector<Element> out;
  out.reserve(r->cardinality());
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) out.emplace_back(r, r->element_at(i));
  return out;
}

Element sample_element(const RingPtr& r, SeededRng& rng, int bound) {
  return Element(r, r->sample(rng, bound));
}

SpecialElements special_elements(const RingPtr& r) {
  if (!r->enumerable()) throw not_enumerable(r->descriptor() + " is not enumerable");
  SpecialElements out;
  std::uint64_t n = r->cardinality();
  for (std::uint64_t i = 0; i < n; ++i) {
    Value a = r->element_at(i);
    if (r->mul(a, a) == a) out.idempotents.push_back(a);
    // additive order bounds the nilpotency index, so n steps suffice
    Value p = a;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (r->is_zero(p)) {
        out.nilpotents.push_back(a);
        break;
      }
      p = r->mul(p, a);
    }
    for (std::uint64_t j = 0; j < n; ++j) {
      if (r->is_one(r->mul(a, r->element_at(j)))) {
        out.units.push_back(a);
        break;
      }
    }
  }
  return out;
}

}  // namespace bowtie
