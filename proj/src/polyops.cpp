#include "bowtie/polyops.hpp"

#include <cctype>
#include <cstdlib>

#include "bowtie/errors.hpp"

namespace bowtie::polyops {

namespace {

Int norm_coeff(Int c, Int p) {
  c %= p;
  return c < 0 ? c + p : c;
}

}  // namespace

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly normalize(Poly f, Int p) {
  for (auto& c : f) c = norm_coeff(c, p);
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly add(const Poly& f, const Poly& g, Int p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int c = 0;
    if (i < f.size()) c += f[i];
    if (i < g.size()) c += g[i];
    out[i] = norm_coeff(c, p);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Poly neg(const Poly& f, Int p) {
  Poly out(f);
  for (auto& c : out) c = norm_coeff(-c, p);
  return out;
}

Poly sub(const Poly& f, const Poly& g, Int p) { return add(f, neg(g, p), p); }

Poly mul(const Poly& f, const Poly& g, Int p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = norm_coeff(out[i + j] + f[i] * g[j], p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Int mod_inv(Int a, Int p) {
  a = norm_coeff(a, p);
  Int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    Int q = r / new_r;
    Int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw error("mod_inv: not invertible");
  return norm_coeff(t, p);
}

Poly rem(Poly f, const Poly& g, Int p) {
  if (g.empty()) throw error("polynomial division by zero");
  Int lead_inv = mod_inv(g.back(), p);
  while (f.size() >= g.size() && !f.empty()) {
    Int factor = norm_coeff(f.back() * lead_inv, p);
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = norm_coeff(f[shift + i] - factor * g[i], p);
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

Poly gcd(Poly f, Poly g, Int p) {
  f = normalize(std::move(f), p);
  g = normalize(std::move(g), p);
  while (!g.empty()) {
    Poly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty() && f.back() != 1) {
    Int inv = mod_inv(f.back(), p);
    for (auto& c : f) c = norm_coeff(c * inv, p);
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, Int p) {
  if (g.empty()) return f.empty();
  return rem(f, g, p).empty();
}

std::string format(const Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (int i = deg(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(f[i]);
    } else {
      if (f[i] != 1) out += std::to_string(f[i]);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly parse(std::string_view text, Int p) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty polynomial");

  Poly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw parse_error("empty term in polynomial '" + s + "'");

    Int coeff = 1;
    Int exp = 0;
    std::size_t xpos = term.find('x');
    if (xpos == std::string::npos) {
      // constant term
      for (char c : term)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw parse_error("bad term '" + term + "'");
      coeff = std::strtoll(term.c_str(), nullptr, 10);
    } else {
      std::string pre = term.substr(0, xpos);
      if (!pre.empty() && pre.back() == '*') pre.pop_back();
      if (!pre.empty()) {
        for (char c : pre)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad coefficient '" + pre + "'");
        coeff = std::strtoll(pre.c_str(), nullptr, 10);
      }
      std::string post = term.substr(xpos + 1);
      if (post.empty()) {
        exp = 1;
      } else if (post[0] == '^') {
        std::string e = post.substr(1);
        if (e.empty()) throw parse_error("missing exponent in '" + term + "'");
        for (char c : e)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad exponent '" + e + "'");
        exp = std::strtoll(e.c_str(), nullptr, 10);
      } else {
        throw parse_error("bad term '" + term + "'");
      }
    }
    if (exp > 64) throw parse_error("exponent too large in '" + term + "'");
    if (static_cast<std::size_t>(exp) + 1 > out.size()) out.resize(exp + 1, 0);
    out[exp] = norm_coeff(out[exp] + coeff, p);
    pos = end + 1;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace bowtie::polyops
