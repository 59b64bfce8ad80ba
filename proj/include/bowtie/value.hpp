#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace bowtie {

// Canonical element payload. Each ring interprets its own payloads:
// residue rings use Int, polynomial rings use Poly (coefficients lowest
// degree first, no trailing zeros), composite rings use Tuple.
struct Value;
using Int = std::int64_t;
using Poly = std::vector<std::int64_t>;
using Tuple = std::vector<Value>;

struct Value {
  std::variant<Int, Poly, Tuple> rep;

  Value() : rep(Int{0}) {}
  Value(Int v) : rep(v) {}
  Value(Poly v) : rep(std::move(v)) {}
  Value(Tuple v) : rep(std::move(v)) {}

  bool is_int() const { return rep.index() == 0; }
  bool is_poly() const { return rep.index() == 1; }
  bool is_tuple() const { return rep.index() == 2; }

  Int as_int() const { return std::get<Int>(rep); }
  const Poly& as_poly() const { return std::get<Poly>(rep); }
  const Tuple& as_tuple() const { return std::get<Tuple>(rep); }
};

bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

// Total order used for deterministic element sets. Vectors compare by size
// first, then lexicographically, so polynomials order by degree.
bool operator<(const Value& a, const Value& b);

}  // namespace bowtie
