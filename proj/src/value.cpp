#include "bowtie/value.hpp"

namespace bowtie {

bool operator==(const Value& a, const Value& b) {
  if (a.rep.index() != b.rep.index()) return false;
  switch (a.rep.index()) {
    case 0: return a.as_int() == b.as_int();
    case 1: return a.as_poly() == b.as_poly();
    default: return a.as_tuple() == b.as_tuple();
  }
}

namespace {

template <class Vec>
bool size_then_lex_less(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return false;
}

}  // namespace

bool operator<(const Value& a, const Value& b) {
  if (a.rep.index() != b.rep.index()) return a.rep.index() < b.rep.index();
  switch (a.rep.index()) {
    case 0: return a.as_int() < b.as_int();
    case 1: return size_then_lex_less(a.as_poly(), b.as_poly());
    default: return size_then_lex_less(a.as_tuple(), b.as_tuple());
  }
}

}  // namespace bowtie
