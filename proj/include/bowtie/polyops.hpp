#pragma once

#include <string>
#include <string_view>

#include "bowtie/value.hpp"

// Dense univariate polynomial arithmetic over GF(p), p prime. Coefficients
// are stored lowest degree first in [0, p); the zero polynomial is the empty
// vector.
namespace bowtie::polyops {

int deg(const Poly& f);  // -1 for the zero polynomial
Poly normalize(Poly f, Int p);

Poly add(const Poly& f, const Poly& g, Int p);
Poly neg(const Poly& f, Int p);
Poly sub(const Poly& f, const Poly& g, Int p);
Poly mul(const Poly& f, const Poly& g, Int p);

// remainder of f mod g; g != 0
Poly rem(Poly f, const Poly& g, Int p);
// monic gcd; gcd(0, 0) = 0
Poly gcd(Poly f, Poly g, Int p);
bool divides(const Poly& g, const Poly& f, Int p);

Int mod_inv(Int a, Int p);

std::string format(const Poly& f);
// grammar: terms joined by '+', each "c", "x", "x^k", "cx^k" or "c*x^k"
Poly parse(std::string_view text, Int p);

}  // namespace bowtie::polyops
