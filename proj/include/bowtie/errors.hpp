#pragma once

#include <stdexcept>

namespace bowtie {

// Error taxonomy for the public surface. Anything a caller can trigger
// through inputs maps to one of these; internal invariants use assertions.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error { using error::error; };
struct not_prime : error { using error::error; };
struct zero_ring : error { using error::error; };
struct owner_mismatch : error { using error::error; };
struct not_enumerable : error { using error::error; };
struct mode_mismatch : error { using error::error; };
struct undecidable_membership : error { using error::error; };
struct improper_ideal : error { using error::error; };
struct cap_exceeded : error { using error::error; };
struct invalid_element : error { using error::error; };
struct zero_generator : error { using error::error; };
struct not_a_domain : error { using error::error; };
struct square_not_zero : error { using error::error; };

}  // namespace bowtie
