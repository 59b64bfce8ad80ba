#pragma once

#include "bowtie/duplication.hpp"

namespace bowtie {

// Full ring-spec grammar as exposed on the command line: the base grammar
// plus "dup(<ring-spec>; <ideal-gens>)".
RingPtr parse_ring_spec(std::string_view spec);

// comma-separated element literals over the given ring; "" is the zero ideal
std::vector<Value> parse_ideal_gens(const RingPtr& r, std::string_view csv);
Ideal parse_ideal(const RingPtr& r, std::string_view csv);

}  // namespace bowtie
