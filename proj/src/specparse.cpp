#include "bowtie/specparse.hpp"

#include <cctype>

namespace bowtie {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

RingPtr parse_ring_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.rfind("dup(", 0) == 0) {
    if (spec.back() != ')') throw parse_error("unterminated dup( in '" + std::string(spec) + "'");
    std::string_view inner = spec.substr(4, spec.size() - 5);
    auto parts = split_top_level(inner, ';');
    if (parts.size() != 2)
      throw parse_error("dup spec needs a single ';': dup(<ring>; <ideal-gens>)");
    RingPtr base = parse_ring_spec(parts[0]);
    return duplicate(base, parse_ideal(base, parts[1]));
  }
  return make_ring(spec);
}

std::vector<Value> parse_ideal_gens(const RingPtr& r, std::string_view csv) {
  csv = trim(csv);
  std::vector<Value> gens;
  if (csv.empty()) return gens;
  for (std::string_view part : split_top_level(csv, ',')) {
    part = trim(part);
    if (part.empty()) throw parse_error("empty generator in '" + std::string(csv) + "'");
    gens.push_back(r->parse_element(part));
  }
  return gens;
}

Ideal parse_ideal(const RingPtr& r, std::string_view csv) {
  return Ideal::from_generators(r, parse_ideal_gens(r, csv));
}

}  // namespace bowtie
