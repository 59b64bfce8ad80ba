#pragma once

#include <cstdint>
#include <string_view>

namespace bowtie {

// splitmix64. Fully specified, so seeded runs produce identical streams on
// every platform and standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform in [lo, hi]
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// Independent stream per named check, derived from the run seed. Keeps every
// sampled check reproducible regardless of evaluation order.
inline SeededRng seeded_stream(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return SeededRng(seed ^ h);
}

}  // namespace bowtie
