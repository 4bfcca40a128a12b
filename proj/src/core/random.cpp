#include "ehc/core.hpp"

namespace ehc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RandomSeed RandomSeed::derive(std::uint64_t k) const {
  return RandomSeed{splitmix64(value ^ splitmix64(k))};
}

}  // namespace ehc
