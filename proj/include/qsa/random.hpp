#ifndef QSA_RANDOM_HPP_
#define QSA_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qsa {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for a labelled position (model, n, sample, ...) under a root
/// seed. Every sample of an experiment draws from its own stream, so results
/// do not depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(root);
  for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return s;
}

}  // namespace qsa

#endif
