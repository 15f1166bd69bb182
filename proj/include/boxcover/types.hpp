#ifndef BOXCOVER_TYPES_HPP
#define BOXCOVER_TYPES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxcover {

using Node = std::uint32_t;
using NodeSet = std::vector<Node>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded random stream. Every stochastic algorithm takes one by reference so
/// that (input, seed) fully determines the output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  /// Uniform real in [0, 1).
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  template <typename Container>
  auto& pick(Container& c) {
    return c[index(c.size())];
  }

  template <typename Container>
  void shuffle(Container& c) {
    std::shuffle(c.begin(), c.end(), engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent per-cell seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace boxcover

#endif
