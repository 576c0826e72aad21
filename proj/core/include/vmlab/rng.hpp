#pragma once

#include <cstdint>
#include <vector>

namespace vmlab {

// Deterministic splitmix64 generator. Used instead of <random> engines so
// that trial streams are bit-identical across standard libraries; every
// randomized suite derives one Rng per trial from (suite seed, trial index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_trial(std::uint64_t suite_seed, int trial) {
    Rng mix(suite_seed);
    std::uint64_t s = mix.next();
    return Rng(s + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

  // True with probability pct/100.
  bool percent(int pct) { return uniform(0, 99) < pct; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[uniform(0, static_cast<int>(v.size()) - 1)];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = uniform(0, i);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace vmlab
