#ifndef DAGREL_CORE_RNG_HPP
#define DAGREL_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace dagrel {

// Deterministic generator for property suites.  mt19937_64 output is pinned
// by the standard; the derived draws below avoid std distributions, whose
// sequences are implementation-defined, so a seed reproduces the same samples
// everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return gen_(); }

  // Uniform in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 6.283185307179586476925286766559 * u2;
    spare_ = rad * std::sin(ang);
    have_spare_ = true;
    return rad * std::cos(ang);
  }

  bool coin(double p = 0.5) { return uniform01() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform_int(0, static_cast<int>(xs.size()) - 1))];
  }

  // A derived stream for nested sampling that must not perturb the parent.
  Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace dagrel

#endif
