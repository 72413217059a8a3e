#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "recourse/errors.hpp"

namespace recourse {

// Seed expander / stream mixer (Steele et al. splitmix64).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// One keyed stream per pipeline stage. Draws in one stage never perturb
// another stage, and per-entity keys keep entities independent of each
// other, so adding a stage or a draw does not reshuffle the whole program.
enum class Stream : std::uint64_t {
  ReportGen = 1,
  Truth = 2,
  Probes = 3,
  Outcomes = 4,
  Jury = 5,
  Schedule = 6,
  Sves = 7,
};

// xoshiro256++ (Blackman & Vigna), hand-rolled so that sequences are
// identical on every platform. std::* distributions are unspecified across
// standard libraries and would break byte-reproducible runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  // Derived child stream: (master seed, stage, key) -> independent sequence.
  static Rng stream(std::uint64_t master_seed, Stream stage, std::uint64_t key) {
    std::uint64_t sm = master_seed;
    splitmix64_next(sm);
    sm ^= 0xA0761D6478BD642FULL * (static_cast<std::uint64_t>(stage) + 1);
    splitmix64_next(sm);
    sm ^= 0xE7037ED1A0B428DBULL * (key + 1);
    return Rng(splitmix64_next(sm));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0,1]; safe as a log() argument.
  double uniform_open01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

  // Box-Muller (cosine branch only, stateless: two uniforms per call).
  double normal(double mean, double sd) {
    if (sd <= 0.0) return mean;
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * radius * std::cos(2.0 * kPi * u2);
  }

  // Parameterized by its median: exp(normal(ln median, sigma)).
  double lognormal_median(double median, double sigma) {
    if (median <= 0.0) return 0.0;
    if (sigma <= 0.0) return median;
    return std::exp(normal(std::log(median), sigma));
  }

  double truncated_normal(double mean, double sd, double lo, double hi) {
    const auto clamp = [&](double x) { return x < lo ? lo : (x > hi ? hi : x); };
    if (sd <= 0.0) return clamp(mean);
    for (int i = 0; i < 256; ++i) {
      const double x = normal(mean, sd);
      if (x >= lo && x <= hi) return x;
    }
    return clamp(mean);  // pathological parameters; keep the draw total
  }

  double exponential(double rate) {
    if (rate <= 0.0) throw DomainError("exponential: rate must be > 0");
    return -std::log(uniform_open01()) / rate;
  }

  // Count >= 1: one reporter plus a geometric number of extras with the
  // given mean.
  int shifted_geometric(double mean_extra) {
    if (mean_extra <= 0.0) return 1;
    const double p = 1.0 / (1.0 + mean_extra);
    const double u = uniform01();
    const double k = std::floor(std::log1p(-u) / std::log1p(-p));
    if (!(k >= 0.0)) return 1;
    return 1 + static_cast<int>(k < 1e6 ? k : 1e6);
  }

  // Marsaglia-Tsang; scale 1.
  double gamma(double shape) {
    if (shape <= 0.0) throw DomainError("gamma: shape must be > 0");
    if (shape < 1.0) {
      const double u = uniform_open01();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal(0.0, 1.0);
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = uniform_open01();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  // Beta by mean and concentration. conc <= 0 collapses to a point mass,
  // which is what degenerate zero-spread configurations rely on.
  double beta_mean_conc(double mean, double conc) {
    if (mean <= 0.0) return 0.0;
    if (mean >= 1.0) return 1.0;
    if (conc <= 0.0) return mean;
    return beta(mean * conc, (1.0 - mean) * conc);
  }

  // Unbiased bounded draw (modulo with rejection).
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_below: n must be > 0");
    const std::uint64_t threshold = (~n + 1) % n;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

// FNV-1a, used for stable string-keyed stream derivation.
inline std::uint64_t fnv1a64(std::string_view text, std::uint64_t h = 0xCBF29CE484222325ULL) {
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace recourse
