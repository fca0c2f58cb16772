#pragma once

// Seeded random presentations. The mapping from engine output to values is spelled
// out here rather than left to std distributions, so a seed means the same thing on every platform.

#include "presentations.hpp"

#include <cstdint>
#include <random>

namespace twobridge {

struct PresentationBounds {
  int max_n = 4;
  long max_alpha = 8; // |alpha| bound, alpha even
  long max_c = 4;
};

class PresentationSampler {
public:
  explicit PresentationSampler(std::uint64_t seed, PresentationBounds b = {}) : rng_(seed), b_(b) {}

  long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  long nonzero(long bound) {
    long v = uniform(1, bound);
    return rng_() & 1 ? v : -v;
  }

  I1Presentation next() {
    int n = static_cast<int>(uniform(1, b_.max_n));
    return next(n);
  }

  I1Presentation next(int n) {
    std::vector<long> a, c;
    for (int i = 0; i < n; ++i) {
      a.push_back(2 * nonzero(b_.max_alpha / 2));
      c.push_back(nonzero(b_.max_c));
    }
    return I1Presentation(a, c);
  }

  // K_n = K_{n-1} plus one more box chosen so that b(K_n) = 0; needs b(K_{n-1}) != 0
  std::pair<I1Presentation, I1Presentation> next_padded() {
    while (true) {
      int n = static_cast<int>(uniform(1, b_.max_n));
      I1Presentation base = next(n);
      if (base.b() == 0) continue;
      std::vector<long> a = base.alphas(), c = base.cs();
      a.push_back(-base.b());
      c.push_back(nonzero(b_.max_c));
      return {I1Presentation(a, c), base};
    }
  }

private:
  std::mt19937_64 rng_;
  PresentationBounds b_;
};

} // namespace twobridge
