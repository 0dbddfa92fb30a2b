#pragma once

#include <cstdint>

#include "expalg/rational.hpp"

namespace expalg {

/// splitmix64 stream. Used instead of <random> distributions so that seeded
/// runs are byte-identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned percent) { return below(100) < percent; }

    /// Small rational with |num| <= bound, den in {1, 2, 3}.
    Rational small_rational(long long bound = 3) {
        long long n = range(-bound, bound);
        long long d = range(1, 3);
        return Rational(Integer(n), Integer(d));
    }

    /// Like small_rational but never zero.
    Rational small_nonzero_rational(long long bound = 3) {
        for (;;) {
            Rational r = small_rational(bound);
            if (!r.is_zero()) return r;
        }
    }

    /// Derives an independent stream for instance i.
    Rng fork(std::uint64_t i) const {
        Rng child(state_ ^ (0x6a09e667f3bcc909ull + i * 0x9e3779b97f4a7c15ull));
        child.next();
        return child;
    }

  private:
    std::uint64_t state_;
};

}  // namespace expalg
