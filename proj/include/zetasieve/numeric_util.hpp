#pragma once

#include <cmath>
#include <cstdint>

#include "zetasieve/types.hpp"

namespace zs {

/// Compensated (Kahan) accumulator; componentwise over the complex parts.
class KahanSum {
  public:
    void add(Cplx x) {
        Cplx y = x - comp_;
        Cplx t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    Cplx value() const { return sum_; }

  private:
    Cplx sum_{0.0, 0.0};
    Cplx comp_{0.0, 0.0};
};

/// SplitMix64; used wherever a reproducible pseudo-random grid is needed.
/// The uniform mapping is spelled out so results do not depend on the
/// standard library's distribution implementation.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::uint64_t state_;
};

/// Distance from `a` to the nearest pole of tan (pi/2 + k*pi).
inline double distance_to_tan_pole(double a) {
    return std::fabs(std::remainder(a - 1.5707963267948966, 3.141592653589793));
}

}  // namespace zs
