#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace hplab {

// Exact coefficient arithmetic for residual checks; double for pointwise work.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

// k-thousandths literal: the generic parameter draws live on the 1/1000 grid
// so that double and rational instantiations see the same values.
inline Rational rat_milli(long long k) { return Rational(k, 1000); }

template <class T>
T from_milli(long long k);
template <>
inline double from_milli<double>(long long k) { return static_cast<double>(k) / 1000.0; }
template <>
inline Rational from_milli<Rational>(long long k) { return rat_milli(k); }

inline bool is_nonpositive_integer(const Rational& x) {
    return denominator(x) == 1 && x <= 0;
}
inline bool is_nonpositive_integer(double x, double tol = 1e-9) {
    return x < 0.5 && std::abs(x - std::round(x)) < tol;
}

inline double abs_value(double x) { return std::abs(x); }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// SplitMix64: tiny deterministic PRNG; std distributions are not
// reproducible across standard libraries, so draws go through this.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi]
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace hplab
