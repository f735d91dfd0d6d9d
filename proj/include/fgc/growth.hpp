#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "fgc/bigint.hpp"
#include "fgc/errors.hpp"
#include "fgc/recurrence.hpp"

namespace fgc {

namespace detail {

// ln of a positive big integer via its bit length: pull the top 64 bits into
// a double mantissa and add (shift)·ln 2.
inline double ln_bigint_bits(const BigInt& v) {
    if (v <= 0) throw InputError("ln requires a positive value");
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 63) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 63;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

// Independent cross-check: ln via the decimal expansion, using the leading
// digits as a mantissa and the digit count as a power of ten.
inline double ln_bigint_digits(const BigInt& v) {
    if (v <= 0) throw InputError("ln requires a positive value");
    const std::string s = v.str();
    const std::size_t keep = std::min<std::size_t>(s.size(), 17);
    const double mant = std::stod("0." + s.substr(0, keep));
    return std::log(mant) + static_cast<double>(s.size()) * std::log(10.0);
}

} // namespace detail

// ln of a positive big integer, computed two independent ways and required
// to agree to 1e-10 relative error.
inline double ln_bigint(const BigInt& v) {
    const double a = detail::ln_bigint_bits(v);
    const double b = detail::ln_bigint_digits(v);
    if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(a)))
        throw InvariantError("logarithm methods disagree");
    return a;
}

inline double ln_bigrat(const BigRat& r) {
    return ln_bigint(boost::multiprecision::numerator(r)) -
           ln_bigint(boost::multiprecision::denominator(r));
}

struct GrowthRatios {
    int n = 0;
    BigRat alpha;  // varphi_n / theta_n
    BigRat eta;    // theta_n / phi_n
    BigRat lambda; // tau_n / phi_n
    BigRat p;      // 3 / alpha_n
};

inline GrowthRatios growth_ratios(int n) {
    auto [f, t, p, tau] = matching_counts_tuple(n);
    GrowthRatios r;
    r.n = n;
    r.alpha = BigRat(f, t);
    r.eta = BigRat(t, p);
    r.lambda = BigRat(tau, p);
    r.p = BigRat(3) / r.alpha;
    return r;
}

// The constant bounding tau_{n+1}/tau_n^3 from above, assembled from the
// n = 3 ratio alpha and the limiting ratios eta -> 2/3, lambda -> 12/11.
inline BigRat q_constant() {
    const BigRat a3(108, 246), eta0(2, 3), lam0(12, 11);
    return 6 * (a3 * eta0 * eta0 / (lam0 * lam0) + a3 * eta0 / (lam0 * lam0 * lam0) +
                2 * eta0 * eta0 / (lam0 * lam0 * lam0));
}

struct GrowthBounds {
    int m = 0;
    double lower = 0.0;
    double upper = 0.0;
};

// Two-sided bounds on the exponential growth constant of the number of
// maximum matchings per vertex, from the level-m counts.
inline GrowthBounds z_bounds(int m) {
    if (m < 3) throw InputError("bounds need m >= 3");
    auto [f, t, p, tau] = matching_counts_tuple(m);
    const double pow3m = std::pow(3.0, m);
    GrowthBounds b;
    b.m = m;
    b.lower = (2.0 * ln_bigint(f) + ln_bigrat(BigRat(3 * t, f))) / pow3m;
    b.upper = (2.0 * ln_bigint(tau) + ln_bigrat(q_constant())) / pow3m;
    if (b.lower > b.upper) throw InvariantError("bounds crossed");
    return b;
}

// Point estimates from the counts themselves.
inline double z_estimate_per_vertex(int n) {
    auto [f, t, p, tau] = matching_counts_tuple(n);
    const double vn = (std::pow(3.0, n) + 5.0) / 2.0;
    return ln_bigint(tau) / vn;
}

inline double z_estimate_scaled(int n) {
    auto [f, t, p, tau] = matching_counts_tuple(n);
    return 2.0 * ln_bigint(tau) / std::pow(3.0, n);
}

} // namespace fgc
