#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "singf/division_algebra.hpp"
#include "singf/partitions.hpp"

namespace singf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(int k) {
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

inline Rational rational_pow(const Rational& x, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

/// A gamma-function value at an integer or half-integer argument, kept exact
/// as rational * sqrt(pi)^sqrt_pi_power.
struct ExactGamma {
    Rational value;
    int sqrt_pi_power = 0;
};

/// Gamma(z) for z a positive integer or half-integer:
/// Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi), Gamma(j) = (j-1)!.
inline ExactGamma gamma_exact(const Rational& z) {
    if (z <= 0) throw std::domain_error("gamma_exact: argument must be positive");
    const BigInt num = numerator(z);
    const BigInt den = denominator(z);
    if (den == 1) {
        return {Rational(factorial_big(static_cast<int>(num) - 1)), 0};
    }
    if (den == 2) {
        const int j = static_cast<int>((num - 1) / 2);
        Rational v(factorial_big(2 * j), factorial_big(j) * (BigInt(1) << (2 * j)));
        return {v, 1};
    }
    throw std::invalid_argument("gamma_exact: argument must be an integer or half-integer");
}

/// Gamma_m^beta(c) = pi^{m(m-1)beta/4} prod_i Gamma(c - (i-1)beta/2),
/// with every scalar gamma argument an integer or half-integer.
inline ExactGamma mv_gamma_exact(int m, int beta, const Rational& c) {
    ExactGamma out{Rational(1), m * (m - 1) * beta / 2};  // pi power in sqrt(pi) units
    for (int i = 0; i < m; ++i) {
        ExactGamma g = gamma_exact(c - Rational(i * beta, 2));
        out.value *= g.value;
        out.sqrt_pi_power += g.sqrt_pi_power;
    }
    return out;
}

namespace detail {

inline Rational exact_gamma_ratio(const ExactGamma& n1, const ExactGamma& n2,
                                  const ExactGamma& d1, const ExactGamma& d2,
                                  const char* what) {
    const int residual = n1.sqrt_pi_power + n2.sqrt_pi_power - d1.sqrt_pi_power -
                         d2.sqrt_pi_power;
    if (residual != 0)
        throw std::logic_error(std::string(what) + ": sqrt(pi) powers do not cancel");
    return n1.value * n2.value / (d1.value * d2.value);
}

}  // namespace detail

/// Exact C2 for integer/half-integer gamma arguments. The sqrt(pi) powers
/// cancel for every admissible (m, n, p, beta).
inline Rational constant_C2_exact(int m, int n, int p, int beta) {
    const Rational hb(beta, 2);
    return detail::exact_gamma_ratio(
        mv_gamma_exact(m, beta, (n + p) * hb), mv_gamma_exact(n, beta, (n - 1) * hb + 1),
        mv_gamma_exact(m, beta, p * hb), mv_gamma_exact(n, beta, (m + n - 1) * hb + 1),
        "constant_C2_exact");
}

inline Rational constant_C3_exact(int m, int n, int p) {
    return detail::exact_gamma_ratio(
        mv_gamma_exact(m, 1, Rational(n + p, 2)), mv_gamma_exact(n, 1, Rational(n + 1, 2)),
        mv_gamma_exact(m, 1, Rational(p, 2)), mv_gamma_exact(n, 1, Rational(m + n + 1, 2)),
        "constant_C3_exact");
}

/// (a)_kappa^beta as an exact rational.
inline Rational pochhammer_exact(const Rational& a, const Partition& kappa, int beta) {
    Rational r = 1;
    for (int i = 0; i < kappa.length(); ++i) {
        const Rational base = a - Rational(i * beta, 2);
        for (int t = 0; t < kappa.part(i); ++t) r *= base + t;
    }
    return r;
}

/// C_kappa^beta(I_d) as an exact rational:
/// alpha^{2k} k! (d*beta/2)_kappa^beta / (c_kappa(alpha) c'_kappa(alpha))
/// with alpha = 2/beta and c, c' the upper/lower hook products.
inline Rational jack_identity_exact(const Partition& kappa, int d, int beta) {
    if (kappa.length() > d) return 0;
    const int k = kappa.weight();
    if (k == 0) return 1;
    const Rational alpha(2, beta);
    const std::vector<int> conj = kappa.conjugate();
    Rational upper = 1, lower = 1;
    for (int i = 0; i < kappa.length(); ++i)
        for (int j = 0; j < kappa.part(i); ++j) {
            const int arm = kappa.part(i) - j - 1;
            const int leg = conj[j] - i - 1;
            upper *= alpha * arm + leg + 1;
            lower *= alpha * (arm + 1) + leg;
        }
    return rational_pow(alpha, 2 * k) * Rational(factorial_big(k)) *
           pochhammer_exact(Rational(d * beta, 2), kappa, beta) / (upper * lower);
}

}  // namespace singf
