#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "singf/division_algebra.hpp"
#include "singf/partitions.hpp"

namespace singf {

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
inline double rising_factorial(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x + i;
    return r;
}

/// log Gamma_m^beta(c) = log[ pi^{m(m-1)beta/4} prod_{i=1}^m Gamma(c - (i-1)beta/2) ].
/// Requires c > (m-1)beta/2, else some factor hits a pole.
inline double mv_gamma_ln(int m, const DivisionAlgebra& da, double c) {
    if (m < 1) throw std::invalid_argument("mv_gamma_ln: m must be positive");
    const double hb = da.half_beta();
    if (!(c > (m - 1) * hb))
        throw std::domain_error("mv_gamma_ln: requires c > (m-1)*beta/2, got c = " +
                                std::to_string(c) + ", m = " + std::to_string(m));
    double r = 0.25 * m * (m - 1) * da.beta() * std::log(std::numbers::pi);
    for (int i = 0; i < m; ++i) r += std::lgamma(c - i * hb);
    return r;
}

/// beta-generalized Pochhammer symbol (a)_kappa^beta =
/// prod_i ( a - (i-1)beta/2 )_{kappa_i}. Zero is a legitimate value: the
/// vanishing of (n*beta/2)_kappa for partitions longer than n is what
/// truncates the largest-eigenvalue series.
inline double pochhammer_beta(double a, const Partition& kappa, const DivisionAlgebra& da) {
    const double hb = da.half_beta();
    double r = 1.0;
    for (int i = 0; i < kappa.length(); ++i) {
        r *= rising_factorial(a - i * hb, kappa.part(i));
        if (r == 0.0) return 0.0;
    }
    return r;
}

/// Exponent r in the eigenvalue-density constant: 0 for beta = 1 and
/// -n*beta/2 for beta = 2, 4. Distinct from the finite-series truncation
/// order, which lives with the distribution routines.
inline double volume_exponent(const DivisionAlgebra& da, int n) {
    return da.beta() == 1 ? 0.0 : -n * da.half_beta();
}

namespace detail {

inline void require_problem_dims(int m, int n, int p) {
    if (!(n >= 1 && m > n && p >= m))
        throw std::domain_error("requires p >= m > n >= 1, got m = " + std::to_string(m) +
                                ", n = " + std::to_string(n) + ", p = " + std::to_string(p));
}

}  // namespace detail

/// log of C2 = Gamma_m{(n+p)b/2} Gamma_n{(n-1)b/2+1} /
///             [ Gamma_m{p b/2} Gamma_n{(m+n-1)b/2+1} ].
inline double constant_C2_ln(int m, int n, int p, const DivisionAlgebra& da) {
    detail::require_problem_dims(m, n, p);
    const double hb = da.half_beta();
    return mv_gamma_ln(m, da, (n + p) * hb) + mv_gamma_ln(n, da, (n - 1) * hb + 1.0) -
           mv_gamma_ln(m, da, p * hb) - mv_gamma_ln(n, da, (m + n - 1) * hb + 1.0);
}

/// log of C3 = Gamma_m{(n+p)/2} Gamma_n{(n+1)/2} /
///             [ Gamma_m{p/2} Gamma_n{(m+n+1)/2} ]  (real case only).
inline double constant_C3_ln(int m, int n, int p) {
    detail::require_problem_dims(m, n, p);
    const DivisionAlgebra da = DivisionAlgebra::real();
    return mv_gamma_ln(m, da, (n + p) / 2.0) + mv_gamma_ln(n, da, (n + 1) / 2.0) -
           mv_gamma_ln(m, da, p / 2.0) - mv_gamma_ln(n, da, (m + n + 1) / 2.0);
}

/// log of the joint eigenvalue density constant
/// C1 = pi^{n^2 b/2 + r} |Sigma|^{-n b/2} Gamma_m{(n+p)b/2} /
///      [ Gamma_n{n b/2} Gamma_m{p b/2} Gamma_n{m b/2} ],
/// with |Sigma| supplied through sigma_logdet.
inline double constant_C1_ln(int m, int n, int p, const DivisionAlgebra& da,
                             double sigma_logdet) {
    detail::require_problem_dims(m, n, p);
    const double hb = da.half_beta();
    const double pi_exp = 0.5 * n * n * da.beta() + volume_exponent(da, n);
    return pi_exp * std::log(std::numbers::pi) - n * hb * sigma_logdet +
           mv_gamma_ln(m, da, (n + p) * hb) - mv_gamma_ln(n, da, n * hb) -
           mv_gamma_ln(m, da, p * hb) - mv_gamma_ln(n, da, m * hb);
}

}  // namespace singf
