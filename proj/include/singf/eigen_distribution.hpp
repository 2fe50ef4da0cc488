#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singf/division_algebra.hpp"
#include "singf/exact.hpp"
#include "singf/hypergeometric.hpp"
#include "singf/special_functions.hpp"
#include "singf/spectrum.hpp"

namespace singf {

/// Raised when an iterative search (quantile bracketing/bisection) exhausts
/// its iteration budget.
class non_convergence_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimensions of the two-Wishart eigenvalue problem: A has n degrees of
/// freedom, B has p, both of order m, with p >= m > n >= 1.
struct ProblemDims {
    int m;
    int n;
    int p;
    DivisionAlgebra beta;

    ProblemDims(int m_, int n_, int p_, DivisionAlgebra beta_)
        : m(m_), n(n_), p(p_), beta(beta_) {
        detail::require_problem_dims(m, n, p);
    }
};

/// Eigenvalues of the scale matrix Sigma = Sigma_1 inv(Sigma_2). Every
/// published formula depends on Sigma only spectrally; callers holding full
/// matrices diagonalize first.
class ScaleSpectrum {
  public:
    explicit ScaleSpectrum(Spectrum sigma) : sigma_(std::move(sigma)) {
        for (double v : sigma_.values())
            if (v <= 0.0)
                throw std::domain_error("ScaleSpectrum: eigenvalues must be positive");
        identity_ = sigma_.is_constant() && !sigma_.values().empty() &&
                    sigma_.values().front() == 1.0;
    }

    static ScaleSpectrum identity(int m) { return ScaleSpectrum(Spectrum::ones(m)); }

    const Spectrum& eigenvalues() const { return sigma_; }
    int dimension() const { return sigma_.dimension(); }
    bool is_identity() const { return identity_; }

    double logdet() const {
        double s = 0.0;
        for (double v : sigma_.values()) s += std::log(v);
        return s;
    }

  private:
    Spectrum sigma_;
    bool identity_ = false;
};

/// Truncation order of the finite series: r = (p - m + 1) beta / 2 - 1.
/// The largest-eigenvalue CDF is a finite series exactly when this is a
/// non-negative integer (partitions with first part beyond r vanish).
inline double finite_series_order(const ProblemDims& dims) {
    return (dims.p - dims.m + 1) * dims.beta.half_beta() - 1.0;
}

inline std::optional<int> finite_series_order_int(const ProblemDims& dims) {
    const int num = (dims.p - dims.m + 1) * dims.beta.beta();
    if (num % 2 != 0 || num < 2) return std::nullopt;
    return num / 2 - 1;
}

enum class CdfRoute { theorem, positive, finite, identity, transformed };

inline const char* route_name(CdfRoute r) {
    switch (r) {
        case CdfRoute::theorem: return "theorem";
        case CdfRoute::positive: return "positive";
        case CdfRoute::finite: return "finite";
        case CdfRoute::identity: return "identity";
        case CdfRoute::transformed: return "transformed";
    }
    return "?";
}

struct CdfValue {
    double probability = 0.0;
    SeriesResult diagnostics;
    CdfRoute route = CdfRoute::positive;
    bool clamped = false;  // raw value left [0,1] by more than the clamp tolerance
};

namespace detail {

constexpr double kCdfClampTolerance = 1e-8;

inline CdfValue finish_cdf(double raw, const SeriesResult& sr, CdfRoute route) {
    CdfValue v;
    v.route = route;
    v.diagnostics = sr;
    v.clamped = raw < -kCdfClampTolerance || raw > 1.0 + kCdfClampTolerance;
    v.probability = std::clamp(raw, 0.0, 1.0);
    return v;
}

inline void require_positive_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("largest-eigenvalue CDF: x must be positive");
}

inline void require_scale_dim(const ProblemDims& dims, const ScaleSpectrum& scale) {
    if (scale.dimension() != dims.m)
        throw std::invalid_argument("scale spectrum dimension must equal m");
}

}  // namespace detail

/// Largest-eigenvalue CDF in the two-matrix-argument series form
///   C2 |Sigma|^{-n b/2} x^{m n b/2}
///     2F1^{(b;m,n)}((n+p)b/2, m b/2; (m+n-1)b/2 + 1; -x inv(Sigma), I_n).
/// The series converges only for x below the smallest eigenvalue of Sigma;
/// kept for cross-validation of the other routes.
inline CdfValue cdf_largest_theorem(double x, const ProblemDims& dims,
                                    const ScaleSpectrum& scale,
                                    const TruncationPolicy& trunc = {}) {
    detail::require_positive_x(x);
    detail::require_scale_dim(dims, scale);
    const double hb = dims.beta.half_beta();
    std::vector<double> arg;
    for (double s : scale.eigenvalues().values()) arg.push_back(-x / s);
    const HypergeomParams params{{(dims.n + dims.p) * hb, dims.m * hb},
                                 {(dims.m + dims.n - 1) * hb + 1.0},
                                 dims.beta};
    const SeriesResult sr =
        hyp_two_matrix(params, Spectrum(std::move(arg)), Spectrum::ones(dims.n), trunc);
    const double lnpre = constant_C2_ln(dims.m, dims.n, dims.p, dims.beta) -
                         dims.n * hb * scale.logdet() +
                         dims.m * dims.n * hb * std::log(x);
    return detail::finish_cdf(std::exp(lnpre) * sr.value, sr, CdfRoute::theorem);
}

/// Positive-term series form, convergent for every x > 0:
///   C2 x^{m n b/2} |Sigma|^{p b/2} / |Sigma + xI|^{(p+n)b/2}
///     2F1^{(b;m)}((m-1)b/2 + 1, (n+p)b/2; (m+n-1)b/2 + 1; x inv(Sigma + xI)).
inline CdfValue cdf_largest_positive(double x, const ProblemDims& dims,
                                     const ScaleSpectrum& scale,
                                     const TruncationPolicy& trunc = {}) {
    detail::require_positive_x(x);
    detail::require_scale_dim(dims, scale);
    const double hb = dims.beta.half_beta();
    std::vector<double> arg;
    double log_shifted = 0.0;
    for (double s : scale.eigenvalues().values()) {
        arg.push_back(x / (s + x));
        log_shifted += std::log(s + x);
    }
    const HypergeomParams params{{(dims.m - 1) * hb + 1.0, (dims.n + dims.p) * hb},
                                 {(dims.m + dims.n - 1) * hb + 1.0},
                                 dims.beta};
    const SeriesResult sr = hyp_matrix(params, Spectrum(std::move(arg)), trunc);
    const double lnpre = constant_C2_ln(dims.m, dims.n, dims.p, dims.beta) +
                         dims.m * dims.n * hb * std::log(x) +
                         dims.p * hb * scale.logdet() -
                         (dims.p + dims.n) * hb * log_shifted;
    return detail::finish_cdf(std::exp(lnpre) * sr.value, sr, CdfRoute::positive);
}

/// Finite series, exact when r = (p-m+1)b/2 - 1 is a non-negative integer:
///   C2 x^{m n b/2} |Sigma + xI|^{-n b/2}
///     2F1^{(b;m)}(n b/2, (m-p-1)b/2 + 1; (m+n-1)b/2 + 1; x inv(Sigma + xI)),
/// summed exactly over partitions with first part <= r (the negative upper
/// Pochhammer kills larger first rows, the n b/2 factor kills length > n).
inline CdfValue cdf_largest_finite(double x, const ProblemDims& dims,
                                   const ScaleSpectrum& scale) {
    detail::require_positive_x(x);
    detail::require_scale_dim(dims, scale);
    const std::optional<int> r = finite_series_order_int(dims);
    if (!r)
        throw std::domain_error(
            "cdf_largest_finite: (p-m+1)*beta/2 - 1 = " +
            std::to_string(finite_series_order(dims)) +
            " is not a non-negative integer; use the positive-series route");
    const double hb = dims.beta.half_beta();
    std::vector<double> arg;
    double log_shifted = 0.0;
    for (double s : scale.eigenvalues().values()) {
        arg.push_back(x / (s + x));
        log_shifted += std::log(s + x);
    }
    const HypergeomParams params{{dims.n * hb, (dims.m - dims.p - 1) * hb + 1.0},
                                 {(dims.m + dims.n - 1) * hb + 1.0},
                                 dims.beta};
    TruncationPolicy trunc;
    trunc.max_degree = *r * dims.n;
    trunc.max_part = std::max(*r, 1);  // r = 0 leaves only the empty partition
    const SeriesResult sr = hyp_matrix(params, Spectrum(std::move(arg)), trunc);
    const double lnpre = constant_C2_ln(dims.m, dims.n, dims.p, dims.beta) +
                         dims.m * dims.n * hb * std::log(x) - dims.n * hb * log_shifted;
    return detail::finish_cdf(std::exp(lnpre) * sr.value, sr, CdfRoute::finite);
}

/// Euler transform of the positive series: identical prefactor and argument
/// to the finite form, summed as an infinite series under the caller's
/// policy. Its coefficients decay like k^{-p*beta/2 - 1}, so it converges
/// quickly for every x > 0 — unlike the positive series, whose terms peak
/// near degree |c - a - b| / log(1/t) and need very deep truncation once
/// x is moderate. Used by the automatic route when no finite series exists.
inline CdfValue cdf_largest_transformed(double x, const ProblemDims& dims,
                                        const ScaleSpectrum& scale,
                                        const TruncationPolicy& trunc = {}) {
    detail::require_positive_x(x);
    detail::require_scale_dim(dims, scale);
    const double hb = dims.beta.half_beta();
    std::vector<double> arg;
    double log_shifted = 0.0;
    for (double s : scale.eigenvalues().values()) {
        arg.push_back(x / (s + x));
        log_shifted += std::log(s + x);
    }
    const HypergeomParams params{{dims.n * hb, (dims.m - dims.p - 1) * hb + 1.0},
                                 {(dims.m + dims.n - 1) * hb + 1.0},
                                 dims.beta};
    const SeriesResult sr = hyp_matrix(params, Spectrum(std::move(arg)), trunc);
    const double lnpre = constant_C2_ln(dims.m, dims.n, dims.p, dims.beta) +
                         dims.m * dims.n * hb * std::log(x) - dims.n * hb * log_shifted;
    return detail::finish_cdf(std::exp(lnpre) * sr.value, sr, CdfRoute::transformed);
}

/// Sigma = I, beta = 1 form in t = x/(1+x):
///   C3 t^{mn/2} 2F1((m-p+1)/2, m/2; (n+m+1)/2; t I_n).
inline CdfValue cdf_largest_identity(double x, const ProblemDims& dims,
                                     const TruncationPolicy& trunc = {}) {
    if (dims.beta.beta() != 1)
        throw std::domain_error("cdf_largest_identity: requires beta = 1");
    if (x < 0.0) throw std::domain_error("largest-eigenvalue CDF: x must be non-negative");
    if (x == 0.0) return detail::finish_cdf(0.0, SeriesResult{0.0, 0, 0.0, true},
                                            CdfRoute::identity);
    const double t = x / (1.0 + x);
    const HypergeomParams params{{(dims.m - dims.p + 1) / 2.0, dims.m / 2.0},
                                 {(dims.n + dims.m + 1) / 2.0},
                                 dims.beta};
    TruncationPolicy tp = trunc;
    if (const std::optional<int> r = finite_series_order_int(dims)) {
        tp.max_degree = *r * dims.n;
        tp.max_part = std::max(*r, 1);
    }
    const SeriesResult sr = hyp_matrix(params, Spectrum::constant(dims.n, t), tp);
    const double lnpre = constant_C3_ln(dims.m, dims.n, dims.p) +
                         0.5 * dims.m * dims.n * std::log(t);
    return detail::finish_cdf(std::exp(lnpre) * sr.value, sr, CdfRoute::identity);
}

/// Default route: finite when available, the identity form for Sigma = I at
/// beta = 1, otherwise the transformed series.
inline CdfValue cdf_largest(double x, const ProblemDims& dims, const ScaleSpectrum& scale,
                            const TruncationPolicy& trunc = {}) {
    if (finite_series_order_int(dims)) return cdf_largest_finite(x, dims, scale);
    if (dims.beta.beta() == 1 && scale.is_identity())
        return cdf_largest_identity(x, dims, trunc);
    return cdf_largest_transformed(x, dims, scale, trunc);
}

/// Joint eigenvalue density of the rank-n F-matrix at q_1 > ... > q_n > 0:
///   C1 |Q|^{(m-n+1)b/2-1} prod_{i<j}(q_i - q_j)^b
///     1F0^{(b;m,n)}((p+n)b/2; -inv(Sigma), Q).
/// Ties give 0 (the Vandermonde factor vanishes); unordered or non-positive
/// input is a domain error.
inline double density_f_matrix(const std::vector<double>& q, const ProblemDims& dims,
                               const ScaleSpectrum& scale,
                               const TruncationPolicy& trunc = {}) {
    detail::require_scale_dim(dims, scale);
    if (static_cast<int>(q.size()) != dims.n)
        throw std::invalid_argument("density_f_matrix: need exactly n eigenvalues");
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!(q[i] > 0.0))
            throw std::domain_error("density_f_matrix: eigenvalues must be positive");
        if (i > 0 && q[i] > q[i - 1])
            throw std::domain_error("density_f_matrix: eigenvalues must be decreasing");
    }
    for (std::size_t i = 1; i < q.size(); ++i)
        if (q[i] == q[i - 1]) return 0.0;
    const double hb = dims.beta.half_beta();
    double lnpre = constant_C1_ln(dims.m, dims.n, dims.p, dims.beta, scale.logdet());
    for (double v : q) lnpre += ((dims.m - dims.n + 1) * hb - 1.0) * std::log(v);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            lnpre += dims.beta.beta() * std::log(q[i] - q[j]);
    std::vector<double> neg_inv;
    for (double s : scale.eigenvalues().values()) neg_inv.push_back(-1.0 / s);
    const HypergeomParams params{{(dims.p + dims.n) * hb}, {}, dims.beta};
    const SeriesResult sr =
        hyp_two_matrix(params, Spectrum(std::move(neg_inv)), Spectrum(q), trunc);
    return std::exp(lnpre) * sr.value;
}

/// Exact finite-series CDF as a polynomial in t = x/(1+x) with rational
/// coefficients (beta = 1, Sigma = I):
///   F(x) = constant * t^{power} * sum_j coefficients[j] t^j.
struct RationalPoly {
    Rational constant;
    std::vector<Rational> coefficients;
    int power_numerator = 0;  // leading exponent m n / 2, kept exact
    int power_denominator = 2;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    /// Horner evaluation in extended precision: the coefficients alternate
    /// with large magnitudes (condition number ~1e7 at table-scale dims), so
    /// plain double would leave ~1e-9 noise in the CDF.
    double evaluate_cdf(double x) const {
        if (x <= 0.0) return 0.0;
        const long double t = static_cast<long double>(x) / (1.0L + x);
        long double poly = 0.0L;
        for (int j = degree(); j >= 0; --j)
            poly = poly * t + static_cast<long double>(coefficients[j]);
        const long double lead =
            std::pow(t, static_cast<long double>(power_numerator) / power_denominator);
        return static_cast<double>(static_cast<long double>(constant) * lead * poly);
    }

    /// Exact CDF limit as x -> infinity (t = 1): constant * sum of coefficients.
    Rational value_at_t_one() const {
        Rational s = 0;
        for (const Rational& c : coefficients) s += c;
        return constant * s;
    }
};

/// Coefficients of the finite series for Sigma = I, beta = 1:
///   c_k = sum_{kappa of k, kappa_1 <= r} ((m-p+1)/2)_kappa (m/2)_kappa
///         C_kappa(I_n) / (k! ((m+n+1)/2)_kappa),  k = 0..rn,
/// all exact rationals.
inline RationalPoly finite_series_polynomial(const ProblemDims& dims) {
    if (dims.beta.beta() != 1)
        throw std::domain_error("finite_series_polynomial: exact path requires beta = 1");
    const std::optional<int> r = finite_series_order_int(dims);
    if (!r)
        throw std::domain_error(
            "finite_series_polynomial: (p-m+1)/2 - 1 = " +
            std::to_string(finite_series_order(dims)) + " is not a non-negative integer");
    RationalPoly poly;
    poly.constant = constant_C3_exact(dims.m, dims.n, dims.p);
    poly.power_numerator = dims.m * dims.n;
    poly.power_denominator = 2;
    const Rational a(dims.m - dims.p + 1, 2);
    const Rational b(dims.m, 2);
    const Rational c(dims.m + dims.n + 1, 2);
    const int top = *r * dims.n;
    poly.coefficients.assign(top + 1, Rational(0));
    for (int k = 0; k <= top; ++k) {
        Rational ck = 0;
        for (const Partition& kappa : enumerate_bounded(k, dims.n, std::max(*r, 1)))
            ck += pochhammer_exact(a, kappa, 1) * pochhammer_exact(b, kappa, 1) *
                  jack_identity_exact(kappa, dims.n, 1) /
                  (Rational(factorial_big(k)) * pochhammer_exact(c, kappa, 1));
        poly.coefficients[k] = ck;
    }
    return poly;
}

namespace detail {

template <typename Cdf>
double invert_monotone_cdf(double alpha, Cdf&& cdf) {
    double hi = 1.0;
    int guard = 0;
    while (cdf(hi) < alpha) {
        hi *= 2.0;
        if (++guard > 200)
            throw non_convergence_error("quantile: bracketing failed to enclose alpha");
    }
    double lo = 0.0;
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < alpha ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Inverts the monotone CDF by bracket doubling plus bisection to 1e-12
/// relative in x. When the exact polynomial form exists (beta = 1, Sigma = I,
/// integer truncation order) the search runs on it: one exact construction,
/// then cheap extended-precision evaluations.
inline double quantile(double alpha, const ProblemDims& dims, const ScaleSpectrum& scale,
                       const TruncationPolicy& trunc = {}) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("quantile: alpha must lie in (0, 1)");
    if (dims.beta.beta() == 1 && scale.is_identity() && finite_series_order_int(dims)) {
        const RationalPoly poly = finite_series_polynomial(dims);
        return detail::invert_monotone_cdf(alpha,
                                           [&](double x) { return poly.evaluate_cdf(x); });
    }
    return detail::invert_monotone_cdf(
        alpha, [&](double x) { return cdf_largest(x, dims, scale, trunc).probability; });
}

/// Critical value for the largest-root test of a balanced one-way layout:
/// groups g, variables v, per-group sample size N map to
/// n = g - 1, m = v, p = g (N - 1), beta = 1, Sigma = I.
inline double roy_test_critical(int groups, int variables, int per_group_n, double alpha,
                                const TruncationPolicy& trunc = {}) {
    if (groups < 2) throw std::domain_error("roy_test_critical: need at least two groups");
    if (groups > variables)
        throw std::domain_error(
            "roy_test_critical: the largest-root distribution requires the number of "
            "groups to be less than or equal to the number of variables");
    if (per_group_n < 2)
        throw std::domain_error("roy_test_critical: need at least two observations per group");
    const ProblemDims dims(variables, groups - 1, groups * (per_group_n - 1),
                           DivisionAlgebra::real());
    return quantile(alpha, dims, ScaleSpectrum::identity(dims.m), trunc);
}

}  // namespace singf
