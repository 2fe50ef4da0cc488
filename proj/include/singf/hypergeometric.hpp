#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "singf/division_algebra.hpp"
#include "singf/jack.hpp"
#include "singf/partitions.hpp"
#include "singf/special_functions.hpp"
#include "singf/spectrum.hpp"

namespace singf {

/// Upper and lower parameter vectors of a {}_pF_q series.
struct HypergeomParams {
    std::vector<double> upper;
    std::vector<double> lower;
    DivisionAlgebra beta;
};

/// max_degree is the truncation level K; max_part switches to exact
/// summation over partitions with first part <= max_part (provably finite
/// series); tail_tolerance stops early once a whole-degree increment falls
/// below tolerance * |partial sum|.
struct TruncationPolicy {
    int max_degree = 30;
    std::optional<int> max_part = std::nullopt;
    std::optional<double> tail_tolerance = std::nullopt;
};

struct SeriesResult {
    double value = 0.0;
    int degree_used = 0;
    double last_increment = 0.0;
    bool converged = false;
};

namespace detail {

/// Error-free-ish accumulation (Neumaier). Terms of alternating series such
/// as arguments -x*inv(Sigma) cancel heavily; the fixed summation order plus
/// compensation keeps results reproducible bit-for-bit.
struct CompensatedSum {
    double sum = 0.0, comp = 0.0;

    void add(double term) {
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

/// Product of upper over lower Pochhammers at kappa. Returns false when a
/// lower Pochhammer vanishes while the numerator does not (genuine zero
/// denominator); a vanishing numerator simply kills the term.
inline bool pochhammer_ratio(const HypergeomParams& params, const Partition& kappa,
                             double* out) {
    double num = 1.0;
    for (double a : params.upper) {
        num *= pochhammer_beta(a, kappa, params.beta);
        if (num == 0.0) {
            *out = 0.0;
            return true;
        }
    }
    double den = 1.0;
    for (double b : params.lower) den *= pochhammer_beta(b, kappa, params.beta);
    if (den == 0.0) return false;
    *out = num / den;
    return true;
}

template <typename JackTerm>
SeriesResult sum_partition_series(const HypergeomParams& params, const TruncationPolicy& trunc,
                                  int max_length, bool divergence_suspected,
                                  JackTerm&& jack_term) {
    CompensatedSum acc;
    SeriesResult res;
    double k_factorial = 1.0;
    for (int k = 0; k <= trunc.max_degree; ++k) {
        if (k > 0) k_factorial *= k;
        const PartitionSet ps = trunc.max_part
                                    ? enumerate_bounded(k, max_length, *trunc.max_part)
                                    : enumerate_partitions(k, max_length);
        CompensatedSum inc;
        for (const Partition& kappa : ps) {
            double ratio;
            if (!pochhammer_ratio(params, kappa, &ratio))
                throw std::domain_error(
                    "hypergeometric series: lower parameter produces a zero Pochhammer");
            if (ratio == 0.0) continue;
            inc.add(ratio * jack_term(kappa) / k_factorial);
        }
        const double degree_increment = inc.value();
        acc.add(degree_increment);
        res.degree_used = k;
        res.last_increment = degree_increment;
        if (trunc.tail_tolerance && k >= 1 &&
            std::abs(degree_increment) <=
                *trunc.tail_tolerance * std::max(std::abs(acc.value()), 1e-300)) {
            res.converged = true;
            break;
        }
    }
    res.value = acc.value();
    if (trunc.max_part) {
        res.converged = true;  // exact finite summation
    } else if (!trunc.tail_tolerance) {
        res.converged = std::abs(res.last_increment) <=
                        1e-13 * std::max(std::abs(res.value), 1e-300);
    }
    if (divergence_suspected) res.converged = false;
    return res;
}

}  // namespace detail

/// Truncated series for the hypergeometric function of one matrix argument:
/// sum_k sum_{kappa in P^k_m} [prod (a_i)_kappa / prod (b_j)_kappa]
/// C_kappa(x) / k!, in the fixed reverse-lexicographic partition order.
inline SeriesResult hyp_matrix(const HypergeomParams& params, const Spectrum& x,
                               const TruncationPolicy& trunc) {
    const int m = x.dimension();
    if (m < 1) throw std::invalid_argument("hyp_matrix: spectrum must be non-empty");
    JackTable table(params.beta);
    const JackValues values = table.eval_all(x, trunc.max_degree, m);
    // Series of {}_{p}F_{q} type with p > q diverge outside the unit spectral
    // ball; flag rather than silently summing garbage.
    const bool suspect = params.upper.size() > params.lower.size() && !trunc.max_part &&
                         x.max_abs() >= 1.0;
    return detail::sum_partition_series(params, trunc, m, suspect,
                                        [&](const Partition& kappa) { return values.at(kappa); });
}

/// Heterogeneous series with two matrix arguments (dim a = m >= dim b = n):
/// sum_k sum_{kappa in P^k_n} [ratio] C_kappa(a) C_kappa(b) / (k! C_kappa(I_m)).
inline SeriesResult hyp_two_matrix(const HypergeomParams& params, const Spectrum& a,
                                   const Spectrum& b, const TruncationPolicy& trunc) {
    const int m = a.dimension();
    const int n = b.dimension();
    if (n < 1) throw std::invalid_argument("hyp_two_matrix: second spectrum must be non-empty");
    if (n > m)
        throw std::invalid_argument(
            "hyp_two_matrix: first argument must have dimension >= second");
    JackTable table(params.beta);
    const JackValues va = table.eval_all(a, trunc.max_degree, n);
    const JackValues vb = table.eval_all(b, trunc.max_degree, n);
    const bool suspect = params.upper.size() > params.lower.size() && !trunc.max_part &&
                         a.max_abs() * b.max_abs() >= 1.0;
    return detail::sum_partition_series(
        params, trunc, n, suspect, [&](const Partition& kappa) {
            return va.at(kappa) * vb.at(kappa) / table.identity_value(kappa, m);
        });
}

}  // namespace singf
