#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "singf/division_algebra.hpp"
#include "singf/partitions.hpp"
#include "singf/special_functions.hpp"
#include "singf/spectrum.hpp"

namespace singf {

namespace detail {

inline double ipow(double x, int n) {
    double r = 1.0, b = x;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

inline double factorial_d(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

/// alpha^k k! / (c_kappa c'_kappa): the factor taking the J-normalized Jack
/// function to the C normalization fixed by sum_{kappa in P^k_d} C_kappa(x)
/// = (sum x_i)^k. c and c' are the upper/lower hook products.
inline double c_normalization(const Partition& kappa, double alpha) {
    const int k = kappa.weight();
    if (k == 0) return 1.0;
    const std::vector<int> conj = kappa.conjugate();
    double upper = 1.0, lower = 1.0;
    for (int i = 0; i < kappa.length(); ++i)
        for (int j = 0; j < kappa.part(i); ++j) {
            const int arm = kappa.part(i) - j - 1;
            const int leg = conj[j] - i - 1;
            upper *= alpha * arm + leg + 1;
            lower *= alpha * (arm + 1) + leg;
        }
    return ipow(alpha, k) * factorial_d(k) / (upper * lower);
}

/// Coefficient in the one-more-variable expansion
///   J_kappa(x_1..x_t) = sum_{mu} J_mu(x_1..x_{t-1}) x_t^{|kappa|-|mu|} B(kappa, mu),
/// where mu runs over horizontal strips of kappa. Each box uses its lower
/// hook when the column has equal length in kappa and mu, else its upper hook.
inline double branch_coefficient(const Partition& kappa, const Partition& mu, double alpha) {
    const std::vector<int> kconj = kappa.conjugate();
    const std::vector<int> mconj = mu.conjugate();
    auto col = [](const std::vector<int>& c, int j) {
        return j < static_cast<int>(c.size()) ? c[j] : 0;
    };
    double num = 1.0;
    for (int i = 0; i < kappa.length(); ++i)
        for (int j = 0; j < kappa.part(i); ++j) {
            const int arm = kappa.part(i) - j - 1;
            const int leg = kconj[j] - i - 1;
            num *= (kconj[j] == col(mconj, j)) ? leg + alpha * (arm + 1)
                                               : leg + 1 + alpha * arm;
        }
    double den = 1.0;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j) {
            const int arm = mu.part(i) - j - 1;
            const int leg = mconj[j] - i - 1;
            den *= (col(kconj, j) == mconj[j]) ? leg + alpha * (arm + 1)
                                               : leg + 1 + alpha * arm;
        }
    return num / den;
}

/// Visits every mu with kappa_{i+1} <= mu_i <= kappa_i (horizontal strips).
template <typename F>
void for_each_horizontal_strip(const Partition& kappa, F&& fn) {
    const int len = kappa.length();
    std::vector<int> mu(len);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == len) {
            fn(Partition(std::vector<int>(mu.begin(), mu.begin() + len)));
            return;
        }
        for (int v = kappa.part(i); v >= kappa.part(i + 1); --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// Values of C_kappa^beta at one spectrum, for every kappa within the degree
/// and length range it was built for. Absent partitions evaluate to 0
/// (a Jack polynomial in d variables vanishes when the partition is longer
/// than d).
class JackValues {
  public:
    double at(const Partition& kappa) const {
        auto it = values_.find(kappa);
        return it == values_.end() ? 0.0 : it->second;
    }

    void set(const Partition& kappa, double v) { values_[kappa] = v; }

    const std::map<Partition, double>& all() const { return values_; }

  private:
    std::map<Partition, double> values_;
};

namespace detail {

/// Recursion over the number of variables; valid for arbitrary real spectra
/// (plain polynomial evaluation, no sign restrictions).
inline JackValues jack_eval_all_general(const Spectrum& x, const DivisionAlgebra& da,
                                        int max_degree, int max_length) {
    const int d = x.dimension();
    const double alpha = da.alpha();
    const int cap = std::min(max_length, d);
    JackValues out;
    std::map<Partition, double> prev;
    prev[Partition()] = 1.0;
    for (int t = 1; t <= d; ++t) {
        const double xt = x.values()[t - 1];
        const int len_cap = std::min(t, cap);
        std::map<Partition, double> cur;
        for (int k = 0; k <= max_degree; ++k)
            for (const Partition& kappa : enumerate_partitions(k, len_cap)) {
                double s = 0.0;
                for_each_horizontal_strip(kappa, [&](const Partition& mu) {
                    auto it = prev.find(mu);
                    if (it == prev.end()) return;
                    s += it->second * ipow(xt, k - mu.weight()) *
                         branch_coefficient(kappa, mu, alpha);
                });
                cur.emplace(kappa, s);
            }
        prev = std::move(cur);
    }
    for (const auto& [kappa, j_value] : prev)
        out.set(kappa, c_normalization(kappa, alpha) * j_value);
    return out;
}

inline double jack_identity_closed(const Partition& kappa, int d, const DivisionAlgebra& da) {
    if (kappa.length() > d) return 0.0;
    const int k = kappa.weight();
    if (k == 0) return 1.0;
    const double alpha = da.alpha();
    const std::vector<int> conj = kappa.conjugate();
    double upper = 1.0, lower = 1.0;
    for (int i = 0; i < kappa.length(); ++i)
        for (int j = 0; j < kappa.part(i); ++j) {
            const int arm = kappa.part(i) - j - 1;
            const int leg = conj[j] - i - 1;
            upper *= alpha * arm + leg + 1;
            lower *= alpha * (arm + 1) + leg;
        }
    return ipow(alpha, 2 * k) * factorial_d(k) *
           pochhammer_beta(d * da.half_beta(), kappa, da) / (upper * lower);
}

}  // namespace detail

/// Memoizing evaluator for C_kappa^beta. Identity values and branching
/// coefficients depend only on (beta, kappa, d), so they are cached under a
/// mutex and shared across every series evaluation that reuses the table;
/// batch evaluations otherwise build local state only.
class JackTable {
  public:
    explicit JackTable(const DivisionAlgebra& da) : da_(da) {}

    const DivisionAlgebra& algebra() const { return da_; }

    /// C_kappa^beta(I_d) by closed form (hook products), cached by (kappa, d).
    double identity_value(const Partition& kappa, int d) const {
        const auto key = std::make_pair(kappa, d);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = identity_cache_.find(key);
            if (it != identity_cache_.end()) return it->second;
        }
        const double v = detail::jack_identity_closed(kappa, d, da_);
        std::lock_guard<std::mutex> lock(mutex_);
        identity_cache_.emplace(key, v);
        return v;
    }

    /// Every C_kappa^beta(x) with |kappa| <= max_degree, len(kappa) <=
    /// max_length, computed in one sweep. Constant spectra t*I_d take the
    /// closed-form shortcut t^{|kappa|} C_kappa(I_d).
    JackValues eval_all(const Spectrum& x, int max_degree, int max_length) const {
        const int d = x.dimension();
        const int cap = std::min(max_length, d);
        JackValues out;
        if (d == 0) {
            out.set(Partition(), 1.0);
            return out;
        }
        if (x.is_constant()) {
            const double t = x.values().front();
            for (int k = 0; k <= max_degree; ++k) {
                const double tk = detail::ipow(t, k);
                for (const Partition& kappa : enumerate_partitions(k, cap))
                    out.set(kappa, tk * identity_value(kappa, d));
            }
            return out;
        }
        std::map<Partition, double> prev;
        prev[Partition()] = 1.0;
        for (int t = 1; t <= d; ++t) {
            const double xt = x.values()[t - 1];
            const int len_cap = std::min(t, cap);
            std::map<Partition, double> cur;
            for (int k = 0; k <= max_degree; ++k)
                for (const Partition& kappa : enumerate_partitions(k, len_cap)) {
                    double s = 0.0;
                    for (const auto& [mu, coef] : strips(kappa)) {
                        auto it = prev.find(mu);
                        if (it == prev.end()) continue;
                        s += it->second * detail::ipow(xt, k - mu.weight()) * coef;
                    }
                    cur.emplace(kappa, s);
                }
            prev = std::move(cur);
        }
        const double alpha = da_.alpha();
        for (const auto& [kappa, j_value] : prev)
            out.set(kappa, detail::c_normalization(kappa, alpha) * j_value);
        return out;
    }

  private:
    /// Horizontal strips of kappa with their branching coefficients.
    const std::vector<std::pair<Partition, double>>& strips(const Partition& kappa) const {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = strip_cache_.find(kappa);
            if (it != strip_cache_.end()) return it->second;
        }
        std::vector<std::pair<Partition, double>> built;
        detail::for_each_horizontal_strip(kappa, [&](const Partition& mu) {
            built.emplace_back(mu, detail::branch_coefficient(kappa, mu, da_.alpha()));
        });
        std::lock_guard<std::mutex> lock(mutex_);
        return strip_cache_.emplace(kappa, std::move(built)).first->second;
    }

    DivisionAlgebra da_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Partition, int>, double> identity_cache_;
    mutable std::map<Partition, std::vector<std::pair<Partition, double>>> strip_cache_;
};

namespace detail {

/// One process-wide table per division algebra; every series evaluation
/// shares its identity and branching-coefficient caches.
inline const JackTable& shared_jack_table(const DivisionAlgebra& da) {
    static const JackTable real_table{DivisionAlgebra(1)};
    static const JackTable complex_table{DivisionAlgebra(2)};
    static const JackTable quaternion_table{DivisionAlgebra(4)};
    switch (da.beta()) {
        case 1: return real_table;
        case 2: return complex_table;
        default: return quaternion_table;
    }
}

}  // namespace detail

inline double jack_eval(const Partition& kappa, const Spectrum& x, const DivisionAlgebra& da) {
    if (kappa.length() > x.dimension()) return 0.0;
    return detail::shared_jack_table(da)
        .eval_all(x, kappa.weight(), std::max(kappa.length(), 1))
        .at(kappa);
}

inline double jack_identity(const Partition& kappa, int d, const DivisionAlgebra& da) {
    if (d < 1) throw std::invalid_argument("jack_identity: dimension must be positive");
    return detail::jack_identity_closed(kappa, d, da);
}

/// C_kappa^beta(t I_d) = t^{|kappa|} C_kappa^beta(I_d) by homogeneity.
inline double jack_scalar_identity(const Partition& kappa, int d, double t,
                                   const DivisionAlgebra& da) {
    if (d < 1) throw std::invalid_argument("jack_scalar_identity: dimension must be positive");
    return detail::ipow(t, kappa.weight()) * detail::jack_identity_closed(kappa, d, da);
}

}  // namespace singf
