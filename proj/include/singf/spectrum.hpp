#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace singf {

/// Ordered list of real eigenvalues standing in for a Hermitian matrix
/// argument. Entries are canonicalized descending; any sign is allowed
/// (series arguments such as -x*inv(Sigma) have negative spectra).
class Spectrum {
  public:
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
        for (double v : values_)
            if (!std::isfinite(v)) throw std::invalid_argument("Spectrum: entries must be finite");
        std::sort(values_.begin(), values_.end(), std::greater<double>());
    }

    static Spectrum constant(int d, double t) {
        return Spectrum(std::vector<double>(static_cast<std::size_t>(d), t));
    }

    static Spectrum ones(int d) { return constant(d, 1.0); }

    int dimension() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }

    double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_constant() const {
        return values_.empty() ||
               std::all_of(values_.begin(), values_.end(),
                           [&](double v) { return v == values_.front(); });
    }

  private:
    std::vector<double> values_;
};

}  // namespace singf
