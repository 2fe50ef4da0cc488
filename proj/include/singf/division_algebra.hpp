#pragma once

#include <stdexcept>

namespace singf {

/// Selects the real (beta = 1), complex (beta = 2), or quaternion (beta = 4)
/// matrix ensemble. The Jack-polynomial literature parameterizes the same
/// family by alpha = 2/beta; `alpha()` is the single conversion point.
class DivisionAlgebra {
  public:
    explicit DivisionAlgebra(int beta) : beta_(beta) {
        if (beta != 1 && beta != 2 && beta != 4)
            throw std::invalid_argument("DivisionAlgebra: beta must be 1, 2, or 4");
    }

    static DivisionAlgebra real() { return DivisionAlgebra(1); }
    static DivisionAlgebra complex_numbers() { return DivisionAlgebra(2); }
    static DivisionAlgebra quaternion() { return DivisionAlgebra(4); }

    int beta() const { return beta_; }
    double half_beta() const { return beta_ / 2.0; }
    double alpha() const { return 2.0 / beta_; }

    friend bool operator==(const DivisionAlgebra& a, const DivisionAlgebra& b) {
        return a.beta_ == b.beta_;
    }
    friend bool operator!=(const DivisionAlgebra& a, const DivisionAlgebra& b) {
        return a.beta_ != b.beta_;
    }

  private:
    int beta_;
};

}  // namespace singf
