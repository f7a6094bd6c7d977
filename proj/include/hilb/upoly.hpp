#pragma once

#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

// Dense univariate polynomial over Q, coefficient of t^i at index i.
// Backs the rational-function linear algebra used by the curve limits.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(Rational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    static UPoly linear(Rational c0, Rational c1);  // c0 + c1*t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int i) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // Exact division; throws if the remainder is nonzero.
    UPoly divexact(const UPoly& divisor) const;

    Rational eval(const Rational& t) const;

    // Multiplicity of the root t0 (0 if not a root); factors (t - t0)^mult out.
    int root_multiplicity(const Rational& t0) const;
    UPoly deflate(const Rational& t0, int times) const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Determinant of a square matrix with entries in Q[t], by fraction-free
// Bareiss elimination (all divisions exact in Q[t]).
UPoly upoly_det(std::vector<std::vector<UPoly>> m);

}  // namespace hilb
