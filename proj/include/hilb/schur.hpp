#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

// Partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }
    long weight() const;
    bool empty() const { return parts_.empty(); }

    // Fixed-length presentation, padding with zeros (throws if too long).
    std::vector<int> padded(int len) const;

    auto operator<=>(const Partition&) const = default;
    std::string str() const;

  private:
    void normalize();
    std::vector<int> parts_;
};

using Decomposition = std::map<Partition, long>;

// dim S_lambda(C^d) by the hook content formula; 0 iff lambda has > d rows.
Integer hook_content_dim(const Partition& lambda, int d);

// Littlewood-Richardson coefficients c^lambda_{mu,nu} for all lambda with at
// most maxlen rows, by enumeration of LR skew tableaux (ballot condition
// checked incrementally strip by strip). Guarded to |mu|+|nu| <= 34.
Decomposition lr_coefficients(const Partition& mu, const Partition& nu, int maxlen);

// Tensor product of two decompositions (multiplicities multiply through LR).
Decomposition lr_product(const Decomposition& a, const Partition& nu, int maxlen);

// Symmetric polynomial in d variables with exact coefficients, used for the
// character route to Sym^2 decompositions: exponent vector -> coefficient.
class SymPoly {
  public:
    explicit SymPoly(int d) : d_(d) {}

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add(const std::vector<int>& expo, const Rational& c);
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator*(const Rational& c) const;

    // x_i -> x_i^2 substitution (plethysm p_2 ingredient for Sym^2).
    SymPoly square_variables() const;

    bool is_symmetric() const;

  private:
    int d_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

// Schur polynomial s_lambda(x_1..x_d) by horizontal-strip chains.
SymPoly schur_polynomial(const Partition& lambda, int d);

// Decomposition of Sym^2(S_lambda(C^d)) via the character identity
// char Sym^2 V (x) = (char_V(x)^2 + char_V(x^2)) / 2 followed by greedy
// Schur-polynomial peeling of the leading monomial.
Decomposition sym2_decompose_by_character(const Partition& lambda, int d);

// Greedy peeling of a symmetric polynomial into Schur polynomials; throws
// DecompositionError if a negative or fractional multiplicity shows up.
Decomposition peel_schur(SymPoly p);

struct LedgerCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = true;
};

struct LedgerReport {
    bool pass = true;
    std::vector<LedgerCheck> checks;
};

// The Sym^2 summand shapes at dimension d: (6,2,..,2,0), (5,3,2,..,1,1) for
// d >= 4, (5,2,..,2,1), (4,4,2,..,2,0), (4,3,2,..,2,1), (4,2,..,2,2).
std::vector<Partition> sym2_summand_shapes(int d);

// Dimension-level consequences of the decomposition lemmas:
//  (a) dim(wedge^{d-1} (x) Sym^2) = dim S_{(2,1,..,1,1)} + dim S_{(3,1,..,1,0)}
//  (b) C(dim S_{(3,1,..,1,0)} + 1, 2) = sum of the Sym^2 summand dims
//  (c) rank over Q of the raw generator coefficient matrix (a >= 1)
//      = dim S_{(3,2,1,..,1,0)} + dim S_{(3,1,..,1,1)}   [d <= 6]
LedgerReport verify_dimension_ledger(int d, bool include_rank_check);

// Rank over Q of the coefficient matrix of the raw generators with a >= 1,
// rows = generators, columns = monomials (certified via the Gram matrix).
int raw_generator_rank(int d);

}  // namespace hilb
