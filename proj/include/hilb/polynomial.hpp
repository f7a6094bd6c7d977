#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hilb/coordinates.hpp"
#include "hilb/rational.hpp"

namespace hilb {

// Monomial: sorted multiset of variables. Empty vector is the constant 1.
using Monomial = std::vector<CoordIndex>;

// Graded lexicographic order: total degree first, then lex on the sorted
// variable tuples. Fixes deterministic term iteration and serialization.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Exact sparse multivariate polynomial over Q in the chart coordinates of a
// fixed dimension d. No zero coefficients are ever stored.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    Poly() = default;
    explicit Poly(int d) : d_(d) {}

    static Poly constant(int d, const Rational& c);
    static Poly variable(int d, const CoordIndex& v);
    static Poly monomial(int d, Monomial m, const Rational& c);

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Degree of the zero polynomial is reported as 0.
    int degree() const;
    bool is_homogeneous(int deg) const;

    void add_term(Monomial m, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

    std::set<CoordIndex> variables() const;

    // Exact substitution. Every variable occurring in the polynomial must be
    // covered by the assignment unless pass_through is set, in which case
    // unlisted variables map to themselves.
    Poly substitute(const std::map<CoordIndex, Poly>& assignment, bool pass_through) const;
    Rational evaluate(const std::vector<Rational>& values_by_rank) const;

    std::string str() const;

  private:
    void check_same_dim(const Poly& o) const;

    int d_ = 0;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// JSON round trip in the pinned format:
//   {"d": int, "terms": [{"coeff": "num/den", "vars": [[r,s,t], ...]}, ...]}
// Canonical (graded-lex sorted) on write; unsorted input tolerated on read.
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

}  // namespace hilb
