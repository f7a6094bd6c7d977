#pragma once

#include <cstddef>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

// Execution policy for the elimination kernels. Serial is the reference
// implementation; OpenMP runs the row-update loops in parallel with
// bit-identical results (every entry update is independent within a step).
enum class Exec { Serial, OpenMP };

// Dense matrix over Q, row-major. All operations are exact.
class QMat {
  public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QMat transpose() const;
    QMat operator*(const QMat& o) const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// Dense matrix over Z; the workhorse behind the rational entry points.
class ZMat {
  public:
    ZMat() = default;
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Integer(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> a_;
};

// Fraction-free Bareiss elimination over Z, in place. Returns the rank; if
// det_out is non-null and the matrix is square of full rank, stores the
// determinant. Deterministic: pivot is the first nonzero entry in scan order.
int bareiss_eliminate(ZMat& m, Integer* det_out, Exec exec);

// Rank over Q via Bareiss after clearing denominators per row.
int rank_exact(const QMat& m, Exec exec = Exec::OpenMP);

// Exact determinant (fraction-free over Z after per-row denominator
// clearing). Throws DimensionError unless square.
Rational det_exact(const QMat& m, Exec exec = Exec::OpenMP);

// Exact solve m * x = rhs for square nonsingular m (rhs may have several
// columns). Throws SingularError carrying the rank found otherwise.
QMat solve_exact(const QMat& m, const QMat& rhs, Exec exec = Exec::OpenMP);

// Integer determinant on a ZMat copy (used directly by the minor
// certificates, where entries are already integral).
Integer det_integer(ZMat m, Exec exec = Exec::OpenMP);
int rank_integer(ZMat m, Exec exec = Exec::OpenMP);

}  // namespace hilb
