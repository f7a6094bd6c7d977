#include "hilb/matrix.hpp"

#include <omp.h>

#include <utility>

namespace hilb {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

namespace {

// One Bareiss update step: rows below `step` against the pivot row, columns
// to the right of `col`. All divisions are exact (Bareiss invariant).
void bareiss_step_serial(ZMat& m, int step, int col, const Integer& prev_pivot) {
    const Integer& pivot = m.at(step, col);
    for (int i = step + 1; i < m.rows(); ++i) {
        for (int j = col + 1; j < m.cols(); ++j) {
            Integer v = m.at(i, j) * pivot - m.at(i, col) * m.at(step, j);
            mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        }
        m.at(i, col) = 0;
    }
}

void bareiss_step_openmp(ZMat& m, int step, int col, const Integer& prev_pivot) {
    const Integer& pivot = m.at(step, col);
#pragma omp parallel for schedule(dynamic)
    for (int i = step + 1; i < m.rows(); ++i) {
        for (int j = col + 1; j < m.cols(); ++j) {
            Integer v = m.at(i, j) * pivot - m.at(i, col) * m.at(step, j);
            mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        }
        m.at(i, col) = 0;
    }
}

}  // namespace

int bareiss_eliminate(ZMat& m, Integer* det_out, Exec exec) {
    const int rows = m.rows(), cols = m.cols();
    Integer prev_pivot = 1;
    int step = 0;
    int sign = 1;
    for (int col = 0; col < cols && step < rows; ++col) {
        int pivot_row = -1;
        for (int i = step; i < rows; ++i)
            if (m.at(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != step) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(step, j), m.at(pivot_row, j));
            sign = -sign;
        }
        // Threading pays only once the entries are big; tiny updates are
        // dominated by the fork/join overhead.
        const long cells = static_cast<long>(rows - step - 1) * (cols - col - 1);
        const std::size_t pivot_bits = mpz_sizeinbase(m.at(step, col).get_mpz_t(), 2);
        if (exec == Exec::OpenMP && cells >= 512 && pivot_bits >= 512)
            bareiss_step_openmp(m, step, col, prev_pivot);
        else
            bareiss_step_serial(m, step, col, prev_pivot);
        prev_pivot = m.at(step, col);
        ++step;
    }
    if (det_out) {
        if (rows == cols && step == rows)
            *det_out = sign > 0 ? prev_pivot : -prev_pivot;
        else
            *det_out = 0;
    }
    return step;
}

namespace {

// Clears denominators row by row; multiplies det by the row factors, which
// callers undo. Row scaling by positive rationals preserves rank and the
// solution of linear systems.
ZMat clear_denominators(const QMat& m, Integer* row_factor_product) {
    ZMat z(m.rows(), m.cols());
    Integer prod = 1;
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * Rational(l);
            z.at(i, j) = v.get_num();  // den is 1 after scaling by the lcm
        }
        prod *= l;
    }
    if (row_factor_product) *row_factor_product = prod;
    return z;
}

}  // namespace

int rank_exact(const QMat& m, Exec exec) {
    ZMat z = clear_denominators(m, nullptr);
    return bareiss_eliminate(z, nullptr, exec);
}

Rational det_exact(const QMat& m, Exec exec) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Integer scale;
    ZMat z = clear_denominators(m, &scale);
    Integer det;
    bareiss_eliminate(z, &det, exec);
    return make_rational(det, scale);
}

QMat solve_exact(const QMat& m, const QMat& rhs, Exec exec) {
    const int n = m.rows();
    if (m.cols() != n) throw DimensionError("solve requires a square matrix");
    if (rhs.rows() != n) throw DimensionError("rhs row count mismatch");

    QMat aug(n, n + rhs.cols());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) aug.at(i, n + j) = rhs.at(i, j);
    }
    ZMat z = clear_denominators(aug, nullptr);

    // Forward elimination restricted to the coefficient block; a missing pivot
    // means the coefficient matrix is singular.
    Integer prev_pivot = 1;
    for (int step = 0; step < n; ++step) {
        int pivot_row = -1;
        for (int i = step; i < n; ++i)
            if (z.at(i, step) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) {
            ZMat rest(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rest.at(i, j) = z.at(i, j);
            int rank = bareiss_eliminate(rest, nullptr, exec);
            throw SingularError("singular system in solve", rank);
        }
        if (pivot_row != step)
            for (int j = 0; j < z.cols(); ++j) std::swap(z.at(step, j), z.at(pivot_row, j));
        if (exec == Exec::OpenMP)
            bareiss_step_openmp(z, step, step, prev_pivot);
        else
            bareiss_step_serial(z, step, step, prev_pivot);
        prev_pivot = z.at(step, step);
    }

    // Back substitution over Q.
    QMat x(n, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
        for (int i = n - 1; i >= 0; --i) {
            Rational sum = make_rational(z.at(i, n + c), 1);
            for (int j = i + 1; j < n; ++j) sum -= make_rational(z.at(i, j), 1) * x.at(j, c);
            x.at(i, c) = sum / make_rational(z.at(i, i), 1);
        }
    }
    return x;
}

Integer det_integer(ZMat m, Exec exec) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    Integer det;
    bareiss_eliminate(m, &det, exec);
    return det;
}

int rank_integer(ZMat m, Exec exec) { return bareiss_eliminate(m, nullptr, exec); }

}  // namespace hilb
