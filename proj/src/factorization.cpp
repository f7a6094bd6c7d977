#include "hilb/factorization.hpp"

#include <omp.h>

#include <algorithm>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hilb {
namespace fact {

std::vector<GenIndex> enumerate_rows() {
    std::vector<GenIndex> rows;
    for (int a = 1; a <= 3; ++a) {
        // 4 <= j < i < k <= 8
        for (int j = 4; j <= 8; ++j)
            for (int i = j + 1; i <= 8; ++i)
                for (int k = i + 1; k <= 8; ++k) rows.push_back({a, j, i, k});
        // 4 <= k < j < i <= 8
        for (int j = 4; j <= 8; ++j)
            for (int i = j + 1; i <= 8; ++i)
                for (int k = 4; k < j; ++k) rows.push_back({a, j, i, k});
        // 4 = i = j < k <= 8
        for (int k = 5; k <= 8; ++k) rows.push_back({a, 4, 4, k});
        // 4 = i < j = k <= 8
        for (int j = 5; j <= 8; ++j) rows.push_back({a, j, 4, j});
        // 5 = i = j < k <= 6
        rows.push_back({a, 5, 5, 6});
        // 5 = i < j = k <= 6
        rows.push_back({a, 6, 5, 6});
    }
    if (rows.size() != kRows) throw EnumerationError("row enumeration does not yield 90 rows");
    return rows;
}

std::vector<ShiftedCoord> enumerate_shifted() {
    std::vector<ShiftedCoord> cols;
    auto push = [&cols](int r, int s, int t) {
        ShiftedCoord c;
        c.r = r;
        c.s = s;
        c.t = t;
        Poly e = Poly::variable(kD, CoordIndex::make(r, s, t));
        if (r == t) e -= Poly::variable(kD, CoordIndex::make(s, s, s)) * Rational(1, 2);
        if (r == s) e -= Poly::variable(kD, CoordIndex::make(t, t, t)) * Rational(1, 2);
        c.expression = std::move(e);
        cols.push_back(std::move(c));
    };
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int t = 4; t <= 8; ++t) push(r, s, t);
    for (int r = 4; r <= 8; ++r)
        for (int s = 4; s <= 8; ++s)
            for (int t = s; t <= 8; ++t)
                if (!(r == s && s == t)) push(r, s, t);
    if (cols.size() != kCols) throw EnumerationError("shifted coordinate enumeration does not yield 115 columns");
    return cols;
}

const Entry* FactorizationMatrix::find(int row, int col) const {
    for (const auto& e : entries)
        if (e.row == row && e.col == col) return &e;
    return nullptr;
}

namespace {

FactorizationMatrix extract_m_impl() {
    FactorizationMatrix m;
    m.rows = enumerate_rows();
    m.cols = enumerate_shifted();

    // column lookup by the underlying variable p_{r,st} (canonical s <= t)
    std::map<CoordIndex, int> col_of;
    for (int c = 0; c < static_cast<int>(m.cols.size()); ++c)
        col_of.emplace(CoordIndex::make(m.cols[c].r, m.cols[c].s, m.cols[c].t), c);

    for (int r = 0; r < static_cast<int>(m.rows.size()); ++r) {
        const GenIndex& idx = m.rows[r];
        Poly row_poly = generator_raw(kD, idx.a, idx.j, idx.i, idx.k);

        // Group monomials by their out-set factor. The key fact of the
        // construction: exactly one factor of every monomial is in-set.
        std::map<int, Poly> coeff_by_col;
        Poly residual = row_poly;
        for (const auto& [mono, c] : row_poly.terms()) {
            if (mono.size() != 2) throw ExtractionError("row polynomial has a non-quadratic term in " + idx.str());
            const CoordIndex &v0 = mono[0], &v1 = mono[1];
            const bool in0 = v0.in_set(), in1 = v1.in_set();
            if (in0 == in1) throw ExtractionError("monomial without a unique in-set factor in " + idx.str());
            const CoordIndex& inset = in0 ? v0 : v1;
            const CoordIndex& outset = in0 ? v1 : v0;
            if (outset.diagonal()) continue;  // must cancel against the shifts
            auto it = col_of.find(outset);
            if (it == col_of.end()) throw ExtractionError("out-set factor matches no column in " + idx.str());
            Poly& dst = coeff_by_col.try_emplace(it->second, Poly(kD)).first->second;
            dst += Poly::variable(kD, inset) * c;
        }

        for (auto& [col, coeff] : coeff_by_col) {
            if (coeff.is_zero()) continue;
            if (coeff.term_count() != 1)
                throw ExtractionError("matrix entry is a sum of variables at row " + idx.str());
            const auto& [mono, c] = *coeff.terms().begin();
            if (mono.size() != 1 || !mono[0].in_set() || (c != 1 && c != -1))
                throw ExtractionError("matrix entry is not a signed in-set variable at row " + idx.str());
            Entry e;
            e.row = r;
            e.col = col;
            e.sign = (c == 1) ? 1 : -1;
            e.variable = mono[0];
            m.entries.push_back(e);
            residual -= coeff * m.cols[col].expression;
        }
        if (!residual.is_zero())
            throw ExtractionError("factorization residual (diagonal cancellation failed) at row " + idx.str() +
                                  ": " + residual.str());
    }
    return m;
}

}  // namespace

const FactorizationMatrix& extract_m() {
    static std::mutex mu;
    static std::unique_ptr<FactorizationMatrix> cached;
    std::lock_guard lock(mu);
    if (!cached) cached = std::make_unique<FactorizationMatrix>(extract_m_impl());
    return *cached;
}

bool verify_factorization(const FactorizationMatrix& m) {
    for (int r = 0; r < static_cast<int>(m.rows.size()); ++r) {
        Poly sum(kD);
        for (const auto& e : m.entries)
            if (e.row == r) sum += Poly::variable(kD, e.variable) * Rational(e.sign) * m.cols[e.col].expression;
        const GenIndex& idx = m.rows[r];
        if (!(sum - generator_raw(kD, idx.a, idx.j, idx.i, idx.k)).is_zero()) return false;
    }
    return true;
}

InSetAssignment InSetAssignment::random(std::uint64_t seed, long height) {
    Rng rng(seed);
    InSetAssignment a;
    for (int r = 1; r <= 3; ++r)
        for (int s = 4; s <= 8; ++s)
            for (int t = s; t <= 8; ++t) a.values.emplace(CoordIndex::make(r, s, t), make_rational(rng.int_in(-height, height)));
    return a;
}

InSetAssignment InSetAssignment::from_coords(const ProjectorCoords& coords) {
    if (coords.d != kD) throw DimensionError("in-set extraction needs d = 8 coordinates");
    InSetAssignment a;
    for (int r = 1; r <= 3; ++r)
        for (int s = 4; s <= 8; ++s)
            for (int t = s; t <= 8; ++t) a.values.emplace(CoordIndex::make(r, s, t), coords.get(r, s, t));
    return a;
}

const Rational& InSetAssignment::get(const CoordIndex& v) const {
    auto it = values.find(v);
    if (it == values.end()) throw IndexError("variable missing from in-set assignment");
    return it->second;
}

QMat evaluate_m(const FactorizationMatrix& m, const InSetAssignment& a) {
    QMat q(kRows, kCols);
    for (const auto& e : m.entries) q.at(e.row, e.col) = a.get(e.variable) * Rational(e.sign);
    return q;
}

MinorSelection find_nonsingular_minor(std::uint64_t seed) {
    const FactorizationMatrix& m = extract_m();
    for (int attempt = 0; attempt < 10; ++attempt) {
        InSetAssignment a = InSetAssignment::random(Rng::derive(seed, attempt));
        QMat q = evaluate_m(m, a);

        // column-pivot elimination; the pivot columns form the candidate minor
        ZMat z(kRows, kCols);
        for (int i = 0; i < kRows; ++i)
            for (int j = 0; j < kCols; ++j) z.at(i, j) = q.at(i, j).get_num();  // entries are integers
        std::vector<int> pivot_cols;
        Integer prev = 1;
        int step = 0;
        for (int col = 0; col < kCols && step < kRows; ++col) {
            int pr = -1;
            for (int i = step; i < kRows; ++i)
                if (z.at(i, col) != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != step)
                for (int j = 0; j < kCols; ++j) std::swap(z.at(step, j), z.at(pr, j));
            for (int i = step + 1; i < kRows; ++i) {
                for (int j = col + 1; j < kCols; ++j) {
                    Integer v = z.at(i, j) * z.at(step, col) - z.at(i, col) * z.at(step, j);
                    mpz_divexact(z.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                }
                z.at(i, col) = 0;
            }
            prev = z.at(step, col);
            pivot_cols.push_back(col);
            ++step;
        }
        if (step < kRows) continue;

        MinorSelection sel;
        sel.columns = pivot_cols;
        if (minor_det_at(m, sel, a) != 0) return sel;
    }
    throw Error("no nonsingular 90x90 minor found in 10 seeded attempts (contradicts the construction)");
}

Rational minor_det_at(const FactorizationMatrix& m, const MinorSelection& sel, const InSetAssignment& a, Exec exec) {
    if (sel.columns.size() != kRows) throw DimensionError("minor selection must have 90 columns");
    QMat q = evaluate_m(m, a);
    QMat sub(kRows, kRows);
    for (int i = 0; i < kRows; ++i)
        for (int j = 0; j < kRows; ++j) sub.at(i, j) = q.at(i, sel.columns[j]);
    return det_exact(sub, exec);
}

VanishingCertificate vanish_on_principal(const FactorizationMatrix& m, const MinorSelection& sel, int n_samples,
                                         std::uint64_t seed, long height, Exec exec) {
    VanishingCertificate cert;
    cert.seed = seed;
    cert.selection = sel;
    cert.samples.assign(n_samples, SampleRecord{});
    std::vector<Rational> dets(n_samples);
    std::vector<std::string> errors(n_samples);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::OpenMP)
    for (int s = 0; s < n_samples; ++s) {
        double start = omp_get_wtime();
        try {
            std::uint64_t sample_seed = Rng::derive(seed, s);
            PointConfig cfg = sample_spanning(kD, sample_seed, height);
            InSetAssignment a = InSetAssignment::from_coords(interpolate(cfg));
            dets[s] = minor_det_at(m, sel, a, Exec::Serial);
            cert.samples[s].seed = sample_seed;
            cert.samples[s].config = std::move(cfg);
            cert.samples[s].det_zero = (dets[s] == 0);
        } catch (const std::exception& e) {
            errors[s] = e.what();
        }
        cert.samples[s].seconds = omp_get_wtime() - start;
    }
    for (const auto& e : errors)
        if (!e.empty()) throw SamplingError(e);
    for (int s = 0; s < n_samples; ++s)
        if (dets[s] != 0) {
            cert.pass = false;
            cert.counterexample_det = dets[s];
            break;
        }
    return cert;
}

Minor89Report minor89_evidence(const FactorizationMatrix& m, const MinorSelection& sel, int n_samples,
                               std::uint64_t seed, int minors_per_sample, Exec exec) {
    Minor89Report report;
    report.samples = n_samples;
    report.minors_per_sample = minors_per_sample;

    long nonzero = 0, zero = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : nonzero, zero) if (exec == Exec::OpenMP)
    for (int s = 0; s < n_samples; ++s) {
        std::uint64_t sample_seed = Rng::derive(seed, s);
        PointConfig cfg = sample_spanning(kD, sample_seed, 20);
        InSetAssignment a = InSetAssignment::from_coords(interpolate(cfg));
        QMat q = evaluate_m(m, a);
        Rng rng(Rng::derive(seed, 1000003UL + s));
        for (int t = 0; t < minors_per_sample; ++t) {
            int drop_row = static_cast<int>(rng.int_in(0, kRows - 1));
            int drop_col = static_cast<int>(rng.int_in(0, kRows - 1));
            QMat sub(kRows - 1, kRows - 1);
            int ii = 0;
            for (int i = 0; i < kRows; ++i) {
                if (i == drop_row) continue;
                int jj = 0;
                for (int j = 0; j < kRows; ++j) {
                    if (j == drop_col) continue;
                    sub.at(ii, jj) = q.at(i, sel.columns[j]);
                    ++jj;
                }
                ++ii;
            }
            if (det_exact(sub, Exec::Serial) != 0)
                ++nonzero;
            else
                ++zero;
        }
    }
    report.nonzero_count = nonzero;
    report.zero_count = zero;
    report.any_nonzero = nonzero > 0;
    return report;
}

std::string m_matrix_to_json(const FactorizationMatrix& m) {
    nlohmann::json j;
    j["rows"] = kRows;
    j["cols"] = kCols;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : m.entries) {
        nlohmann::json je;
        je["r"] = e.row;
        je["c"] = e.col;
        je["sign"] = e.sign;
        je["var"] = {e.variable.r, e.variable.s, e.variable.t};
        j["entries"].push_back(je);
    }
    j["row_legend"] = nlohmann::json::array();
    for (const auto& r : m.rows) j["row_legend"].push_back({{"a", r.a}, {"j", r.j}, {"i", r.i}, {"k", r.k}});
    j["col_legend"] = nlohmann::json::array();
    for (const auto& c : m.cols) j["col_legend"].push_back({c.r, c.s, c.t});
    return j.dump();
}

}  // namespace fact
}  // namespace hilb
