#include "hilb/schur.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hilb/generators.hpp"
#include "hilb/matrix.hpp"

namespace hilb {

void Partition::normalize() {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    for (int p : parts_)
        if (p < 0) throw DomainError("negative partition part");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::vector<int> Partition::padded(int len) const {
    if (rows() > len) throw DomainError("partition longer than requested length");
    std::vector<int> out(parts_);
    out.resize(len, 0);
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

Integer hook_content_dim(const Partition& lambda, int d) {
    if (lambda.rows() > d) return 0;
    std::vector<int> conj;  // conjugate partition column lengths
    if (!lambda.empty()) {
        conj.assign(lambda.part(0), 0);
        for (int i = 0; i < lambda.rows(); ++i)
            for (int j = 0; j < lambda.part(i); ++j) conj[j]++;
    }
    Integer num = 1, den = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            num *= d + j - i;
            den *= lambda.part(i) - j + conj[j] - i - 1;  // hook length
        }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

namespace {

// Semistandard skew tableaux of content nu on top of mu, as chains of
// horizontal strips; the ballot condition is checked on the partial reading
// word after every strip (violations are permanent, so pruning is sound).
struct LrEnumerator {
    int maxlen;
    std::vector<int> nu;
    Decomposition counts;

    bool ballot_ok(const std::vector<std::vector<int>>& fill_rows, int upto_value) const {
        std::vector<int> seen(upto_value + 2, 0);
        for (const auto& row : fill_rows) {
            // reverse reading: right to left within the row
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                int v = *it;
                if (v == 0) continue;  // cell of mu
                ++seen[v];
                if (v > 1 && seen[v] > seen[v - 1]) return false;
            }
        }
        return true;
    }

    // shape: current partition; fills[r] holds the values of the added cells
    // in row r, left to right (0 marks the mu part).
    void place_value(int v, std::vector<int>& shape, std::vector<std::vector<int>>& fills,
                     const std::vector<int>& prev_shape, int row, int remaining) {
        if (remaining == 0) {
            if (!ballot_ok(fills, v)) return;
            next_value(v + 1, shape, fills);
            return;
        }
        if (row >= maxlen) return;
        // Options for cells of value v added in this row: between 0 and the
        // horizontal-strip bound; rows processed top to bottom.
        int lo = 0;
        int hi_shape = (row == 0) ? shape[0] + remaining : shape[row - 1] - shape[row];
        int hi_strip = (row == 0) ? remaining : std::max(0, prev_shape[row - 1] - shape[row]);
        int hi = std::min({remaining, hi_shape, (row == 0) ? remaining : hi_strip});
        for (int add = lo; add <= hi; ++add) {
            shape[row] += add;
            for (int c = 0; c < add; ++c) fills[row].push_back(v);
            place_value(v, shape, fills, prev_shape, row + 1, remaining - add);
            for (int c = 0; c < add; ++c) fills[row].pop_back();
            shape[row] -= add;
        }
    }

    void next_value(int v, std::vector<int>& shape, std::vector<std::vector<int>>& fills) {
        if (v > static_cast<int>(nu.size())) {
            std::vector<int> trimmed = shape;
            counts[Partition(std::move(trimmed))] += 1;
            return;
        }
        std::vector<int> prev_shape = shape;
        place_value(v, shape, fills, prev_shape, 0, nu[v - 1]);
    }
};

}  // namespace

Decomposition lr_coefficients(const Partition& mu, const Partition& nu, int maxlen) {
    if (mu.weight() + nu.weight() > 34) throw CapacityError("LR enumeration guard: |mu|+|nu| too large");
    if (mu.rows() > maxlen) return {};
    LrEnumerator e;
    e.maxlen = maxlen;
    e.nu = nu.parts();
    std::vector<int> shape = mu.padded(maxlen);
    std::vector<std::vector<int>> fills(maxlen);
    for (int r = 0; r < maxlen; ++r) fills[r].assign(shape[r], 0);
    e.next_value(1, shape, fills);
    return e.counts;
}

Decomposition lr_product(const Decomposition& a, const Partition& nu, int maxlen) {
    Decomposition out;
    for (const auto& [mu, mult] : a) {
        Decomposition part = lr_coefficients(mu, nu, maxlen);
        for (const auto& [lam, c] : part) out[lam] += mult * c;
    }
    return out;
}

void SymPoly::add(const std::vector<int>& expo, const Rational& c) {
    if (static_cast<int>(expo.size()) != d_) throw DimensionError("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, -c);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r(d_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(d_);
            for (int i = 0; i < d_; ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

SymPoly SymPoly::operator*(const Rational& c) const {
    SymPoly r(d_);
    for (const auto& [e, k] : terms_) r.add(e, k * c);
    return r;
}

SymPoly SymPoly::square_variables() const {
    SymPoly r(d_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2(d_);
        for (int i = 0; i < d_; ++i) e2[i] = 2 * e[i];
        r.add(e2, c);
    }
    return r;
}

bool SymPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        for (int i = 0; i + 1 < d_; ++i) {
            std::vector<int> swapped = e;
            std::swap(swapped[i], swapped[i + 1]);
            auto it = terms_.find(swapped);
            if (it == terms_.end() || it->second != c) return false;
        }
    return true;
}

SymPoly schur_polynomial(const Partition& lambda, int d) {
    SymPoly out(d);
    if (lambda.rows() > d) return out;
    std::vector<int> shape(d, 0);
    std::vector<int> target = lambda.padded(d);
    std::vector<int> content(d, 0);

    // chains of horizontal strips emptying into lambda, values 1..d
    std::function<void(int)> rec_value = [&](int v) {
        if (v > d) {
            if (shape == target) out.add(content, 1);
            return;
        }
        std::function<void(int, std::vector<int>&)> place = [&](int row, std::vector<int>& prev) {
            if (row == d) {
                rec_value(v + 1);
                return;
            }
            int hi = (row == 0) ? target[0] - shape[0]
                                : std::min(prev[row - 1], target[row]) - shape[row];
            // cells of value v in row `row`; shape must stay within target
            for (int add = 0; add <= std::max(0, hi); ++add) {
                bool fits = shape[row] + add <= target[row] &&
                            (row == 0 || shape[row] + add <= prev[row - 1]);
                if (!fits) break;
                shape[row] += add;
                content[v - 1] += add;
                place(row + 1, prev);
                shape[row] -= add;
                content[v - 1] -= add;
            }
        };
        std::vector<int> prev = shape;
        place(0, prev);
    };
    rec_value(1);
    return out;
}

Decomposition peel_schur(SymPoly p) {
    if (!p.is_symmetric()) throw DecompositionError("peeling a non-symmetric polynomial");
    Decomposition out;
    while (!p.is_zero()) {
        // lex-greatest exponent; for a symmetric polynomial it is weakly
        // decreasing, hence a partition (the dominance-maximal leading shape)
        auto it = std::prev(p.terms().end());
        std::vector<int> lead = it->first;
        Rational mult = it->second;
        for (std::size_t i = 1; i < lead.size(); ++i)
            if (lead[i] > lead[i - 1]) throw DecompositionError("leading exponent is not a partition");
        if (mult.get_den() != 1 || mult < 0)
            throw DecompositionError("non-nonnegative-integer multiplicity during peeling");
        Partition lambda{std::vector<int>(lead)};
        p = p - schur_polynomial(lambda, p.dim()) * mult;
        out[lambda] += static_cast<long>(mult.get_num().get_si());
    }
    return out;
}

std::vector<Partition> sym2_summand_shapes(int d) {
    if (d < 3) throw DomainError("sym2 summand shapes need d >= 3");
    auto shape = [d](int first, int second, int ones_tail, int last) {
        // (first, second, 2, ..., 2, last) of length d
        std::vector<int> v;
        v.push_back(first);
        v.push_back(second);
        for (int i = 0; i < d - 2 - ones_tail - 1; ++i) v.push_back(2);
        for (int i = 0; i < ones_tail; ++i) v.push_back(1);
        v.push_back(last);
        return Partition(std::move(v));
    };
    std::vector<Partition> shapes;
    shapes.push_back(shape(6, 2, 0, 0));
    if (d >= 4) shapes.push_back(shape(5, 3, 1, 1));
    shapes.push_back(shape(5, 2, 0, 1));
    shapes.push_back(shape(4, 4, 0, 0));
    shapes.push_back(shape(4, 3, 0, 1));
    shapes.push_back(shape(4, 2, 0, 2));
    return shapes;
}

namespace {

Partition hook_with_head(int head, int d_len, int tail_last) {
    // (head, 1, ..., 1, tail_last) of length d_len
    std::vector<int> v{head};
    for (int i = 0; i < d_len - 2; ++i) v.push_back(1);
    v.push_back(tail_last);
    return Partition(std::move(v));
}

std::string int_str(const Integer& z) { return z.get_str(); }

}  // namespace

int raw_generator_rank(int d) {
    // Coefficient matrix of the a >= 1 generators in the monomial basis.
    std::vector<Poly> gens;
    for (int a = 1; a <= d; ++a)
        for (int j = 1; j <= d; ++j)
            for (int i = 1; i <= d; ++i)
                for (int k = i + 1; k <= d; ++k) gens.push_back(generator_raw(d, a, j, i, k));

    std::map<Monomial, int, MonoLess> column_of;
    for (const auto& g : gens)
        for (const auto& [m, c] : g.terms())
            column_of.emplace(m, 0);
    int col = 0;
    for (auto& [m, idx] : column_of) idx = col++;

    const int n = static_cast<int>(gens.size());
    std::vector<std::vector<std::pair<int, long>>> rows(n);
    for (int r = 0; r < n; ++r)
        for (const auto& [m, c] : gens[r].terms())
            rows[r].push_back({column_of[m], c.get_num().get_si()});

    // rank(A) = rank(A A^T) over Q; the Gram matrix is small (n x n) with
    // tiny integer entries, which keeps Bareiss growth manageable.
    ZMat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long dot = 0;
            std::size_t pi = 0, pj = 0;
            while (pi < rows[i].size() && pj < rows[j].size()) {
                if (rows[i][pi].first < rows[j][pj].first)
                    ++pi;
                else if (rows[i][pi].first > rows[j][pj].first)
                    ++pj;
                else {
                    dot += rows[i][pi].second * rows[j][pj].second;
                    ++pi;
                    ++pj;
                }
            }
            gram.at(i, j) = dot;
            gram.at(j, i) = dot;
        }
    return rank_integer(std::move(gram));
}

LedgerReport verify_dimension_ledger(int d, bool include_rank_check) {
    if (d < 3) throw DomainError("ledger needs d >= 3");
    LedgerReport report;
    auto push = [&report](const std::string& name, const Integer& lhs, const Integer& rhs) {
        LedgerCheck c{name, int_str(lhs), int_str(rhs), lhs == rhs};
        if (!c.pass) report.pass = false;
        report.checks.push_back(std::move(c));
    };

    // (a) wedge^{d-1} W (x) Sym^2 W = S_{(2,1,..,1,1)} + S_{(3,1,..,1,0)}
    Integer lhs_a = Integer(d) * (Integer(d) * (d + 1) / 2);
    Partition two_hook = hook_with_head(2, d, 1);
    Partition three_hook = hook_with_head(3, d, 0);
    Integer rhs_a = hook_content_dim(two_hook, d) + hook_content_dim(three_hook, d);
    push("dim wedge^{d-1}xSym^2 = dim S_(2,1..1,1) + dim S_(3,1..1,0)", lhs_a, rhs_a);

    // sanity on the ambient ring dimension: dim S_{(3,1,..,1,0)} = d(C(d+1,2)-1)
    push("dim S_(3,1..1,0) = d(C(d+1,2)-1)", hook_content_dim(three_hook, d), Integer(q_variable_count(d)));

    // (b) Sym^2 of S_{(3,1,..,1,0)}: binomial dimension vs summand dims
    Integer n3 = hook_content_dim(three_hook, d);
    Integer lhs_b = n3 * (n3 + 1) / 2;
    Integer rhs_b = 0;
    for (const auto& lam : sym2_summand_shapes(d)) rhs_b += hook_content_dim(lam, d);
    push("C(dim S_(3,1..1,0)+1,2) = sum of Sym^2 summand dims", lhs_b, rhs_b);

    // (c) raw generator coefficient rank = dim S_(3,2,1..1,0) + dim S_(3,1..1,1)
    if (include_rank_check) {
        std::vector<int> v321{3, 2};
        for (int i = 0; i < d - 3; ++i) v321.push_back(1);
        Partition p321(std::move(v321));
        Partition p311 = hook_with_head(3, d, 1);
        Integer expected = hook_content_dim(p321, d) + hook_content_dim(p311, d);
        Integer rank = raw_generator_rank(d);
        push("raw generator rank = dim S_(3,2,1..1,0) + dim S_(3,1..1,1)", rank, expected);
    }
    return report;
}

Decomposition sym2_decompose_by_character(const Partition& lambda, int d) {
    if (d > 4) throw CapacityError("character-route Sym^2 limited to d <= 4");
    SymPoly chi = schur_polynomial(lambda, d);
    SymPoly sym2 = (chi * chi + chi.square_variables()) * Rational(1, 2);
    if (!sym2.is_symmetric()) throw Error("internal: Sym^2 character not symmetric");
    return peel_schur(std::move(sym2));
}

}  // namespace hilb
