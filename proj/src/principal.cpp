#include "hilb/principal.hpp"

#include <algorithm>
#include <array>

namespace hilb {

namespace {

// Interpolation system matrix: rows (1, x_1, ..., x_d) per point.
QMat vandermonde(const PointConfig& cfg) {
    const int n = cfg.d + 1;
    QMat v(n, n);
    for (int p = 0; p < n; ++p) {
        v.at(p, 0) = 1;
        for (int m = 1; m <= cfg.d; ++m) v.at(p, m) = cfg.points[p][m - 1];
    }
    return v;
}

std::vector<std::pair<int, int>> coordinate_pairs(int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) pairs.push_back({i, j});
    return pairs;
}

}  // namespace

bool PointConfig::spanning() const {
    if (static_cast<int>(points.size()) != d + 1) throw DimensionError("point configuration needs d+1 points");
    return det_exact(vandermonde(*this), Exec::Serial) != 0;
}

PointConfig sample_spanning(int d, std::uint64_t seed, long height) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        PointConfig cfg;
        cfg.d = d;
        cfg.points.assign(d + 1, std::vector<Rational>(d));
        for (auto& pt : cfg.points)
            for (auto& x : pt) x = make_rational(rng.int_in(-height, height));
        if (cfg.spanning()) return cfg;
    }
    throw SamplingError("no spanning configuration found in 100 attempts");
}

ProjectorCoords interpolate(const PointConfig& cfg) {
    const int d = cfg.d;
    const int n = d + 1;
    if (static_cast<int>(cfg.points.size()) != n) throw DimensionError("point configuration needs d+1 points");
    auto pairs = coordinate_pairs(d);

    QMat rhs(n, static_cast<int>(pairs.size()));
    for (int c = 0; c < static_cast<int>(pairs.size()); ++c)
        for (int p = 0; p < n; ++p)
            rhs.at(p, c) = cfg.points[p][pairs[c].first - 1] * cfg.points[p][pairs[c].second - 1];

    QMat sol = solve_exact(vandermonde(cfg), rhs, Exec::Serial);

    ProjectorCoords coords;
    coords.d = d;
    coords.values.assign(coord_count(d), Rational(0));
    for (int c = 0; c < static_cast<int>(pairs.size()); ++c)
        for (int r = 0; r <= d; ++r) coords.slot(r, pairs[c].first, pairs[c].second) = sol.at(r, c);
    return coords;
}

ChartReport verify_on_chart(const ProjectorCoords& coords) {
    const GeneratorSet& set = cached_generators(coords.d);
    ChartReport report;
    for (const auto& [idx, g] : set.gens) {
        if (g.evaluate(coords.values) != 0) {
            ++report.violations;
            if (report.pass) {
                report.pass = false;
                report.first_failure = idx.str();
            }
        }
    }
    return report;
}

MembershipVerdict membership_sample_test(const Poly& poly, int d, int n_samples, std::uint64_t seed, long height,
                                         Exec exec) {
    if (poly.dim() != d) throw DimensionError("polynomial dimension mismatch");
    MembershipVerdict verdict;
    verdict.samples = n_samples;
    std::vector<Rational> values(n_samples);
    std::vector<PointConfig> cfgs(n_samples);
    std::vector<std::string> errors(n_samples);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::OpenMP)
    for (int s = 0; s < n_samples; ++s) {
        try {
            cfgs[s] = sample_spanning(d, Rng::derive(seed, s), height);
            values[s] = poly.evaluate(interpolate(cfgs[s]).values);
        } catch (const std::exception& e) {
            errors[s] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw SamplingError(e);
    for (int s = 0; s < n_samples; ++s) {
        if (values[s] != 0) {
            verdict.vanishes_everywhere = false;
            verdict.counterexample = cfgs[s];
            verdict.counterexample_value = values[s];
            break;
        }
    }
    return verdict;
}

namespace {

// Sparse row of the Jacobian: (coordinate rank, exact value).
using SparseRow = std::vector<std::pair<int, Rational>>;

std::vector<SparseRow> jacobian_rows(const ProjectorCoords& coords) {
    const int d = coords.d;
    const GeneratorSet& set = cached_generators(d);
    std::vector<SparseRow> rows;
    rows.reserve(set.gens.size());
    for (const auto& [idx, g] : set.gens) {
        std::map<int, Rational> partials;
        for (const auto& [m, c] : g.terms()) {
            if (m.size() == 1) {
                partials[static_cast<int>(coord_rank(d, m[0]))] += c;
            } else {
                // degree-2 monomial: both occurrences contribute, which makes
                // squares come out with the factor 2 automatically
                partials[static_cast<int>(coord_rank(d, m[0]))] += c * coords.values[coord_rank(d, m[1])];
                partials[static_cast<int>(coord_rank(d, m[1]))] += c * coords.values[coord_rank(d, m[0])];
            }
        }
        SparseRow row;
        for (auto& [col, v] : partials)
            if (v != 0) row.push_back({col, v});
        rows.push_back(std::move(row));
    }
    return rows;
}

ZMat clear_sparse_rows(const std::vector<SparseRow>& rows, int cols) {
    ZMat z(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        Integer l = 1;
        for (const auto& [c, v] : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        for (const auto& [c, v] : rows[i]) {
            Rational scaled = v * Rational(l);
            z.at(i, c) = scaled.get_num();
        }
    }
    return z;
}

constexpr std::array<unsigned long, 3> kRankPrimes = {2305843009213693951UL,  // 2^61 - 1
                                                      9223372036854775783UL,  // largest prime < 2^63
                                                      2147483647UL};          // 2^31 - 1

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Gaussian elimination mod p; returns pivot (row, column) pairs in terms of
// the original row indices. This only SELECTS a candidate minor --
// certification is done in exact arithmetic.
std::vector<std::pair<int, int>> modp_pivots(const ZMat& m, unsigned long p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<unsigned long>> a(rows, std::vector<unsigned long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);

    std::vector<int> origin(rows);
    for (int i = 0; i < rows; ++i) origin[i] = i;

    std::vector<std::pair<int, int>> pivots;
    int step = 0;
    for (int col = 0; col < cols && step < rows; ++col) {
        int pivot_row = -1;
        for (int i = step; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        std::swap(a[pivot_row], a[step]);
        std::swap(origin[pivot_row], origin[step]);
        unsigned long inv = powmod(a[step][col], p - 2, p);
        for (int i = step + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            unsigned long f = mulmod(a[i][col], inv, p);
            for (int j = col; j < cols; ++j) {
                unsigned long sub = mulmod(f, a[step][j], p);
                a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + p - sub;
            }
        }
        pivots.push_back({origin[step], col});
        ++step;
    }
    return pivots;
}

}  // namespace

int jacobian_rank_at(const ProjectorCoords& coords, Exec exec) {
    ChartReport chart = verify_on_chart(coords);
    if (!chart.pass) throw PreconditionError("jacobian rank requested off the chart at " + chart.first_failure);
    auto rows = jacobian_rows(coords);
    ZMat z = clear_sparse_rows(rows, static_cast<int>(coord_count(coords.d)));
    return bareiss_eliminate(z, nullptr, exec);
}

int jacobian_rank_interpolated(const PointConfig& cfg, Exec exec) {
    const int d = cfg.d;
    const int ambient = static_cast<int>(coord_count(d));
    ProjectorCoords coords = interpolate(cfg);
    auto rows = jacobian_rows(coords);
    ZMat jz = clear_sparse_rows(rows, ambient);

    // Exact kernel: differentials of the interpolation map. V W = I gives the
    // inverse columns; the (p,q) tangent vector has entry
    // (d_{q,i} y_{p,j} + d_{q,j} y_{p,i} - p_{q,ij}) * W[m][p] at p_{m,ij}.
    const int n = d + 1;
    QMat vinv = solve_exact(vandermonde(cfg), QMat::identity(n), Exec::Serial);
    const int tangents = n * d;
    QMat t(ambient, tangents);
    {
        int tc = 0;
        for (int p = 0; p < n; ++p)
            for (int q = 1; q <= d; ++q, ++tc)
                for (int i = 1; i <= d; ++i)
                    for (int j = i; j <= d; ++j) {
                        Rational scale(0);
                        if (q == i) scale += cfg.points[p][j - 1];
                        if (q == j) scale += cfg.points[p][i - 1];
                        scale -= coords.get(q, i, j);
                        if (scale == 0) continue;
                        for (int m = 0; m <= d; ++m)
                            t.at(static_cast<int>(coord_rank(d, CoordIndex::make(m, i, j))), tc) =
                                scale * vinv.at(m, p);
                    }
    }

    // Upper bound: verify J t = 0 exactly and rank(T) = d(d+1).
    ZMat tz(ambient, tangents);
    for (int c = 0; c < tangents; ++c) {
        Integer l = 1;
        for (int r = 0; r < ambient; ++r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.at(r, c).get_den().get_mpz_t());
        for (int r = 0; r < ambient; ++r) tz.at(r, c) = Rational(t.at(r, c) * Rational(l)).get_num();
    }
    long nonzero_dots = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : nonzero_dots) if (exec == Exec::OpenMP)
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        for (int c = 0; c < tangents; ++c) {
            Integer dot = 0;
            for (const auto& entry : rows[r]) dot += jz.at(r, entry.first) * tz.at(entry.first, c);
            if (dot != 0) ++nonzero_dots;
        }
    }
    const bool product_zero = (nonzero_dots == 0);
    int kernel_dim = 0;
    if (product_zero) {
        ZMat tcopy = tz;
        kernel_dim = bareiss_eliminate(tcopy, nullptr, Exec::Serial);
    }
    const int upper = ambient - kernel_dim;

    // Lower bound: mod-p pivot selection, certified by one exact minor.
    if (kernel_dim == tangents) {
        for (unsigned long prime : kRankPrimes) {
            auto pivots = modp_pivots(jz, prime);
            if (static_cast<int>(pivots.size()) != upper) continue;
            ZMat minor(upper, upper);
            for (int i = 0; i < upper; ++i)
                for (int j = 0; j < upper; ++j) minor.at(i, j) = jz.at(pivots[i].first, pivots[j].second);
            if (det_integer(std::move(minor), exec) != 0) return upper;
        }
    }
    // The certificates did not meet; fall back to the general exact path.
    return bareiss_eliminate(jz, nullptr, exec);
}

std::vector<Rational> center_map(const ProjectorCoords& coords) {
    const int d = coords.d;
    std::vector<Rational> out(d);
    for (int j = 1; j <= d; ++j) {
        Rational sum(0);
        for (int r = 1; r <= d; ++r) sum += coords.get(r, j, r);
        out[j - 1] = sum / Rational(d + 1);
    }
    return out;
}

std::vector<Rational> centroid(const PointConfig& cfg) {
    std::vector<Rational> out(cfg.d, Rational(0));
    for (const auto& pt : cfg.points)
        for (int j = 0; j < cfg.d; ++j) out[j] += pt[j];
    for (auto& v : out) v /= Rational(cfg.d + 1);
    return out;
}

PointConfig translate(const PointConfig& cfg, const std::vector<Rational>& t) {
    PointConfig out = cfg;
    for (auto& pt : out.points)
        for (int j = 0; j < cfg.d; ++j) pt[j] += t[j];
    return out;
}

PointConfig scale_action(const PointConfig& cfg, const Rational& lambda) {
    if (lambda == 0) throw DomainError("scale_action needs lambda != 0");
    PointConfig out = cfg;
    for (auto& pt : out.points)
        for (auto& x : pt) x *= lambda;
    return out;
}

ProjectorCoords scale_coords(const ProjectorCoords& coords, const Rational& lambda) {
    if (lambda == 0) throw DomainError("scale_coords needs lambda != 0");
    ProjectorCoords out = coords;
    for (int r = 0; r <= coords.d; ++r)
        for (int s = 1; s <= coords.d; ++s)
            for (int t = s; t <= coords.d; ++t) out.slot(r, s, t) *= (r == 0) ? lambda * lambda : lambda;
    return out;
}

PointConfig gl_act(const QMat& g, const PointConfig& cfg) {
    if (g.rows() != cfg.d || g.cols() != cfg.d) throw DimensionError("gl_act matrix shape mismatch");
    if (det_exact(g, Exec::Serial) == 0) throw DomainError("gl_act needs an invertible matrix");
    PointConfig out = cfg;
    for (int p = 0; p <= cfg.d; ++p)
        for (int i = 0; i < cfg.d; ++i) {
            Rational v(0);
            for (int j = 0; j < cfg.d; ++j) v += g.at(i, j) * cfg.points[p][j];
            out.points[p][i] = v;
        }
    return out;
}

CurveSpec CurveSpec::make(int d, std::vector<std::pair<Rational, Rational>> anchors) {
    if (static_cast<int>(anchors.size()) != d) throw DomainError("curve needs d anchors");
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        auto& [a, b] = anchors[i];
        if (a == 0 && b == 0) throw DomainError("anchor [0:0] is not a projective point");
        if (a == b) throw DomainError("anchor [1:1] excluded");
        for (std::size_t j = 0; j < i; ++j)
            if (anchors[i].first * anchors[j].second == anchors[j].first * anchors[i].second)
                throw DomainError("anchors must be pairwise distinct");
    }
    CurveSpec spec;
    spec.d = d;
    spec.anchors = std::move(anchors);
    return spec;
}

PointConfig CurveSpec::base() const {
    PointConfig cfg;
    cfg.d = d;
    cfg.points.assign(d + 1, std::vector<Rational>(d, Rational(1)));
    for (int i = 0; i < d; ++i) cfg.points[i][i] = make_rational(-d);
    return cfg;
}

PointConfig curve_eval(const CurveSpec& spec, const Rational& alpha, const Rational& beta) {
    if (alpha == 0 && beta == 0) throw DomainError("parameter [0:0] is not a projective point");
    for (const auto& [a, b] : spec.anchors)
        if (b * alpha - a * beta == 0) throw DomainError("parameter equals an anchor; use curve_limit");
    PointConfig cfg = spec.base();
    for (int j = 0; j < spec.d; ++j) {
        const auto& [a, b] = spec.anchors[j];
        Rational factor = (b * alpha - a * beta) / (b - a);
        for (auto& pt : cfg.points) pt[j] *= factor;
    }
    return cfg;
}

CurveFunctions curve_functions(const CurveSpec& spec, bool param_is_alpha_over_beta) {
    const int d = spec.d;
    const int n = d + 1;
    PointConfig base = spec.base();

    // Scaling factor of coordinate j as a linear polynomial in the parameter.
    std::vector<UPoly> factor(d);
    for (int j = 0; j < d; ++j) {
        const auto& [a, b] = spec.anchors[j];
        Rational den = b - a;
        factor[j] = param_is_alpha_over_beta ? UPoly::linear(-a / den, b / den)   // (b t - a)/(b - a)
                                             : UPoly::linear(b / den, -a / den);  // (b - a s)/(b - a)
    }

    std::vector<std::vector<UPoly>> v(n, std::vector<UPoly>(n));
    for (int p = 0; p < n; ++p) {
        v[p][0] = UPoly(Rational(1));
        for (int m = 1; m <= d; ++m) v[p][m] = factor[m - 1] * UPoly(base.points[p][m - 1]);
    }

    CurveFunctions fns;
    fns.d = d;
    fns.param_is_alpha_over_beta = param_is_alpha_over_beta;
    fns.den = upoly_det(v);
    if (fns.den.is_zero()) throw SingularError("curve interpolation system degenerate along the whole line", 0);
    fns.num.assign(coord_count(d), UPoly());

    auto pairs = coordinate_pairs(d);
    for (const auto& [i, j] : pairs) {
        std::vector<UPoly> rhs(n);
        for (int p = 0; p < n; ++p)
            rhs[p] = factor[i - 1] * factor[j - 1] * UPoly(base.points[p][i - 1] * base.points[p][j - 1]);
        for (int m = 0; m <= d; ++m) {
            auto v_m = v;
            for (int p = 0; p < n; ++p) v_m[p][m] = rhs[p];
            fns.num[coord_rank(d, CoordIndex::make(m, i, j))] = upoly_det(std::move(v_m));
        }
    }
    return fns;
}

ProjectorCoords curve_limit(const CurveSpec& spec, int anchor_index) {
    if (anchor_index < 0 || anchor_index >= spec.d) throw IndexError("anchor index out of range");
    const auto& [a, b] = spec.anchors[anchor_index];
    const bool use_t = (b != 0);  // anchor [1:0] is at infinity in the t chart
    const Rational t0 = use_t ? Rational(a / b) : Rational(b / a);

    CurveFunctions fns = curve_functions(spec, use_t);
    int den_mult = fns.den.root_multiplicity(t0);
    UPoly den = fns.den.deflate(t0, den_mult);
    Rational den_val = den.eval(t0);

    ProjectorCoords coords;
    coords.d = spec.d;
    coords.values.assign(coord_count(spec.d), Rational(0));
    for (std::size_t rank = 0; rank < fns.num.size(); ++rank) {
        const UPoly& num = fns.num[rank];
        if (num.is_zero()) continue;
        int num_mult = num.root_multiplicity(t0);
        if (num_mult < den_mult)
            throw ExtensionFailure("curve coordinate has a pole at the anchor (morphism fails to extend)");
        coords.values[rank] = num.deflate(t0, den_mult).eval(t0) / den_val;
    }
    return coords;
}

}  // namespace hilb
