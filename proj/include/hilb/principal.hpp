#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilb/generators.hpp"
#include "hilb/matrix.hpp"
#include "hilb/polynomial.hpp"
#include "hilb/upoly.hpp"

namespace hilb {

// d+1 rational points in Q^d. Interpolation needs the affine span to be all
// of Q^d, i.e. the (d+1)x(d+1) matrix with rows (1, point) nonsingular.
struct PointConfig {
    int d = 0;
    std::vector<std::vector<Rational>> points;  // (d+1) x d

    bool spanning() const;
};

// All chart coordinates of an ideal projector, stored dense by coord_rank.
struct ProjectorCoords {
    int d = 0;
    std::vector<Rational> values;  // size (d+1)*C(d+1,2)

    const Rational& get(int r, int s, int t) const { return values.at(coord_rank(d, CoordIndex::make(r, s, t))); }
    Rational& slot(int r, int s, int t) { return values.at(coord_rank(d, CoordIndex::make(r, s, t))); }
};

// Uniform integer points with coordinates in [-height, height]; redraws until
// spanning (at most 100 attempts).
PointConfig sample_spanning(int d, std::uint64_t seed, long height = 20);

// Solves the (d+1)x(d+1) interpolation system for all pairs (i <= j) at once:
// x_i x_j = p_{0,ij} + sum_m p_{m,ij} x_m at every point of the configuration.
ProjectorCoords interpolate(const PointConfig& cfg);

struct ChartReport {
    bool pass = true;
    long violations = 0;
    std::string first_failure;  // generator index description
};

// Evaluates every generator at the coordinates; exact zero required.
ChartReport verify_on_chart(const ProjectorCoords& coords);

struct MembershipVerdict {
    bool vanishes_everywhere = true;
    int samples = 0;
    std::optional<PointConfig> counterexample;
    std::optional<Rational> counterexample_value;
};

// Evaluates poly at n_samples seeded interpolated configurations; exact.
MembershipVerdict membership_sample_test(const Poly& poly, int d, int n_samples, std::uint64_t seed,
                                         long height = 20, Exec exec = Exec::OpenMP);

// Exact rank of the Jacobian of all generators at the coordinates (general
// path: fraction-free elimination on the full matrix).
int jacobian_rank_at(const ProjectorCoords& coords, Exec exec = Exec::OpenMP);

// Certified fast path for interpolated points: a nonzero r x r minor gives
// rank >= r, and the differentials of the interpolation map span an exact
// kernel of dimension d(d+1), giving rank <= ambient - d(d+1). Falls back to
// the general path if the two bounds do not meet.
int jacobian_rank_interpolated(const PointConfig& cfg, Exec exec = Exec::OpenMP);

// j-th entry (sum_r p_{r,jr}) / (d+1); equals the center of mass of the
// underlying points for interpolated coordinates.
std::vector<Rational> center_map(const ProjectorCoords& coords);

std::vector<Rational> centroid(const PointConfig& cfg);

PointConfig translate(const PointConfig& cfg, const std::vector<Rational>& t);
PointConfig scale_action(const PointConfig& cfg, const Rational& lambda);

// Induced transform on coordinates: p_{0,ij} -> lambda^2 p_{0,ij},
// p_{r,st} -> lambda p_{r,st}.
ProjectorCoords scale_coords(const ProjectorCoords& coords, const Rational& lambda);

// Applies an invertible d x d matrix to every point.
PointConfig gl_act(const QMat& g, const PointConfig& cfg);

// The rational curve of section-5 type: base points x_{i,j} = -d (i = j),
// 1 (i != j), coordinate j scaled by (b_j a - a_j b)/(b_j - a_j).
struct CurveSpec {
    int d = 0;
    std::vector<std::pair<Rational, Rational>> anchors;  // [a_j : b_j], != [1:1], distinct

    static CurveSpec make(int d, std::vector<std::pair<Rational, Rational>> anchors);
    PointConfig base() const;
};

PointConfig curve_eval(const CurveSpec& spec, const Rational& alpha, const Rational& beta);

// Projector coordinates along the curve as univariate rational functions of
// the affine parameter (t = alpha/beta when the anchor has b != 0, otherwise
// s = beta/alpha). num[rank]/den, with den the interpolation determinant.
struct CurveFunctions {
    int d = 0;
    bool param_is_alpha_over_beta = true;
    UPoly den;
    std::vector<UPoly> num;  // by coord_rank
};

CurveFunctions curve_functions(const CurveSpec& spec, bool param_is_alpha_over_beta);

// Limit of the coordinates at anchor j: cancels the shared (t - t0) factors
// exactly; throws ExtensionFailure on a genuine pole.
ProjectorCoords curve_limit(const CurveSpec& spec, int anchor_index);

}  // namespace hilb
