#include <doctest.h>

#include "hilb/principal.hpp"

using namespace hilb;

namespace {

PointConfig balanced_config(int d) {
    PointConfig cfg;
    cfg.d = d;
    cfg.points.assign(d + 1, std::vector<Rational>(d, Rational(1)));
    for (int i = 0; i < d; ++i) cfg.points[i][i] = make_rational(-d);
    return cfg;
}

CurveSpec spec3() {
    return CurveSpec::make(3, {{make_rational(0), make_rational(1)},
                               {make_rational(1), make_rational(0)},
                               {make_rational(2), make_rational(1)}});
}

}  // namespace

TEST_CASE("interpolation: x1 x2 vanishing on the d=2 axis configuration") {
    PointConfig cfg;
    cfg.d = 2;
    cfg.points = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(cfg.spanning());
    ProjectorCoords c = interpolate(cfg);
    CHECK(c.get(0, 1, 2) == 0);
    CHECK(c.get(1, 1, 2) == 0);
    CHECK(c.get(2, 1, 2) == 0);
}

TEST_CASE("interpolated coordinates satisfy every chart equation (de Boor closure)") {
    for (int d = 3; d <= 5; ++d)
        for (int s = 0; s < 5; ++s) {
            PointConfig cfg = sample_spanning(d, Rng::derive(2026 + d, s));
            CHECK(verify_on_chart(interpolate(cfg)).pass);
        }

    // a single perturbed value breaks some generator, with a name attached
    PointConfig cfg = sample_spanning(3, 7);
    ProjectorCoords bad = interpolate(cfg);
    bad.slot(1, 1, 1) += 1;
    ChartReport rep = verify_on_chart(bad);
    CHECK(!rep.pass);
    CHECK(!rep.first_failure.empty());
}

TEST_CASE("non-spanning configurations are rejected") {
    PointConfig flat;
    flat.d = 2;
    flat.points = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    CHECK(!flat.spanning());
    CHECK_THROWS_AS(interpolate(flat), SingularError);
}

TEST_CASE("balanced section-5 configuration is permutation symmetric") {
    const int d = 3;
    ProjectorCoords c = interpolate(balanced_config(d));
    // conjugating by any coordinate transposition fixes the coordinates
    for (int swap_a = 1; swap_a <= d; ++swap_a)
        for (int swap_b = swap_a + 1; swap_b <= d; ++swap_b) {
            auto sigma = [&](int x) { return x == swap_a ? swap_b : (x == swap_b ? swap_a : x); };
            for (int r = 0; r <= d; ++r)
                for (int s = 1; s <= d; ++s)
                    for (int t = s; t <= d; ++t)
                        CHECK(c.get(r, s, t) == c.get(r == 0 ? 0 : sigma(r), sigma(s), sigma(t)));
        }
}

TEST_CASE("membership sampling: generators vanish, a bare variable does not") {
    const int d = 8;
    cached_generators(d);
    Poly gen = build_generator(d, GenIndex{1, 4, 5, 6});
    MembershipVerdict v = membership_sample_test(gen, d, 20, 11);
    CHECK(v.vanishes_everywhere);

    Poly p111 = Poly::variable(d, CoordIndex::make(1, 1, 1));
    MembershipVerdict w = membership_sample_test(p111, d, 20, 11);
    CHECK(!w.vanishes_everywhere);
    REQUIRE(w.counterexample.has_value());
    CHECK(p111.evaluate(interpolate(*w.counterexample).values) == *w.counterexample_value);

    CHECK(membership_sample_test(Poly(d), d, 5, 11).vanishes_everywhere);
}

TEST_CASE("jacobian rank at generic interpolated points, d=3..7") {
    for (int d = 3; d <= 7; ++d) {
        const int expected = static_cast<int>(coord_count(d)) - d * (d + 1);
        const int samples = d <= 4 ? 5 : (d == 5 ? 2 : 1);
        for (int s = 0; s < samples; ++s) {
            PointConfig cfg = sample_spanning(d, Rng::derive(31 + d, s));
            CHECK(jacobian_rank_interpolated(cfg) == expected);
            // the general elimination path agrees
            if (s == 0 && d <= 4) CHECK(jacobian_rank_at(interpolate(cfg)) == expected);
        }
    }
    // off-chart coordinates are rejected
    ProjectorCoords off;
    off.d = 3;
    off.values.assign(coord_count(3), Rational(1));
    CHECK_THROWS_AS(jacobian_rank_at(off), PreconditionError);
}

TEST_CASE("center map equals the centroid and is translation equivariant") {
    for (int s = 0; s < 10; ++s) {
        PointConfig cfg = sample_spanning(3, Rng::derive(57, s));
        auto c = center_map(interpolate(cfg));
        CHECK(c == centroid(cfg));

        Rng rng(Rng::derive(58, s));
        std::vector<Rational> t = {make_rational(rng.int_in(-9, 9)), make_rational(rng.int_in(-9, 9)),
                                   make_rational(rng.int_in(-9, 9))};
        auto shifted = center_map(interpolate(translate(cfg, t)));
        for (int j = 0; j < 3; ++j) CHECK(shifted[j] == c[j] + t[j]);
    }
    // the balanced configuration maps to the origin
    for (const auto& x : center_map(interpolate(balanced_config(3)))) CHECK(x == 0);
}

TEST_CASE("scaling acts with weights lambda^2 on p_0 and lambda on p_r") {
    PointConfig cfg = sample_spanning(3, 513);
    ProjectorCoords base = interpolate(cfg);
    CHECK(scale_action(cfg, 1).points == cfg.points);
    for (const Rational& lambda : {Rational(2), Rational(-1), make_rational(5, 2)}) {
        ProjectorCoords via_points = interpolate(scale_action(cfg, lambda));
        ProjectorCoords via_weights = scale_coords(base, lambda);
        CHECK(via_points.values == via_weights.values);
    }
    // lambda = -1 fixes p_0 and negates the linear coordinates
    ProjectorCoords neg = interpolate(scale_action(cfg, -1));
    CHECK(neg.get(0, 1, 2) == base.get(0, 1, 2));
    CHECK(neg.get(1, 2, 3) == -base.get(1, 2, 3));
    CHECK_THROWS_AS(scale_action(cfg, 0), DomainError);
}

TEST_CASE("GL action on configurations") {
    PointConfig cfg = sample_spanning(3, 88);
    CHECK(gl_act(QMat::identity(3), cfg).points == cfg.points);

    // a coordinate permutation permutes the interpolated indices
    QMat perm(3, 3);
    perm.at(0, 1) = 1;
    perm.at(1, 0) = 1;
    perm.at(2, 2) = 1;
    ProjectorCoords before = interpolate(cfg);
    ProjectorCoords after = interpolate(gl_act(perm, cfg));
    auto sigma = [](int x) { return x == 1 ? 2 : (x == 2 ? 1 : x); };
    for (int r = 0; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int t = s; t <= 3; ++t)
                CHECK(after.get(r == 0 ? 0 : sigma(r), sigma(s), sigma(t)) == before.get(r, s, t));

    // well-definedness: configurations with equal coordinates stay equal
    PointConfig reordered = cfg;
    std::swap(reordered.points[0], reordered.points[2]);
    CHECK(interpolate(reordered).values == before.values);
    Rng rng(4711);
    QMat g(3, 3);
    do {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g.at(i, j) = make_rational(rng.int_in(-5, 5));
    } while (det_exact(g) == 0);
    CHECK(interpolate(gl_act(g, cfg)).values == interpolate(gl_act(g, reordered)).values);

    CHECK_THROWS_AS(gl_act(QMat(3, 3), cfg), DomainError);
}

TEST_CASE("curve evaluation: base point, origin center, chart closure") {
    CurveSpec spec = spec3();
    CHECK(curve_eval(spec, 1, 1).points == spec.base().points);

    for (long n : {-2L, 3L, 10L}) {
        PointConfig cfg = curve_eval(spec, make_rational(n, 3), 1);
        ProjectorCoords c = interpolate(cfg);
        for (const auto& x : center_map(c)) CHECK(x == 0);
        CHECK(verify_on_chart(c).pass);
    }
    // parameters at an anchor are rejected on the plain path
    CHECK_THROWS_AS(curve_eval(spec, 0, 1), DomainError);
    CHECK_THROWS_AS(curve_eval(spec, 1, 0), DomainError);

    // anchor validation
    CHECK_THROWS_AS(CurveSpec::make(2, {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}), DomainError);
    CHECK_THROWS_AS(CurveSpec::make(2, {{Rational(2), Rational(1)}, {Rational(4), Rational(2)}}), DomainError);
}

TEST_CASE("curve limits extend finitely and stay on the chart") {
    CurveSpec spec = spec3();
    for (int anchor = 0; anchor < 3; ++anchor) {
        ProjectorCoords lim = curve_limit(spec, anchor);
        CHECK(verify_on_chart(lim).pass);
    }

    // at the limit the anchor coordinate collapses: points j and d+1 collide
    ProjectorCoords lim0 = curve_limit(spec, 0);
    // reconstruct the colliding configuration directly: zero out coordinate 0
    PointConfig collided = spec.base();
    Rational f1 = (spec.anchors[1].second * spec.anchors[0].first - spec.anchors[1].first * spec.anchors[0].second) /
                  (spec.anchors[1].second - spec.anchors[1].first);
    Rational f2 = (spec.anchors[2].second * spec.anchors[0].first - spec.anchors[2].first * spec.anchors[0].second) /
                  (spec.anchors[2].second - spec.anchors[2].first);
    for (auto& pt : collided.points) {
        pt[0] = 0;
        pt[1] *= f1;
        pt[2] *= f2;
    }
    CHECK(collided.points[0] == collided.points[3]);  // x_1 and x_4 collide

    // symbolic limit agrees with plain evaluation along t_n -> t0 = 0
    CurveFunctions fns = curve_functions(spec, true);
    for (long n : {1L, 2L, 5L}) {
        Rational tn = make_rational(1, 10 * n);
        ProjectorCoords direct = interpolate(curve_eval(spec, tn, 1));
        Rational den = fns.den.eval(tn);
        for (std::size_t rk = 0; rk < direct.values.size(); ++rk)
            CHECK(fns.num[rk].eval(tn) / den == direct.values[rk]);
    }
}

TEST_CASE("membership and chart sampling honor the per-sample seed derivation") {
    // same seed -> identical verdicts and configurations; different seed differs
    PointConfig a = sample_spanning(4, Rng::derive(123, 0));
    PointConfig b = sample_spanning(4, Rng::derive(123, 0));
    CHECK(a.points == b.points);
    PointConfig c = sample_spanning(4, Rng::derive(123, 1));
    CHECK(a.points != c.points);
}
