#include <doctest.h>

#include <map>
#include <vector>

#include "hilb/generators.hpp"

using namespace hilb;

namespace {

// Independent oracle for the generator formula: expand the coefficient of
// x_a in P(x_k P(x_i x_j)) - P(x_i P(x_k x_j)) by direct symbolic
// composition, with P(x_s x_t) = p_{0,st} + sum_m p_{m,st} x_m and P fixing
// 1, x_1, ..., x_d. Elements of R[x]_{<=2} are maps x-monomial -> Poly.
using XMono = std::vector<int>;  // sorted variable list, size <= 2
using XPoly = std::map<XMono, Poly>;

void xadd(XPoly& f, const XMono& m, const Poly& c) {
    auto [it, fresh] = f.try_emplace(m, c);
    if (!fresh) it->second += c;
}

XPoly apply_projector(int d, const XPoly& f) {
    XPoly out;
    for (const auto& [m, coeff] : f) {
        if (m.size() <= 1) {
            xadd(out, m, coeff);
        } else {
            xadd(out, {}, coeff * Poly::variable(d, CoordIndex::make(0, m[0], m[1])));
            for (int v = 1; v <= d; ++v) xadd(out, {v}, coeff * Poly::variable(d, CoordIndex::make(v, m[0], m[1])));
        }
    }
    return out;
}

XPoly times_x(const XPoly& f, int k) {
    XPoly out;
    for (const auto& [m, coeff] : f) {
        REQUIRE(m.size() <= 1);
        XMono xm = m;
        xm.push_back(k);
        std::sort(xm.begin(), xm.end());
        xadd(out, xm, coeff);
    }
    return out;
}

Poly deboor_oracle(int d, int a, int j, int i, int k) {
    XPoly xixj{{XMono{std::min(i, j), std::max(i, j)}, Poly::constant(d, 1)}};
    XPoly xkxj{{XMono{std::min(k, j), std::max(k, j)}, Poly::constant(d, 1)}};
    XPoly lhs = apply_projector(d, times_x(apply_projector(d, xixj), k));
    XPoly rhs = apply_projector(d, times_x(apply_projector(d, xkxj), i));
    XMono target = (a == 0) ? XMono{} : XMono{a};
    Poly out(d);
    if (auto it = lhs.find(target); it != lhs.end()) out += it->second;
    if (auto it = rhs.find(target); it != rhs.end()) out -= it->second;
    return out;
}

}  // namespace

TEST_CASE("closed generator formula matches de Boor expansion (d=3,4, all indices)") {
    for (int d = 3; d <= 4; ++d)
        for (int a = 0; a <= d; ++a)
            for (int j = 1; j <= d; ++j)
                for (int i = 1; i <= d; ++i)
                    for (int k = 1; k <= d; ++k)
                        CHECK(generator_raw(d, a, j, i, k) == deboor_oracle(d, a, j, i, k));
}

TEST_CASE("d=3 specialization of the displayed quadratic case, frozen by hand") {
    // C(1;2,(2,3)) = sum_m (p_{m,22} p_{1,3m} - p_{m,32} p_{1,2m})
    const int d = 3;
    Poly expected(d);
    expected.add_term({CoordIndex::make(1, 2, 2), CoordIndex::make(1, 1, 3)}, 1);
    expected.add_term({CoordIndex::make(1, 2, 3), CoordIndex::make(1, 1, 2)}, -1);
    expected.add_term({CoordIndex::make(2, 2, 2), CoordIndex::make(1, 2, 3)}, 1);
    expected.add_term({CoordIndex::make(2, 2, 3), CoordIndex::make(1, 2, 2)}, -1);
    expected.add_term({CoordIndex::make(3, 2, 2), CoordIndex::make(1, 3, 3)}, 1);
    expected.add_term({CoordIndex::make(3, 2, 3), CoordIndex::make(1, 2, 3)}, -1);
    CHECK(build_generator(d, GenIndex{1, 2, 2, 3}) == expected);
}

TEST_CASE("antisymmetry and the a=k linear term") {
    for (int d = 3; d <= 5; ++d)
        for (int a = 0; a <= d; ++a)
            for (int j = 1; j <= d; ++j)
                for (int i = 1; i <= d; ++i)
                    for (int k = i + 1; k <= d; ++k)
                        CHECK((generator_raw(d, a, j, i, k) + generator_raw(d, a, j, k, i)).is_zero());

    // C(k;j,(i,k)) = p_{0,ij} + quadratic
    Poly g = build_generator(3, GenIndex{3, 1, 2, 3});
    Monomial lin{CoordIndex::make(0, 1, 2)};
    auto it = g.terms().find(lin);
    REQUIRE(it != g.terms().end());
    CHECK(it->second == 1);

    CHECK_THROWS_AS(build_generator(3, GenIndex{1, 1, 2, 2}), IndexError);
    CHECK_THROWS_AS(generator_raw(3, 4, 1, 1, 2), IndexError);
}

TEST_CASE("generator enumeration counts") {
    CHECK(all_generators(3).gens.size() == 36);
    GeneratorSet g8 = all_generators(8);
    CHECK(g8.gens.size() == 2016);
    for (const auto& [idx, g] : g8.gens) CHECK(g.degree() <= 2);
}

TEST_CASE("trace and cyclic identities, with a mutation sanity check") {
    for (int d = 3; d <= 4; ++d) {
        CHECK(verify_trace_identity(d).pass);
        CHECK(verify_cyclic_identity(d).pass);
    }

    // perturbing one coefficient of one generator must be detected
    const int d = 3;
    Poly sum(d);
    for (int j = 1; j <= d; ++j) sum += generator_raw(d, j, j, 1, 2);
    CHECK(sum.is_zero());
    Poly perturbed = sum + Poly::variable(d, CoordIndex::make(1, 1, 1));
    CHECK(!perturbed.is_zero());

    // dropping one of the three cyclic summands leaves a nonzero polynomial
    Poly partial = generator_raw(d, 1, 1, 2, 3) + generator_raw(d, 1, 3, 1, 2);
    CHECK(!partial.is_zero());
}

TEST_CASE("C(0;..) generation identity") {
    const int d3 = 3;
    for (int j = 1; j <= d3; ++j)
        for (int i = 1; i <= d3; ++i)
            for (int k = i + 1; k <= d3; ++k)
                for (int u = 1; u <= d3; ++u) CHECK(verify_c0_generation(d3, j, i, k, u).pass);

    const int d4 = 4;
    for (int j = 1; j <= d4; ++j)
        for (int i = 1; i <= d4; ++i)
            for (int k = i + 1; k <= d4; ++k) CHECK(verify_c0_generation(d4, j, i, k, 1).pass);

    // dropping the middle block leaves a nonzero difference
    {
        const int d = 3, j = 1, i = 2, k = 3, u = 1;
        Poly rhs(d);
        for (int t = 1; t <= d; ++t) {
            rhs -= Poly::variable(d, CoordIndex::make(u, t, u)) * generator_raw(d, t, j, i, k);
            rhs += Poly::variable(d, CoordIndex::make(t, k, u)) * generator_raw(d, u, i, j, t);
            rhs -= Poly::variable(d, CoordIndex::make(t, i, u)) * generator_raw(d, u, k, j, t);
        }
        for (int m = 1; m <= d; ++m) {
            rhs += Poly::variable(d, CoordIndex::make(m, i, j)) * generator_raw(d, u, k, m, u);
            rhs -= Poly::variable(d, CoordIndex::make(m, k, j)) * generator_raw(d, u, i, m, u);
        }
        CHECK(!(generator_raw(d, 0, j, i, k) - rhs).is_zero());
    }
}

TEST_CASE("linear elimination yields homogeneous quadrics without p_0") {
    for (int d = 3; d <= 4; ++d) {
        GeneratorSet e = eliminate_linear(d);
        CHECK(e.gens.size() == static_cast<std::size_t>(d) * d * (d * (d - 1) / 2));
        for (const auto& [idx, g] : e.gens) {
            CHECK(g.is_homogeneous(2));
            for (const auto& v : g.variables()) CHECK(!v.constant_term());
        }
        // the defining generators themselves map to zero
        for (int i = 1; i <= d; ++i)
            for (int j = i; j <= d; ++j) {
                int n = (i == d) ? 1 : i + 1;
                GenIndex canonical{n, j, std::min(i, n), std::max(i, n)};
                CHECK(e.gens.at(canonical).is_zero());
            }
    }
}

TEST_CASE("q-substitution kills the diagonal and shrinks to d(C(d+1,2)-1) variables") {
    for (int d = 3; d <= 4; ++d) {
        GeneratorSet q = substitute_q(d, eliminate_linear(d));
        std::set<CoordIndex> vars;
        for (const auto& [idx, g] : q.gens) {
            CHECK(g.is_homogeneous(2));
            for (const auto& v : g.variables()) {
                CHECK(!v.diagonal());
                CHECK(!v.constant_term());
                vars.insert(v);
            }
        }
        CHECK(static_cast<long>(vars.size()) == q_variable_count(d));
    }
    CHECK(q_variable_count(3) == 15);
    CHECK(q_variable_count(8) == 280);
}

TEST_CASE("distinct-index generators reduce verbatim to the q pattern (paper display)") {
    // for distinct a,i,j,k the reduction leaves the same bilinear pattern
    const int d = 5;
    GeneratorSet q = substitute_q(d, eliminate_linear(d));
    CHECK(q.gens.at(GenIndex{1, 2, 3, 4}) == generator_raw(d, 1, 2, 3, 4));
    CHECK(q.gens.at(GenIndex{5, 4, 2, 3}) == generator_raw(d, 5, 4, 2, 3));
}

TEST_CASE("in-set coordinate locus annihilates every generator (small-d variant)") {
    const int d = 5;
    std::map<CoordIndex, Poly> to_zero;
    for (const auto& v : all_coords(d))
        if (!v.in_set()) to_zero.emplace(v, Poly(d));
    for (const auto& [idx, g] : all_generators(d).gens) CHECK(g.substitute(to_zero, true).is_zero());
}
