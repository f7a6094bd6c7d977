#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hilb/polynomial.hpp"

namespace hilb {

// Index of a chart generator C(a; j, (i,k)). Canonical orientation keeps
// i < k; the swapped generator is minus the canonical one, so each unordered
// pair is stored once.
struct GenIndex {
    int a = 0;  // 0..d
    int j = 1;
    int i = 1;
    int k = 2;  // i < k after canonicalization

    auto operator<=>(const GenIndex&) const = default;
    std::string str() const;
};

enum class Stage { Raw, Eliminated, Q };

struct GeneratorSet {
    int d = 0;
    Stage stage = Stage::Raw;
    std::map<GenIndex, Poly> gens;
};

// Coefficient of x_a in P(x_k P(x_i x_j)) - P(x_i P(x_k x_j)), expanded in
// the chart coordinates. Any i, k with i != k is accepted (i == k gives 0);
// for a >= 1:
//   C(a;j,(i,k)) = d_{a,k} p_{0,ij} - d_{a,i} p_{0,kj}
//                  + sum_m (p_{m,ij} p_{a,km} - p_{m,kj} p_{a,im})
// and for a = 0 the same sum with p_{0,km}, p_{0,im} in place of the second
// factors.
Poly generator_raw(int d, int a, int j, int i, int k);

// Canonical-orientation generator; throws IndexError out of range or on i == k.
Poly build_generator(int d, const GenIndex& idx);

// All canonical generators, 0 <= a <= d, 1 <= j <= d, 1 <= i < k <= d.
GeneratorSet all_generators(int d);

// Cached immutable copy per d (construction is pure; safe concurrent reads).
const GeneratorSet& cached_generators(int d);

struct IdentityReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// sum_j C(j;j,(i,k)) == 0 for every pair i < k.
IdentityReport verify_trace_identity(int d);

// C(a;j,(i,k)) + C(a;k,(j,i)) + C(a;i,(k,j)) == 0 for 1 <= a <= d, j < i < k.
IdentityReport verify_cyclic_identity(int d);

// Reconstructs C(0;j,(i,k)) from the three-block combination of C(a >= 1)
// generators with auxiliary index u. The combination equals C(0;j,(i,k)) for
// u != j and 2 C(0;j,(i,k)) for u = j; the check asserts that exact identity.
IdentityReport verify_c0_generation(int d, int j, int i, int k, int u);

// The elimination image of p_{0,ij} (i <= j): minus the quadratic part of
// C(i+1; j, (i,i+1)), with i+1 wrapping to 1 at i = d.
Poly elimination_image(int d, int i, int j);

// Substitutes away every p_{0,..}; output generators (a >= 1) are homogeneous
// quadratic in the linear-term coordinates only.
GeneratorSet eliminate_linear(int d);

// p'_{r,st} -> q_{r,st} (r not in {s,t}), p'_{r,sr} -> q_{r,sr} + q_{s,ss};
// asserts no diagonal q_{s,ss} survives in any generator.
GeneratorSet substitute_q(int d, const GeneratorSet& eliminated);

// Number of off-diagonal q variables: d*(C(d+1,2) - 1).
long q_variable_count(int d);

}  // namespace hilb
