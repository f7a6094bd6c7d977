#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilb/generators.hpp"
#include "hilb/matrix.hpp"
#include "hilb/principal.hpp"

namespace hilb {
namespace fact {

inline constexpr int kD = 8;
inline constexpr int kRows = 90;
inline constexpr int kCols = 115;
inline constexpr int kInSetVars = 45;

// The 90 row indices of the degree-2 generator vector: a in 1..3 and the six
// index classes over 4..8, in the listed order, lexicographic by (j,i,k)
// within each class.
std::vector<GenIndex> enumerate_rows();

// One shifted coordinate p_{r,st} - d_{r,t} p_{s,ss}/2 - d_{r,s} p_{t,tt}/2.
struct ShiftedCoord {
    int r = 0, s = 0, t = 0;
    Poly expression;  // over d = 8
};

// The 115 column coordinates: 1 <= r,s <= 3 < t <= 8, then 4 <= r <= 8 with
// 4 <= s <= t <= 8 and (r,s,t) not all equal; lexicographic on (r,s,t).
std::vector<ShiftedCoord> enumerate_shifted();

struct Entry {
    int row = 0;
    int col = 0;
    int sign = 0;           // +1 / -1
    CoordIndex variable;    // in-set: r <= 3, s,t >= 4
};

struct FactorizationMatrix {
    std::vector<GenIndex> rows;
    std::vector<ShiftedCoord> cols;
    std::vector<Entry> entries;

    // dense access: 0 for absent, otherwise signed variable
    const Entry* find(int row, int col) const;
};

// Rewrites every row polynomial as sum over columns of (signed in-set
// variable) * (shifted coordinate) and checks M u = C symbolically; throws
// ExtractionError if any coefficient is not a single signed in-set variable
// or a diagonal term fails to cancel.
const FactorizationMatrix& extract_m();

// Residual M u - C per row; all must be zero (rechecked on demand).
bool verify_factorization(const FactorizationMatrix& m);

// Values for the 45 in-set variables p_{r,st}, 1 <= r <= 3, 4 <= s <= t <= 8.
struct InSetAssignment {
    std::map<CoordIndex, Rational> values;

    static InSetAssignment random(std::uint64_t seed, long height = 50);
    static InSetAssignment from_coords(const ProjectorCoords& coords);
    const Rational& get(const CoordIndex& v) const;
};

// M evaluated at the assignment (90 x 115 over Q).
QMat evaluate_m(const FactorizationMatrix& m, const InSetAssignment& a);

struct MinorSelection {
    std::vector<int> columns;  // 90 sorted distinct indices in 0..114
};

// Seeded random assignment, column pivots via elimination; retries up to 10
// fresh seeds. Throws Error if rank < 90 every time (evidence against the
// paper's nonzero-minor claim).
MinorSelection find_nonsingular_minor(std::uint64_t seed);

Rational minor_det_at(const FactorizationMatrix& m, const MinorSelection& sel, const InSetAssignment& a,
                      Exec exec = Exec::OpenMP);

struct SampleRecord {
    std::uint64_t seed = 0;
    PointConfig config;
    bool det_zero = false;
    double seconds = 0.0;
};

struct VanishingCertificate {
    bool pass = true;
    std::uint64_t seed = 0;
    MinorSelection selection;
    std::vector<SampleRecord> samples;
    std::optional<Rational> counterexample_det;
};

// Exact-zero determinants at n interpolated P_8 samples.
VanishingCertificate vanish_on_principal(const FactorizationMatrix& m, const MinorSelection& sel, int n_samples,
                                         std::uint64_t seed, long height = 20, Exec exec = Exec::OpenMP);

struct Minor89Report {
    int samples = 0;
    int minors_per_sample = 0;
    long nonzero_count = 0;
    long zero_count = 0;
    bool any_nonzero = false;
};

// Drops one row and one column of the selected minor (seeded choices),
// evaluates at interpolated P_8 coordinates. Report-only minimality evidence.
Minor89Report minor89_evidence(const FactorizationMatrix& m, const MinorSelection& sel, int n_samples,
                               std::uint64_t seed, int minors_per_sample = 5, Exec exec = Exec::OpenMP);

std::string m_matrix_to_json(const FactorizationMatrix& m);

}  // namespace fact
}  // namespace hilb
