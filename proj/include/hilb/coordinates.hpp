#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "hilb/errors.hpp"

namespace hilb {

// Chart coordinate p_{r,st}: r == 0 is the constant-term coordinate p_{0,st},
// r >= 1 the linear-term coordinate. Canonical form keeps s <= t
// (p_{r,st} = p_{r,ts}). After the q-substitution the same index shape is
// reused for the off-diagonal variables q_{r,st}.
struct CoordIndex {
    int r = 0;
    int s = 1;
    int t = 1;

    static CoordIndex make(int r, int s, int t) {
        if (r < 0 || s < 1 || t < 1) throw IndexError("coordinate index out of range");
        if (s > t) std::swap(s, t);
        return CoordIndex{r, s, t};
    }

    bool constant_term() const { return r == 0; }
    bool diagonal() const { return r == s && s == t; }

    // The 45 entries-of-M variables at d = 8: p_{r,st}, 1 <= r <= 3 <= 4 <= s,t.
    bool in_set() const { return r >= 1 && r <= 3 && s >= 4; }

    auto operator<=>(const CoordIndex&) const = default;
};

inline void check_coord_range(const CoordIndex& c, int d) {
    if (c.r > d || c.s > d || c.t > d) throw IndexError("coordinate index exceeds dimension");
}

// Dense enumeration of all (d+1)*C(d+1,2) coordinates, rank order = (r, s, t).
inline std::size_t coord_count(int d) {
    return static_cast<std::size_t>(d + 1) * (static_cast<std::size_t>(d) * (d + 1) / 2);
}

inline std::size_t coord_rank(int d, const CoordIndex& c) {
    check_coord_range(c, d);
    std::size_t pairs = static_cast<std::size_t>(d) * (d + 1) / 2;
    // pair rank of (s,t), 1 <= s <= t <= d, ordered by (s,t); there are
    // d - s' + 1 pairs with first entry s'
    std::size_t pr = static_cast<std::size_t>(c.s - 1) * (d + 1) - static_cast<std::size_t>(c.s) * (c.s - 1) / 2 +
                     static_cast<std::size_t>(c.t - c.s);
    return static_cast<std::size_t>(c.r) * pairs + pr;
}

inline std::vector<CoordIndex> all_coords(int d) {
    std::vector<CoordIndex> out;
    out.reserve(coord_count(d));
    for (int r = 0; r <= d; ++r)
        for (int s = 1; s <= d; ++s)
            for (int t = s; t <= d; ++t) out.push_back(CoordIndex{r, s, t});
    return out;
}

}  // namespace hilb
