#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hilb/errors.hpp"

namespace hilb {

// Exact arithmetic throughout; no floating point anywhere in the library.
// mpq_class keeps values canonical (lowest terms, positive denominator) under
// arithmetic; constructors from raw num/den go through make_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "num", "num/den", optional leading '-'.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rational(Integer(s), 1);
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_canonical(const Rational& q) {
    if (q.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q.get_num() == 0 ? q.get_den() == 1 : g == 1;
}

// Deterministic cross-platform RNG (splitmix64). Seeded tests and
// certificates must reproduce byte-for-byte on any stdlib, which rules out
// std::uniform_int_distribution.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi]; modulo bias is irrelevant for test-sample heights.
    long int_in(long lo, long hi) {
        if (hi < lo) throw DomainError("int_in: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Per-sample seed derivation: keeps parallel sample loops order-independent.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
        return r.next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace hilb
