#include "hilb/upoly.hpp"

#include <algorithm>

namespace hilb {

UPoly UPoly::linear(Rational c0, Rational c1) {
    UPoly p;
    p.c_ = {std::move(c0), std::move(c1)};
    p.trim();
    return p;
}

const Rational& UPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::divexact(const UPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    UPoly rem = *this, q;
    if (rem.is_zero()) return q;
    if (rem.degree() < divisor.degree()) throw DomainError("inexact polynomial division");
    q.c_.assign(rem.degree() - divisor.degree() + 1, Rational(0));
    const Rational& lead = divisor.c_.back();
    for (int k = rem.degree() - divisor.degree(); k >= 0; --k) {
        Rational f = rem.c_[k + divisor.degree()] / lead;
        q.c_[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j) rem.c_[k + j] -= f * divisor.c_[j];
    }
    rem.trim();
    if (!rem.is_zero()) throw DomainError("inexact polynomial division");
    q.trim();
    return q;
}

Rational UPoly::eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

int UPoly::root_multiplicity(const Rational& t0) const {
    if (is_zero()) return 0;
    UPoly p = *this;
    int mult = 0;
    while (!p.is_zero() && p.eval(t0) == 0) {
        p = p.deflate(t0, 1);
        ++mult;
    }
    return mult;
}

UPoly UPoly::deflate(const Rational& t0, int times) const {
    UPoly p = *this;
    UPoly factor = UPoly::linear(-t0, 1);
    for (int i = 0; i < times; ++i) p = p.divexact(factor);
    return p;
}

UPoly upoly_det(std::vector<std::vector<UPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return UPoly(Rational(1));
    UPoly prev(Rational(1));
    int sign = 1;
    for (int step = 0; step < n; ++step) {
        int pivot = -1;
        for (int i = step; i < n; ++i)
            if (!m[i][step].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return UPoly();
        if (pivot != step) {
            std::swap(m[pivot], m[step]);
            sign = -sign;
        }
        for (int i = step + 1; i < n; ++i) {
            for (int j = step + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[step][step] - m[i][step] * m[step][j]).divexact(prev);
            m[i][step] = UPoly();
        }
        prev = m[step][step];
    }
    return sign > 0 ? prev : UPoly() - prev;
}

}  // namespace hilb
