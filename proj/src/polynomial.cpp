#include "hilb/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hilb {

Poly Poly::constant(int d, const Rational& c) {
    Poly p(d);
    p.add_term({}, c);
    return p;
}

Poly Poly::variable(int d, const CoordIndex& v) {
    check_coord_range(v, d);
    Poly p(d);
    p.add_term({v}, 1);
    return p;
}

Poly Poly::monomial(int d, Monomial m, const Rational& c) {
    Poly p(d);
    std::sort(m.begin(), m.end());
    p.add_term(std::move(m), c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return 0;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool Poly::is_homogeneous(int deg) const {
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.size()) != deg) return false;
    return true;
}

void Poly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    for (const auto& v : m) check_coord_range(v, d_);
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_dim(const Poly& o) const {
    if (d_ != o.d_) throw DimensionError("polynomials over different d");
}

Poly Poly::operator-() const {
    Poly out(d_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_dim(o);
    Poly out(d_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    Poly out(d_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

std::set<CoordIndex> Poly::variables() const {
    std::set<CoordIndex> vars;
    for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
    return vars;
}

Poly Poly::substitute(const std::map<CoordIndex, Poly>& assignment, bool pass_through) const {
    Poly out(d_);
    for (const auto& [m, c] : terms_) {
        Poly acc = Poly::constant(d_, c);
        for (const auto& v : m) {
            auto it = assignment.find(v);
            if (it != assignment.end()) {
                acc = acc * it->second;
            } else if (pass_through) {
                acc = acc * Poly::variable(d_, v);
            } else {
                throw SubstitutionError("no image for variable in substitution");
            }
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& values_by_rank) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational prod = c;
        for (const auto& v : m) prod *= values_by_rank.at(coord_rank(d_, v));
        total += prod;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (const auto& v : m) os << "*p[" << v.r << "," << v.s << v.t << "]";
    }
    return os.str();
}

std::string poly_to_json(const Poly& p) {
    nlohmann::json j;
    j["d"] = p.dim();
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json term;
        term["coeff"] = to_string(c);
        term["vars"] = nlohmann::json::array();
        for (const auto& v : m) term["vars"].push_back({v.r, v.s, v.t});
        j["terms"].push_back(term);
    }
    return j.dump();
}

Poly poly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Poly p(j.at("d").get<int>());
    for (const auto& term : j.at("terms")) {
        Monomial m;
        for (const auto& v : term.at("vars"))
            m.push_back(CoordIndex::make(v.at(0).get<int>(), v.at(1).get<int>(), v.at(2).get<int>()));
        std::sort(m.begin(), m.end());
        p.add_term(std::move(m), parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace hilb
