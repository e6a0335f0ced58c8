#include "coulomb/wpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coulomb {

WPoly WPoly::constant(int n_vars, const Rational& c) {
    WPoly p(n_vars);
    p.add_term(std::vector<int64_t>(n_vars, 0), c);
    return p;
}

WPoly WPoly::variable(int n_vars, int index) {
    if (index < 0 || index >= n_vars) throw StructuralError("WPoly: variable index out of range");
    std::vector<int64_t> e(n_vars, 0);
    e[index] = 1;
    return monomial(std::move(e), Rational(1));
}

WPoly WPoly::monomial(std::vector<int64_t> exps, const Rational& c) {
    WPoly p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

bool WPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int64_t e) { return e == 0; });
}

int64_t WPoly::total_degree() const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), int64_t{0}));
    return d;
}

void WPoly::add_term(const std::vector<int64_t>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != n_vars_)
        throw StructuralError("WPoly: exponent vector length mismatch");
    for (int64_t e : exps)
        if (e < 0) throw StructuralError("WPoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WPoly WPoly::add(const WPoly& o) const {
    if (n_vars_ != o.n_vars_) throw StructuralError("WPoly add: variable count mismatch");
    WPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

WPoly WPoly::sub(const WPoly& o) const { return add(o.scaled(Rational(-1))); }

WPoly WPoly::mul(const WPoly& o) const {
    if (n_vars_ != o.n_vars_) throw StructuralError("WPoly mul: variable count mismatch");
    WPoly out(n_vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int64_t> e = ea;
            for (int i = 0; i < n_vars_; ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

WPoly WPoly::scaled(const Rational& c) const {
    WPoly out(n_vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

WPoly WPoly::pow(int64_t e) const {
    if (e < 0) throw StructuralError("WPoly pow: negative exponent");
    WPoly out = constant(n_vars_, Rational(1));
    for (int64_t k = 0; k < e; ++k) out = out.mul(*this);
    return out;
}

std::optional<WPoly> WPoly::divided_by(const WPoly& divisor) const {
    if (n_vars_ != divisor.n_vars_) throw StructuralError("WPoly divide: variable count mismatch");
    if (divisor.is_zero()) throw StructuralError("WPoly divide: division by zero");
    // Long division in reverse-lex leading order; exact or nullopt.
    WPoly rem = *this, quot(n_vars_);
    const auto& lead_d = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& lead_r = *rem.terms_.rbegin();
        std::vector<int64_t> e(n_vars_);
        for (int i = 0; i < n_vars_; ++i) {
            e[i] = lead_r.first[i] - lead_d.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        WPoly piece = monomial(e, lead_r.second / lead_d.second);
        quot = quot.add(piece);
        rem = rem.sub(divisor.mul(piece));
    }
    return quot;
}

std::string WPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::vector<int64_t>, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int64_t da = std::accumulate(a.first.begin(), a.first.end(), int64_t{0});
        const int64_t db = std::accumulate(b.first.begin(), b.first.end(), int64_t{0});
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        Rational abs = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        std::ostringstream mono;
        bool mono_first = true;
        for (int i = 0; i < n_vars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono_first) mono << "*";
            mono_first = false;
            mono << names.at(i);
            if (e[i] != 1) mono << "^" << e[i];
        }
        const std::string m = mono.str();
        if (m.empty())
            os << abs.str();
        else if (abs.is_one())
            os << m;
        else
            os << abs.str() << "*" << m;
    }
    return os.str();
}

}  // namespace coulomb
