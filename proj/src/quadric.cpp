#include "coulomb/quadric.hpp"

#include <sstream>

namespace coulomb {

namespace {
const char* kVarNames[6] = {"a1", "a2", "a3", "b1", "b2", "b3"};
}

QuadricPoly QuadricPoly::monomial(const Exps& e, const Rational& c) {
    QuadricPoly p;
    p.add_term(e, c);
    return p;
}

QuadricPoly QuadricPoly::var(const std::string& name) {
    for (int i = 0; i < 6; ++i)
        if (name == kVarNames[i]) {
            Exps e{};
            e[i] = 1;
            return monomial(e);
        }
    throw StructuralError("QuadricPoly: unknown variable '" + name + "'");
}

void QuadricPoly::add_term(const Exps& e, const Rational& c) {
    for (int64_t v : e)
        if (v < 0) throw StructuralError("QuadricPoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuadricPoly QuadricPoly::add(const QuadricPoly& o) const {
    QuadricPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

QuadricPoly QuadricPoly::sub(const QuadricPoly& o) const { return add(o.scaled(Rational(-1))); }

QuadricPoly QuadricPoly::mul(const QuadricPoly& o) const {
    QuadricPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e;
            for (int i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

QuadricPoly QuadricPoly::scaled(const Rational& c) const {
    QuadricPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

std::string QuadricPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        std::ostringstream mono;
        bool mfirst = true;
        for (int i = 0; i < 6; ++i) {
            if (e[i] == 0) continue;
            if (!mfirst) mono << "*";
            mfirst = false;
            mono << kVarNames[i];
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

QuadricPoly incidence_quadric() {
    QuadricPoly q;
    q.add_term({1, 0, 0, 1, 0, 0}, Rational(1));
    q.add_term({0, 1, 0, 0, 1, 0}, Rational(1));
    q.add_term({0, 0, 1, 0, 0, 1}, Rational(1));
    return q;
}

QuadricPoly reduce_mod_quadric(const QuadricPoly& p) {
    QuadricPoly cur = p;
    while (true) {
        // Find a monomial containing both a2 and b2 (indices 1 and 4).
        const std::map<QuadricPoly::Exps, Rational>& ts = cur.terms();
        auto it = ts.begin();
        for (; it != ts.end(); ++it)
            if (it->first[1] > 0 && it->first[4] > 0) break;
        if (it == ts.end()) return cur;
        QuadricPoly::Exps rest = it->first;
        rest[1] -= 1;
        rest[4] -= 1;
        const Rational coeff = it->second;
        // a2*b2 -> -(a1*b1 + a3*b3)
        QuadricPoly replacement;
        replacement.add_term({1, 0, 0, 1, 0, 0}, Rational(-1));
        replacement.add_term({0, 0, 1, 0, 0, 1}, Rational(-1));
        QuadricPoly swap = replacement.mul(QuadricPoly::monomial(rest, coeff));
        QuadricPoly removed;
        removed.add_term(it->first, -coeff);
        cur = cur.add(removed).add(swap);
    }
}

std::optional<QuadricPoly> quadric_divide(const QuadricPoly& p, const QuadricPoly& divisor) {
    if (divisor.is_zero()) throw StructuralError("quadric_divide: division by zero");
    QuadricPoly rem = p, quot;
    const auto& lead_d = *divisor.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& lead_r = *rem.terms().rbegin();
        QuadricPoly::Exps e;
        for (int i = 0; i < 6; ++i) {
            e[i] = lead_r.first[i] - lead_d.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        QuadricPoly piece = QuadricPoly::monomial(e, lead_r.second / lead_d.second);
        quot = quot.add(piece);
        rem = rem.sub(divisor.mul(piece));
    }
    return quot;
}

namespace {

struct Sl3Model {
    QuadricPoly y_i, y_j, y_ji, z_i, z_j, z_ji, w_i, w_j, dif;
    QuadricPoly sec_y_j1, sec_yp_j1, sec_z_j1;  // y_j^1, 'y_j^1, z_j^1
};

Sl3Model sl3_model() {
    auto v = [](const char* n) { return QuadricPoly::var(n); };
    Sl3Model m;
    m.y_i = v("a1").mul(v("b2"));
    m.y_j = v("a2").mul(v("b3"));
    m.y_ji = v("a1").mul(v("b3"));
    m.w_i = v("a1").mul(v("b1")).scaled(Rational(-1));
    m.w_j = v("a3").mul(v("b3"));
    m.z_i = v("a2").mul(v("b1")).scaled(Rational(-1));
    m.z_j = v("a3").mul(v("b2"));
    m.z_ji = v("a3").mul(v("b1")).scaled(Rational(-1));
    m.dif = m.w_i.sub(m.w_j);
    m.sec_y_j1 = v("a2");
    m.sec_yp_j1 = v("a1");
    m.sec_z_j1 = v("a3");
    return m;
}

void check_mod_quadric(CheckReport& report, const std::string& id, const QuadricPoly& lhs,
                       const QuadricPoly& rhs) {
    const QuadricPoly l = reduce_mod_quadric(lhs), r = reduce_mod_quadric(rhs);
    report.add(id, l == r, r.str(), l.str());
}

}  // namespace

CheckReport verify_example_relations() {
    CheckReport report;
    report.name = "sl3-example relations";
    const Sl3Model m = sl3_model();

    check_mod_quadric(report, "w_i - w_j == a2*b2", m.dif,
                      QuadricPoly::var("a2").mul(QuadricPoly::var("b2")));
    check_mod_quadric(report, "z_j*z_i == (w_i-w_j)*z_ji", m.z_j.mul(m.z_i), m.dif.mul(m.z_ji));
    check_mod_quadric(report, "y_j*y_i == (w_i-w_j)*y_ji", m.y_j.mul(m.y_i), m.dif.mul(m.y_ji));
    check_mod_quadric(report, "z_ji*y_ji == w_i*w_j", m.z_ji.mul(m.y_ji), m.w_i.mul(m.w_j));
    check_mod_quadric(report, "z_i*y_i == (w_i-w_j)*w_i", m.z_i.mul(m.y_i), m.dif.mul(m.w_i));
    check_mod_quadric(report, "z_j*y_j == (w_i-w_j)*w_j", m.z_j.mul(m.y_j), m.dif.mul(m.w_j));
    check_mod_quadric(report, "z_i*y_ji == w_i*y_j", m.z_i.mul(m.y_ji), m.w_i.mul(m.y_j));
    check_mod_quadric(report, "z_j*y_ji == w_j*y_i", m.z_j.mul(m.y_ji), m.w_j.mul(m.y_i));
    check_mod_quadric(report, "y_i*z_ji == w_i*z_j", m.y_i.mul(m.z_ji), m.w_i.mul(m.z_j));
    check_mod_quadric(report, "y_j*z_ji == w_j*z_i", m.y_j.mul(m.z_ji), m.w_j.mul(m.z_i));
    // Section relations at alpha = 1 (w_j = w_i = 1, so w_j^{w_j - alpha} = 1).
    check_mod_quadric(report, "y_j*'y_j^1 == y_ji*y_j^1", m.y_j.mul(m.sec_yp_j1),
                      m.y_ji.mul(m.sec_y_j1));
    check_mod_quadric(report, "z_j*y_j^1 == (w_i-w_j)*z_j^1", m.z_j.mul(m.sec_y_j1),
                      m.dif.mul(m.sec_z_j1));
    check_mod_quadric(report, "y_i*y_j^1 == (w_i-w_j)*'y_j^1", m.y_i.mul(m.sec_y_j1),
                      m.dif.mul(m.sec_yp_j1));
    check_mod_quadric(report, "z_ji*y_j^1 == z_i*z_j^1", m.z_ji.mul(m.sec_y_j1),
                      m.z_i.mul(m.sec_z_j1));
    check_mod_quadric(report, "y_j*z_j^1 == w_j*y_j^1", m.y_j.mul(m.sec_z_j1),
                      m.w_j.mul(m.sec_y_j1));
    check_mod_quadric(report, "y_ji*z_j^1 == w_j*'y_j^1", m.y_ji.mul(m.sec_z_j1),
                      m.w_j.mul(m.sec_yp_j1));
    return report;
}

CheckReport verify_section_vanishing() {
    CheckReport report;
    report.name = "sl3-example section identities";
    const Sl3Model m = sl3_model();
    auto v = [](const char* n) { return QuadricPoly::var(n); };
    auto check = [&](const std::string& id, const QuadricPoly& lhs, const QuadricPoly& rhs) {
        report.add(id, lhs == rhs, rhs.str(), lhs.str());
    };
    check("a2*b3 == y_j", v("a2").mul(v("b3")), m.y_j);
    check("a3*b3 == w_j", v("a3").mul(v("b3")), m.w_j);
    check("a1*b3 == y_ji", v("a1").mul(v("b3")), m.y_ji);
    return report;
}

}  // namespace coulomb
