#include "coulomb/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace coulomb {

RingElement::RingElement(TheorySpec theory) : theory_(std::move(theory)) {
    theory_.validate();
    if (!theory_.all_rank_one())
        throw StructuralError("RingElement: theory must have rank-1 gauge factors only");
}

RingElement RingElement::one(const TheorySpec& t) {
    ClassIndex idx{std::vector<int64_t>(t.group.factor_ranks.size(), 0),
                   std::vector<int64_t>(t.flavor_rank, 0)};
    return basis_class(t, idx);
}

std::optional<std::vector<int64_t>> RingElement::sector() const {
    if (support_.empty()) return std::nullopt;
    const auto& f = support_.begin()->first.flavor;
    for (const auto& [idx, c] : support_)
        if (idx.flavor != f) return std::nullopt;
    return f;
}

void RingElement::add_term(const ClassIndex& idx, const WPoly& coeff) {
    if (static_cast<int>(idx.gauge.size()) != theory_.n_factors() ||
        static_cast<int>(idx.flavor.size()) != theory_.flavor_rank)
        throw StructuralError("RingElement: class index shape mismatch");
    if (coeff.n_vars() != n_params())
        throw StructuralError("RingElement: coefficient variable count mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = support_.emplace(idx, coeff);
    if (!inserted) {
        it->second = it->second.add(coeff);
        if (it->second.is_zero()) support_.erase(it);
    }
}

RingElement RingElement::add(const RingElement& o) const {
    if (theory_ != o.theory_) throw StructuralError("RingElement add: theory mismatch");
    RingElement out = *this;
    for (const auto& [idx, c] : o.support_) out.add_term(idx, c);
    if (!out.support_.empty() && !out.sector())
        throw StructuralError("RingElement add: sum mixes flavor sectors");
    return out;
}

RingElement RingElement::scaled(const WPoly& c) const {
    RingElement out(theory_);
    for (const auto& [idx, v] : support_) out.add_term(idx, v.mul(c));
    return out;
}

RingElement RingElement::scaled(const Rational& c) const {
    return scaled(WPoly::constant(n_params(), c));
}

RingElement basis_class(const TheorySpec& theory, const ClassIndex& idx) {
    RingElement e(theory);
    e.add_term(idx, WPoly::constant(theory.n_factors() + theory.flavor_rank, Rational(1)));
    return e;
}

int64_t pairing_exponent(int64_t pair_a, int64_t pair_b) {
    const int64_t num = std::abs(pair_a) + std::abs(pair_b) - std::abs(pair_a + pair_b);
    if (num < 0 || num % 2 != 0)
        throw StructuralError("pairing exponent invariant violated: |a|+|b|-|a+b| = " +
                              std::to_string(num));
    return num / 2;
}

namespace {

int64_t pair_index(const MatterWeight& w, const ClassIndex& idx) {
    int64_t p = 0;
    for (size_t f = 0; f < w.gauge.size(); ++f) p += w.gauge[f][0] * idx.gauge[f];
    for (size_t r = 0; r < w.flavor.size(); ++r) p += w.flavor[r] * idx.flavor[r];
    return p;
}

WPoly weight_linear_form(const TheorySpec& t, const MatterWeight& w, bool formal_flavor) {
    WPoly form(t.n_factors() + t.flavor_rank);
    std::vector<int64_t> e(form.n_vars(), 0);
    for (int f = 0; f < t.n_factors(); ++f) {
        if (w.gauge[f][0] == 0) continue;
        std::fill(e.begin(), e.end(), 0);
        e[f] = 1;
        form.add_term(e, Rational(w.gauge[f][0]));
    }
    if (formal_flavor)
        for (int r = 0; r < t.flavor_rank; ++r) {
            if (w.flavor[r] == 0) continue;
            std::fill(e.begin(), e.end(), 0);
            e[t.n_factors() + r] = 1;
            form.add_term(e, Rational(w.flavor[r]));
        }
    return form;
}

}  // namespace

RingElement multiply(const RingElement& a, const RingElement& b, bool formal_flavor) {
    if (a.theory() != b.theory()) throw StructuralError("multiply: theory mismatch");
    const TheorySpec& t = a.theory();
    RingElement out(t);
    for (const auto& [ia, ca] : a.support()) {
        for (const auto& [ib, cb] : b.support()) {
            ClassIndex sum = ia;
            for (size_t f = 0; f < sum.gauge.size(); ++f) sum.gauge[f] += ib.gauge[f];
            for (size_t r = 0; r < sum.flavor.size(); ++r) sum.flavor[r] += ib.flavor[r];
            WPoly coeff = ca.mul(cb);
            for (const auto& w : t.matter) {
                if (coeff.is_zero()) break;
                const int64_t d = pairing_exponent(pair_index(w, ia), pair_index(w, ib));
                if (d == 0) continue;
                coeff = coeff.mul(weight_linear_form(t, w, formal_flavor).pow(d));
            }
            out.add_term(sum, coeff);
        }
    }
    return out;
}

RingElement power(const RingElement& a, int64_t e, bool formal_flavor) {
    if (e < 0) throw StructuralError("power: negative exponent");
    RingElement out = RingElement::one(a.theory());
    for (int64_t k = 0; k < e; ++k) out = multiply(out, a, formal_flavor);
    return out;
}

namespace {

std::string index_str(const ClassIndex& idx) {
    std::ostringstream os;
    os << "r[";
    for (size_t f = 0; f < idx.gauge.size(); ++f) {
        if (f) os << ",";
        os << idx.gauge[f];
    }
    os << ";";
    const bool all_zero =
        std::all_of(idx.flavor.begin(), idx.flavor.end(), [](int64_t v) { return v == 0; });
    if (all_zero) {
        os << "0";
    } else {
        for (size_t r = 0; r < idx.flavor.size(); ++r) {
            if (r) os << ",";
            os << idx.flavor[r];
        }
    }
    os << "]";
    return os.str();
}

std::vector<std::string> param_names(const TheorySpec& t) {
    std::vector<std::string> names = t.gauge_var_names;
    if (names.empty())
        for (int f = 0; f < t.n_factors(); ++f) names.push_back("w" + std::to_string(f + 1));
    if (!t.flavor_var_names.empty()) {
        names.insert(names.end(), t.flavor_var_names.begin(), t.flavor_var_names.end());
    } else {
        for (int r = 0; r < t.flavor_rank; ++r) names.push_back("wf" + std::to_string(r + 1));
    }
    return names;
}

// Coefficients print factored over the theory's matter linear forms; any
// residual factor is printed expanded.
std::string coeff_str(const TheorySpec& t, const WPoly& coeff) {
    const auto names = param_names(t);
    std::vector<WPoly> forms;
    for (const auto& w : t.matter) {
        WPoly f = weight_linear_form(t, w, false);
        if (f.is_zero()) continue;
        if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
    }
    std::sort(forms.begin(), forms.end(), [&](const WPoly& a, const WPoly& b) {
        if (a.terms().size() != b.terms().size()) return a.terms().size() > b.terms().size();
        return a.str(names) < b.str(names);
    });
    WPoly rest = coeff;
    std::vector<std::pair<WPoly, int64_t>> factored;
    for (const auto& f : forms) {
        int64_t e = 0;
        while (rest.total_degree() > 0) {
            auto q = rest.divided_by(f);
            if (!q) break;
            rest = *q;
            ++e;
        }
        if (e > 0) factored.push_back({f, e});
    }
    std::vector<std::string> pieces;
    for (const auto& [f, e] : factored) {
        std::string s = f.terms().size() > 1 ? "(" + f.str(names) + ")" : f.str(names);
        if (e > 1) s += "^" + std::to_string(e);
        pieces.push_back(s);
    }
    if (!rest.is_one() || pieces.empty()) {
        std::string s = rest.str(names);
        if (rest.terms().size() > 1) s = "(" + s + ")";
        pieces.insert(pieces.begin(), s);
    }
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += "*";
        out += pieces[i];
    }
    return out;
}

}  // namespace

std::string RingElement::str() const {
    if (support_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : support_) {
        if (!first) os << " + ";
        first = false;
        os << coeff_str(theory_, c) << "*" << index_str(idx);
    }
    return os.str();
}

namespace {

void require_two_node(const TheorySpec& t) {
    if (t.n_factors() != 2 || !t.all_rank_one())
        throw StructuralError("named element: theory is not a two-node model");
}

int two_node_wj(const TheorySpec& t) {
    if (t.flavor_rank > 0 && t.flavor_node_of_slot.empty())
        throw StructuralError(
            "section class: theory lacks a flavor node assignment "
            "(flavor_node_of_slot)");
    int wj = 0;
    for (int s : t.flavor_node_of_slot) wj += (s == 0);
    return wj;
}

}  // namespace

RingElement two_node_named(const TheorySpec& t, const std::string& name) {
    require_two_node(t);
    auto cls = [&](int64_t gj, int64_t gi) {
        return basis_class(
            t, ClassIndex{{gj, gi}, std::vector<int64_t>(t.flavor_rank, 0)});
    };
    if (name == "r0") return cls(0, 0);
    if (name == "y_j") return cls(1, 0);
    if (name == "y_i") return cls(0, 1);
    if (name == "y_ji") return cls(1, 1);
    if (name == "z_j") return cls(-1, 0);
    if (name == "z_i") return cls(0, -1);
    if (name == "z_ji") return cls(-1, -1);
    throw StructuralError("unknown named element '" + name + "'");
}

RingElement two_node_section(const TheorySpec& t, const std::string& kind, int idx) {
    require_two_node(t);
    const int wj = two_node_wj(t), wi = t.flavor_rank - wj;
    ClassIndex c{{0, 0}, std::vector<int64_t>(t.flavor_rank, 0)};
    if (kind == "y_j" || kind == "'y_j" || kind == "z_j") {
        if (idx < 0 || idx > wj)
            throw StructuralError("section " + kind + "^a: alpha out of range [0, w_j]");
        for (int b = 0; b < idx; ++b) c.flavor[b] = 1;
        if (kind == "y_j") c.gauge = {1, 0};
        if (kind == "'y_j") c.gauge = {1, 1};
        if (kind == "z_j") c.gauge = {0, 0};
        return basis_class(t, c);
    }
    if (kind == "z_i" || kind == "'z_i") {
        if (idx < 0 || idx > wi)
            throw StructuralError("section " + kind + "^b: beta out of range [0, w_i]");
        for (int b = idx; b < wi; ++b) c.flavor[wj + b] = -1;
        c.gauge = (kind == "z_i") ? std::vector<int64_t>{0, -1} : std::vector<int64_t>{-1, -1};
        return basis_class(t, c);
    }
    throw StructuralError("unknown section kind '" + kind + "'");
}

RingElement two_node_r(const TheorySpec& t, int64_t m, int64_t n, int alpha) {
    require_two_node(t);
    const int wj = two_node_wj(t);
    if (alpha < 0 || alpha > wj) throw StructuralError("^a r^{m,n}: alpha out of range");
    ClassIndex c{{m, n}, std::vector<int64_t>(t.flavor_rank, 0)};
    for (int b = 0; b < alpha; ++b) c.flavor[b] = 1;
    return basis_class(t, c);
}

CheckReport verify_computation_relations(int w_j, int w_i) {
    CheckReport report;
    report.name = "ring-computation w=(" + std::to_string(w_j) + "," + std::to_string(w_i) + ")";
    TheorySpec t = preset_two_node(w_j, w_i);
    const int np = t.n_factors() + t.flavor_rank;
    const WPoly wj_v = WPoly::variable(np, 0), wi_v = WPoly::variable(np, 1);
    const WPoly dif = wi_v.sub(wj_v);

    auto named = [&](const std::string& n) { return two_node_named(t, n); };
    auto check = [&](const std::string& id, const RingElement& lhs, const RingElement& rhs) {
        report.add(id, lhs == rhs, rhs.str(), lhs.str());
    };

    check("z_j*z_i == (w_i-w_j)*z_ji", multiply(named("z_j"), named("z_i")),
          named("z_ji").scaled(dif));
    check("y_j*y_i == (w_i-w_j)*y_ji", multiply(named("y_j"), named("y_i")),
          named("y_ji").scaled(dif));
    check("z_ji*y_ji == w_i^wi*w_j^wj", multiply(named("z_ji"), named("y_ji")),
          named("r0").scaled(wi_v.pow(w_i).mul(wj_v.pow(w_j))));
    check("z_i*y_i == (w_i-w_j)*w_i^wi", multiply(named("z_i"), named("y_i")),
          named("r0").scaled(dif.mul(wi_v.pow(w_i))));
    check("z_j*y_j == (w_i-w_j)*w_j^wj", multiply(named("z_j"), named("y_j")),
          named("r0").scaled(dif.mul(wj_v.pow(w_j))));
    check("z_i*y_ji == w_i^wi*y_j", multiply(named("z_i"), named("y_ji")),
          named("y_j").scaled(wi_v.pow(w_i)));
    check("z_j*y_ji == w_j^wj*y_i", multiply(named("z_j"), named("y_ji")),
          named("y_i").scaled(wj_v.pow(w_j)));
    check("y_i*z_ji == w_i^wi*z_j", multiply(named("y_i"), named("z_ji")),
          named("z_j").scaled(wi_v.pow(w_i)));
    check("y_j*z_ji == w_j^wj*z_i", multiply(named("y_j"), named("z_ji")),
          named("z_i").scaled(wj_v.pow(w_j)));

    for (int a = 0; a <= w_j; ++a) {
        const std::string suf = " (a=" + std::to_string(a) + ")";
        const RingElement sy = two_node_section(t, "y_j", a);
        const RingElement syp = two_node_section(t, "'y_j", a);
        const RingElement sz = two_node_section(t, "z_j", a);
        check("y_j*'y_j^a == y_ji*y_j^a" + suf, multiply(named("y_j"), syp),
              multiply(named("y_ji"), sy));
        check("z_j*y_j^a == (w_i-w_j)*w_j^(wj-a)*z_j^a" + suf, multiply(named("z_j"), sy),
              sz.scaled(dif.mul(wj_v.pow(w_j - a))));
        check("y_i*y_j^a == (w_i-w_j)*'y_j^a" + suf, multiply(named("y_i"), sy),
              syp.scaled(dif));
        check("z_ji*y_j^a == w_j^(wj-a)*z_i*z_j^a" + suf, multiply(named("z_ji"), sy),
              multiply(named("z_i"), sz).scaled(wj_v.pow(w_j - a)));
        check("y_j*z_j^a == w_j^a*y_j^a" + suf, multiply(named("y_j"), sz),
              sy.scaled(wj_v.pow(a)));
        check("y_ji*z_j^a == w_j^a*'y_j^a" + suf, multiply(named("y_ji"), sz),
              syp.scaled(wj_v.pow(a)));
    }
    return report;
}

CheckReport verify_rmn(int w_j, int w_i, const std::vector<int>& alphas,
                       const std::vector<int64_t>& ms, const std::vector<int64_t>& ns) {
    CheckReport report;
    report.name = "ring-rmn w=(" + std::to_string(w_j) + "," + std::to_string(w_i) + ")";
    TheorySpec t = preset_two_node(w_j, w_i);
    auto named = [&](const std::string& n) { return two_node_named(t, n); };
    for (int a : alphas) {
        for (int64_t m : ms) {
            for (int64_t n : ns) {
                const RingElement expected = two_node_r(t, m, n, a);
                auto check_case = [&](const char* tag, const RingElement& made) {
                    std::ostringstream id;
                    id << "r^{" << m << "," << n << "} a=" << a << " case " << tag;
                    report.add(id.str(), made == expected, expected.str(), made.str());
                };
                if (m > n && n >= 0)
                    check_case("m>n>=0",
                               multiply(multiply(power(named("y_j"), m - n - 1),
                                                 power(named("y_ji"), n)),
                                        two_node_section(t, "y_j", a)));
                if (m > 0 && n <= 0)
                    check_case("m>0>=n",
                               multiply(multiply(power(named("z_i"), -n),
                                                 power(named("y_j"), m - 1)),
                                        two_node_section(t, "y_j", a)));
                if (n >= m && m > 0)
                    check_case("n>=m>0",
                               multiply(multiply(power(named("y_i"), n - m),
                                                 power(named("y_ji"), m - 1)),
                                        two_node_section(t, "'y_j", a)));
                if (n >= 0 && m <= 0)
                    check_case("n>=0>=m",
                               multiply(multiply(power(named("y_i"), n),
                                                 power(named("z_j"), -m)),
                                        two_node_section(t, "z_j", a)));
                if (m <= 0 && m >= n)
                    check_case("0>=m>=n",
                               multiply(multiply(power(named("z_i"), m - n),
                                                 power(named("z_ji"), -m)),
                                        two_node_section(t, "z_j", a)));
                if (n <= 0 && n >= m)
                    check_case("0>=n>=m",
                               multiply(multiply(power(named("z_j"), n - m),
                                                 power(named("z_ji"), -n)),
                                        two_node_section(t, "z_j", a)));
            }
        }
    }
    return report;
}

}  // namespace coulomb
