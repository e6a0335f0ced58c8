#include "coulomb/klein.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coulomb/abelian.hpp"

namespace coulomb {

namespace {

int mod_charge(int64_t value, int n) {
    int c = static_cast<int>(((value % n) + n) % n);
    return c;
}

}  // namespace

SemiInvariantPoly::SemiInvariantPoly(int n, int charge) : n_(n), charge_(charge) {
    if (n < 1) throw StructuralError("SemiInvariantPoly: N must be >= 1");
    if (charge < 0 || charge >= n)
        throw StructuralError("SemiInvariantPoly: charge out of [0, N)");
}

SemiInvariantPoly SemiInvariantPoly::monomial(int n, int64_t u_exp, int64_t v_exp,
                                              const Rational& c) {
    SemiInvariantPoly p(n, mod_charge(u_exp - v_exp, n));
    p.add_term(u_exp, v_exp, c);
    return p;
}

void SemiInvariantPoly::add_term(int64_t u_exp, int64_t v_exp, const Rational& c) {
    if (u_exp < 0 || v_exp < 0) throw StructuralError("SemiInvariantPoly: negative exponent");
    if (mod_charge(u_exp - v_exp, n_) != charge_)
        throw StructuralError("SemiInvariantPoly: monomial charge mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(u_exp, v_exp), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SemiInvariantPoly SemiInvariantPoly::add(const SemiInvariantPoly& o) const {
    if (n_ != o.n_ || charge_ != o.charge_)
        throw StructuralError("SemiInvariantPoly add: charge sector mismatch");
    SemiInvariantPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e.first, e.second, c);
    return out;
}

std::string SemiInvariantPoly::str() const {
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
        auto factor = [&](const char* name, int64_t exp) {
            if (exp == 0) return;
            if (!mfirst) mono << "*";
            mfirst = false;
            mono << name;
            if (exp != 1) mono << "^" << exp;
        };
        factor("u", e.first);
        factor("v", e.second);
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

SemiInvariantPoly module_multiply(const SemiInvariantPoly& f, const SemiInvariantPoly& g) {
    if (f.n() != g.n()) throw StructuralError("module_multiply: N mismatch");
    SemiInvariantPoly out(f.n(), mod_charge(f.charge() + g.charge(), f.n()));
    for (const auto& [ea, ca] : f.terms())
        for (const auto& [eb, cb] : g.terms())
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

std::vector<int64_t> canonicalize_gl_weight(std::vector<int64_t> lambda) {
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] < lambda[i])
            throw StructuralError("weight is not weakly decreasing");
    if (!lambda.empty()) {
        const int64_t last = lambda.back();
        for (auto& v : lambda) v -= last;
    }
    return lambda;
}

std::vector<std::pair<int64_t, int64_t>> semi_invariant_basis(int n, int charge,
                                                              int64_t max_tdeg) {
    if (charge < 0 || charge >= n) throw StructuralError("semi_invariant_basis: bad charge");
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t deg = 0; deg <= max_tdeg; ++deg)
        for (int64_t p = deg; p >= 0; --p) {
            const int64_t q = deg - p;
            if (mod_charge(p - q, n) == charge) out.push_back({p, q});
        }
    return out;
}

SemiInvariantPoly costalk_to_semiinvariant(int n, int fundamental_i, int64_t m) {
    if (fundamental_i < 1 || fundamental_i >= n)
        throw StructuralError("costalk_to_semiinvariant: fundamental index out of [1, N)");
    if (m > 0) return SemiInvariantPoly::monomial(n, 0, int64_t{n} * m - fundamental_i);
    return SemiInvariantPoly::monomial(n, fundamental_i - int64_t{n} * m, 0);
}

SemiInvariantPoly sector_generator(int n, const std::vector<int64_t>& lambda, int64_t m) {
    if (static_cast<int>(lambda.size()) != n)
        throw StructuralError("sector_generator: lambda length != N");
    int64_t a = 0, b = 0;
    for (int64_t li : lambda) {
        a += std::max<int64_t>(li - m, 0);
        b += std::max<int64_t>(m - li, 0);
    }
    return SemiInvariantPoly::monomial(n, a, b);
}

namespace {

// Fundamental multiplicities of a canonicalized dominant weight:
// lambda = sum_i mult_i * omega_i.
std::vector<std::pair<int, int64_t>> fundamental_steps(const std::vector<int64_t>& lambda) {
    std::vector<std::pair<int, int64_t>> steps;
    for (size_t i = 0; i + 1 < lambda.size(); ++i) {
        const int64_t mult = lambda[i] - lambda[i + 1];
        if (mult > 0) steps.push_back({static_cast<int>(i + 1), mult});
    }
    return steps;
}

std::vector<int64_t> omega(int n, int i) {
    std::vector<int64_t> w(n, 0);
    for (int k = 0; k < i; ++k) w[k] = 1;
    return w;
}

std::string weight_str(const std::vector<int64_t>& lambda) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) os << ",";
        os << lambda[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

TruncatedSeries character_from_semiinvariants(int n, const std::vector<int64_t>& lambda_in,
                                              int64_t order) {
    const auto lambda = canonicalize_gl_weight(lambda_in);
    if (static_cast<int>(lambda.size()) != n)
        throw StructuralError("character_from_semiinvariants: lambda length != N");
    // Monomials of the product module: invariants times one generator per
    // fundamental factor of lambda.
    std::set<std::pair<int64_t, int64_t>> monomials;
    for (const auto& pq : semi_invariant_basis(n, 0, order - 1)) monomials.insert(pq);
    for (const auto& [i, mult] : fundamental_steps(lambda)) {
        const auto basis = semi_invariant_basis(n, i % n, order - 1);
        for (int64_t k = 0; k < mult; ++k) {
            std::set<std::pair<int64_t, int64_t>> next;
            for (const auto& s : monomials)
                for (const auto& b : basis) {
                    const int64_t p = s.first + b.first, q = s.second + b.second;
                    if (p + q < order) next.insert({p, q});
                }
            monomials = std::move(next);
        }
    }
    TruncatedSeries out(1, order);
    for (const auto& [p, q] : monomials) out.add_term(BiDegree{p + q, {p - q}}, Rational(1));
    return out;
}

CheckReport tensor_surjectivity_report(int n, const std::vector<int64_t>& lambda_in,
                                       const std::vector<int64_t>& mu_in, int64_t order) {
    CheckReport report;
    auto lambda = canonicalize_gl_weight(lambda_in);
    const auto mu = canonicalize_gl_weight(mu_in);
    report.name = "klein-surjectivity N=" + std::to_string(n) + " lambda=" +
                  weight_str(lambda) + " mu=" + weight_str(mu);
    auto bidegree = [&](const std::vector<int64_t>& weight, int64_t m) {
        int64_t t = 0, x = 0;
        for (int64_t wv : weight) {
            t += std::abs(wv - m);
            x += wv - m;
        }
        return std::pair<int64_t, int64_t>{t, x};
    };
    for (const auto& [i, mult] : fundamental_steps(mu)) {
        for (int64_t k = 0; k < mult; ++k) {
            const auto om = omega(n, i);
            std::vector<int64_t> sum(n);
            for (int a = 0; a < n; ++a) sum[a] = lambda[a] + om[a];
            // Generators of the (lambda + omega_i)-sector below the order.
            for (int64_t m = sum.back() - order; m <= sum.front() + order; ++m) {
                const auto [t_sum, x_sum] = bidegree(sum, m);
                if (t_sum >= order) continue;
                const bool upper = m >= lambda[i - 1] + 1;  // m >= lambda_n + 1
                const int64_t m1 = upper ? m - 1 : m;
                const int64_t m2 = upper ? 1 : 0;
                const auto [t1, x1] = bidegree(lambda, m1);
                const auto [t2, x2] = bidegree(om, m2);
                const bool degree_ok = (t_sum == t1 + t2) && (x_sum == x1 + x2);
                const SemiInvariantPoly whole = sector_generator(n, sum, m);
                const SemiInvariantPoly parts = module_multiply(
                    sector_generator(n, lambda, m1), sector_generator(n, om, m2));
                std::ostringstream id;
                id << "step omega_" << i << " m=" << m << " -> (m'=" << m1 << ", m''=" << m2
                   << ")";
                report.add(id.str(), degree_ok && whole == parts, whole.str(), parts.str());
            }
            lambda = sum;
        }
    }
    if (report.cases.empty()) report.add("no fundamental steps (mu = 0)", true);
    return report;
}

bool verify_tensor_surjectivity(int n, const std::vector<int64_t>& lambda,
                                const std::vector<int64_t>& mu, int64_t order) {
    return tensor_surjectivity_report(n, lambda, mu, order).all_pass();
}

namespace {

// The normalized isomorphism on a single-sector ring element: each class
// r^{(m, lambda)} with coefficient p(w) maps to p(uv) * generator(m).
SemiInvariantPoly map_to_semiinvariants(const RingElement& elt, int n,
                                        const std::vector<int64_t>& lambda) {
    SemiInvariantPoly out(n, sector_generator(n, lambda, 0).charge());
    for (const auto& [idx, poly] : elt.support()) {
        if (idx.flavor != lambda)
            throw StructuralError("map_to_semiinvariants: element outside the lambda sector");
        const SemiInvariantPoly gen = sector_generator(n, lambda, idx.gauge[0]);
        for (const auto& [exps, c] : poly.terms()) {
            for (size_t v = 1; v < exps.size(); ++v)
                if (exps[v] != 0)
                    throw StructuralError("map_to_semiinvariants: formal flavor parameter");
            const int64_t e = exps[0];  // w^e maps to (uv)^e
            const auto& [gu, gv] = gen.terms().begin()->first;
            out.add_term(gu + e, gv + e, c);
        }
    }
    return out;
}

}  // namespace

CheckReport iso_module_map_report(int n, const std::vector<int64_t>& lambda_in, int64_t order) {
    const auto lambda = canonicalize_gl_weight(lambda_in);
    CheckReport report;
    report.name = "klein-iso N=" + std::to_string(n) + " lambda=" + weight_str(lambda);
    const TheorySpec theory = preset_sqed(n);
    const auto zero_flavor = std::vector<int64_t>(n, 0);
    const RingElement w_class =
        RingElement::one(theory).scaled(WPoly::variable(1 + n, 0));
    const RingElement y_class = basis_class(theory, ClassIndex{{1}, zero_flavor});
    const RingElement z_class = basis_class(theory, ClassIndex{{-1}, zero_flavor});
    const SemiInvariantPoly w_semi = SemiInvariantPoly::monomial(n, 1, 1);
    const SemiInvariantPoly y_semi = SemiInvariantPoly::monomial(n, 0, n);
    const SemiInvariantPoly z_semi = SemiInvariantPoly::monomial(n, n, 0);

    struct Gen {
        const char* name;
        const RingElement* cls;
        const SemiInvariantPoly* semi;
    };
    const Gen gens[] = {{"W", &w_class, &w_semi}, {"Z", &z_class, &z_semi},
                        {"Y", &y_class, &y_semi}};

    for (int64_t m = lambda.back() - order; m <= lambda.front() + order; ++m) {
        int64_t tdeg = 0;
        for (int64_t li : lambda) tdeg += std::abs(li - m);
        if (tdeg >= order) continue;
        const RingElement base = basis_class(theory, ClassIndex{{m}, lambda});
        const SemiInvariantPoly base_semi = sector_generator(n, lambda, m);
        for (const auto& g : gens) {
            const SemiInvariantPoly via_ring =
                map_to_semiinvariants(multiply(*g.cls, base), n, lambda);
            const SemiInvariantPoly via_module = module_multiply(*g.semi, base_semi);
            std::ostringstream id;
            id << g.name << " * r^(" << m << ", lambda)";
            report.add(id.str(), via_ring == via_module, via_module.str(), via_ring.str());
        }
    }
    return report;
}

bool verify_iso_module_map(int n, const std::vector<int64_t>& lambda, int64_t order) {
    return iso_module_map_report(n, lambda, order).all_pass();
}

}  // namespace coulomb
