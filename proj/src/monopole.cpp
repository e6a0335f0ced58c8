#include "coulomb/monopole.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>

namespace coulomb {

int64_t delta_exponent(const TheorySpec& theory, const DominantCoweight& lambda,
                       const std::vector<int64_t>& kappa_entries) {
    if (!kappa_entries.empty() &&
        static_cast<int>(kappa_entries.size()) != theory.flavor_rank)
        throw StructuralError("delta_exponent: kappa length != flavor rank");
    int64_t delta = 0;
    for (int f = 0; f < theory.n_factors(); ++f) {
        const auto& part = lambda.parts[f];
        for (size_t a = 0; a < part.size(); ++a)
            for (size_t b = a + 1; b < part.size(); ++b)
                delta -= 2 * std::abs(part[a] - part[b]);
    }
    for (const auto& w : theory.matter) delta += std::abs(pair_weight(w, lambda, kappa_entries));
    return delta;
}

std::vector<MonopoleTerm> monopole_terms(const TheorySpec& theory,
                                         const std::vector<int64_t>& kappa, int64_t order,
                                         int64_t radius) {
    theory.validate();
    std::vector<MonopoleTerm> out;
    for (auto& lambda : enumerate_dominant(theory, radius)) {
        const int64_t delta = delta_exponent(theory, lambda, kappa);
        if (delta < 0 || delta >= order) continue;
        MonopoleTerm term;
        term.t_exponent = delta;
        term.x_exponent.assign(theory.n_factors(), 0);
        for (int f = 0; f < theory.n_factors(); ++f)
            for (int64_t v : lambda.parts[f]) term.x_exponent[f] += v;
        term.coweight = std::move(lambda);
        out.push_back(std::move(term));
    }
    return out;
}

TruncatedSeries classical_factor(const DominantCoweight& lambda, int64_t order) {
    TruncatedSeries out = TruncatedSeries::constant(Rational(1), 0, order);
    for (const auto& part : lambda.parts) {
        size_t a = 0;
        while (a < part.size()) {
            size_t b = a;
            while (b < part.size() && part[b] == part[a]) ++b;
            const int64_t block = static_cast<int64_t>(b - a);
            for (int64_t k = 1; k <= block; ++k) out = out.mul(geom_expand(2 * k, {}, order));
            a = b;
        }
    }
    return out;
}

namespace {

std::string coweight_str(const DominantCoweight& lambda) {
    std::ostringstream os;
    os << "(";
    for (size_t f = 0; f < lambda.parts.size(); ++f) {
        if (f) os << " | ";
        for (size_t a = 0; a < lambda.parts[f].size(); ++a) {
            if (a) os << ",";
            os << lambda.parts[f][a];
        }
    }
    os << ")";
    return os.str();
}

int64_t radius_cap(std::optional<int64_t> max_radius) {
    if (max_radius) return *max_radius;
    if (const char* env = std::getenv("COULOMB_MAX_RADIUS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw StructuralError("COULOMB_MAX_RADIUS: not an integer");
        }
    }
    return kDefaultMaxRadius;
}

struct SumResult {
    TruncatedSeries series;
    // A still-contributing coweight on the enumeration boundary, if any:
    // evidence that the sum has not yet been exhausted.
    std::optional<DominantCoweight> boundary_contributor;
};

SumResult sum_at_radius(const TheorySpec& theory, const std::vector<int64_t>& kappa,
                        int64_t order, bool graded, int64_t radius) {
    theory.validate();
    const int rank = graded ? theory.n_factors() : 0;
    SumResult res{TruncatedSeries(rank, order), std::nullopt};
    std::map<std::vector<int64_t>, TruncatedSeries> classical_cache;
    for (const auto& lambda : enumerate_dominant(theory, radius)) {
        const int64_t delta = delta_exponent(theory, lambda, kappa);
        if (delta < 0)
            throw ConvergenceError("monopole_series: negative t-exponent at coweight " +
                                   coweight_str(lambda) + " (theory is not good)");
        if (delta >= order) continue;
        bool on_boundary = false;
        for (const auto& part : lambda.parts)
            for (int64_t v : part)
                if (std::abs(v) == radius) on_boundary = true;
        if (on_boundary) res.boundary_contributor = lambda;

        std::vector<int64_t> blocks;  // cache key: multiset of block sizes
        for (const auto& part : lambda.parts) {
            size_t a = 0;
            while (a < part.size()) {
                size_t b = a;
                while (b < part.size() && part[b] == part[a]) ++b;
                blocks.push_back(static_cast<int64_t>(b - a));
                a = b;
            }
        }
        std::sort(blocks.begin(), blocks.end());
        auto it = classical_cache.find(blocks);
        if (it == classical_cache.end())
            it = classical_cache.emplace(blocks, classical_factor(lambda, order)).first;

        BiDegree shift{delta, std::vector<int64_t>(rank, 0)};
        if (graded)
            for (int f = 0; f < theory.n_factors(); ++f)
                for (int64_t v : lambda.parts[f]) shift.x[f] += v;
        for (const auto& [d, c] : it->second.terms()) {
            BiDegree nd = shift;
            nd.t += d.t;
            res.series.add_term(nd, c);
        }
    }
    return res;
}

TruncatedSeries monopole_run(const TheorySpec& theory, const std::vector<int64_t>& kappa,
                             int64_t order, bool graded, std::optional<int64_t> max_radius,
                             int64_t* stable_radius_out) {
    const int64_t cap = radius_cap(max_radius);
    std::optional<TruncatedSeries> prev1, prev2;
    SumResult last{TruncatedSeries(graded ? theory.n_factors() : 0, order), std::nullopt};
    for (int64_t r = 1;; r *= 2) {
        last = sum_at_radius(theory, kappa, order, graded, r);
        if (prev2 && last.series == *prev1 && *prev1 == *prev2) {
            if (stable_radius_out) *stable_radius_out = r / 4;
            return last.series;
        }
        if (r > cap) break;
        prev2 = std::move(prev1);
        prev1 = last.series;
    }
    std::string ray = last.boundary_contributor
                          ? "ray through coweight " + coweight_str(*last.boundary_contributor)
                          : "no boundary witness (series still drifting)";
    throw ConvergenceError(
        "monopole_series: enumeration did not stabilize within radius cap " +
        std::to_string(cap) + "; offending " + ray);
}

}  // namespace

TruncatedSeries monopole_series(const TheorySpec& theory, const std::vector<int64_t>& kappa,
                                int64_t order, bool graded, std::optional<int64_t> max_radius) {
    return monopole_run(theory, kappa, order, graded, max_radius, nullptr);
}

TruncatedSeries monopole_sum_at_radius(const TheorySpec& theory,
                                       const std::vector<int64_t>& kappa, int64_t order,
                                       bool graded, int64_t radius) {
    return sum_at_radius(theory, kappa, order, graded, radius).series;
}

std::pair<TruncatedSeries, int64_t> monopole_series_stabilized(
    const TheorySpec& theory, const std::vector<int64_t>& kappa, int64_t order, bool graded,
    std::optional<int64_t> max_radius) {
    int64_t r = 0;
    TruncatedSeries s = monopole_run(theory, kappa, order, graded, max_radius, &r);
    return {std::move(s), r};
}

TruncatedSeries hilb2_closed_form(int64_t l, int64_t order) {
    if (l < 0) throw StructuralError("hilb2_closed_form: l must be >= 0");
    TruncatedSeries m_sum(0, order);
    for (int64_t m = -order; m <= order + l; ++m)
        m_sum.add_term(BiDegree{std::abs(l - m) + std::abs(m), {}}, Rational(1));
    TruncatedSeries body =
        geom_expand(2, {}, order).mul(geom_expand(1, {}, order)).mul(geom_expand(1, {}, order));
    body = body.mul(m_sum);
    // Shift by t^{2l}; terms pushed past the order are dropped.
    TruncatedSeries out(0, order);
    for (const auto& [d, c] : body.terms()) out.add_term(BiDegree{d.t + 2 * l, {}}, c);
    return out;
}

bool verify_monopole_hilbert(int64_t l, int64_t order) {
    const TruncatedSeries lhs = monopole_series(preset_jordan(2), {l}, order, false);
    return lhs == hilb2_closed_form(l, order);
}

TruncatedSeries klein_costalk_character(int n, const std::vector<int64_t>& lambda, int64_t order,
                                        bool with_classical) {
    if (n < 1) throw StructuralError("klein_costalk_character: N must be >= 1");
    if (static_cast<int>(lambda.size()) != n)
        throw StructuralError("klein_costalk_character: lambda length != N");
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] < lambda[i])
            throw StructuralError("klein_costalk_character: lambda not weakly decreasing");
    TruncatedSeries gen(1, order);
    const int64_t lo = lambda.back() - order, hi = lambda.front() + order;
    for (int64_t m = lo; m <= hi; ++m) {
        int64_t t = 0, x = 0;
        for (int64_t li : lambda) {
            t += std::abs(li - m);
            x += li - m;
        }
        gen.add_term(BiDegree{t, {x}}, Rational(1));
    }
    return with_classical ? gen.mul(geom_expand(2, {0}, order)) : gen;
}

TruncatedSeries sn_ring_character(int n, int64_t order) {
    if (n < 1) throw StructuralError("sn_ring_character: N must be >= 1");
    TruncatedSeries out(1, order);
    // Normal-form monomial basis: W^a, W^a Z^b (b>=1), W^a Y^c (c>=1).
    for (int64_t a = 0; 2 * a < order; ++a) {
        out.add_term(BiDegree{2 * a, {0}}, Rational(1));
        for (int64_t b = 1; 2 * a + n * b < order; ++b)
            out.add_term(BiDegree{2 * a + n * b, {n * b}}, Rational(1));
        for (int64_t c = 1; 2 * a + n * c < order; ++c)
            out.add_term(BiDegree{2 * a + n * c, {-n * c}}, Rational(1));
    }
    return out;
}

}  // namespace coulomb
