#include "coulomb/suites.hpp"

#include <chrono>
#include <sstream>

#include "coulomb/abelian.hpp"
#include "coulomb/klein.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/quadric.hpp"

namespace coulomb {

std::vector<std::vector<int64_t>> dominant_gl_weights(int n, int64_t max_entry) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> cur;
    // Entries descend from max_entry; the last entry is forced to 0.
    auto rec = [&](auto&& self, int64_t cap) -> void {
        if (static_cast<int>(cur.size()) == n - 1) {
            auto w = cur;
            w.push_back(0);
            out.push_back(std::move(w));
            return;
        }
        for (int64_t v = cap; v >= 0; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    if (n == 1) {
        out.push_back({0});
        return out;
    }
    rec(rec, max_entry);
    return out;
}

namespace {

std::string weight_str(const std::vector<int64_t>& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

CheckReport suite_monopole_hilbert(const SuiteParams& p) {
    const int64_t order = p.order ? p.order : 30;
    CheckReport report;
    report.name = "monopole-hilbert";
    for (int64_t l = p.l_min; l <= p.l_max; ++l) {
        const TruncatedSeries lhs = monopole_series(preset_jordan(2), {l}, order, false);
        const TruncatedSeries rhs = hilb2_closed_form(l, order);
        report.add("l=" + std::to_string(l) + " T=" + std::to_string(order), lhs == rhs,
                   rhs.str(), lhs.str());
    }
    return report;
}

CheckReport suite_sn_coincidence(const SuiteParams& p) {
    const int64_t order = p.order ? p.order : 24;
    const int n_max = p.n_max ? p.n_max : 5;
    CheckReport report;
    report.name = "sn-coincidence";
    for (int n = std::max(1, p.n_min); n <= n_max; ++n) {
        const TheorySpec theory = preset_sqed(n);
        const std::vector<int64_t> kappa(n, 0);
        const TruncatedSeries oracle = sn_ring_character(n, order);
        // Graded comparison in the quotient grading: the gauge charge m
        // carries the x-character (-N; 1,...,1), so m regrades to -N*m.
        const TruncatedSeries graded =
            monopole_series(theory, kappa, order, true).regrade_x({{-n}});
        report.add("N=" + std::to_string(n) + " graded", graded == oracle, oracle.str(),
                   graded.str());
        const TruncatedSeries ungraded = monopole_series(theory, kappa, order, false);
        report.add("N=" + std::to_string(n) + " ungraded", ungraded == oracle.collapsed_x(),
                   oracle.collapsed_x().str(), ungraded.str());
    }
    return report;
}

CheckReport suite_klein_multiplicity(const SuiteParams& p) {
    const int64_t order = p.order ? p.order : 20;
    const int n_max = p.n_max ? p.n_max : 5;
    CheckReport report;
    report.name = "klein-multiplicity";
    for (int n = std::max(1, p.n_min); n <= n_max; ++n) {
        for (const auto& lambda : dominant_gl_weights(n, p.lambda_max)) {
            const TruncatedSeries from_model = character_from_semiinvariants(n, lambda, order);
            const TruncatedSeries from_costalk =
                klein_costalk_character(n, lambda, order, true);
            bool zero_one = true;
            for (const auto& [d, c] : from_costalk.terms())
                if (!(c == Rational(0) || c == Rational(1))) zero_one = false;
            const std::string id = "N=" + std::to_string(n) + " lambda=" + weight_str(lambda);
            report.add(id + " characters equal", from_model == from_costalk,
                       from_costalk.str(), from_model.str());
            report.add(id + " multiplicity free", zero_one);
        }
    }
    return report;
}

CheckReport suite_klein_surjectivity(const SuiteParams& p) {
    const int64_t order = p.order ? p.order : 20;
    const int n_max = p.n_max ? p.n_max : 5;
    CheckReport report;
    report.name = "klein-surjectivity";
    for (int n = std::max(2, p.n_min); n <= n_max; ++n) {
        for (const auto& lambda : dominant_gl_weights(n, p.lambda_max)) {
            for (int f = 1; f <= n - 1; ++f) {
                std::vector<int64_t> mu(n, 0);
                for (int k = 0; k < f; ++k) mu[k] = 1;
                CheckReport sub = tensor_surjectivity_report(n, lambda, mu, order);
                const std::string id = "N=" + std::to_string(n) + " lambda=" +
                                       weight_str(lambda) + " mu=omega_" + std::to_string(f);
                report.add(id, sub.all_pass(), "all witnesses factor",
                           sub.all_pass() ? "all witnesses factor"
                                          : std::to_string(sub.failures()) + " failures");
            }
        }
    }
    return report;
}

CheckReport suite_klein_iso(const SuiteParams& p) {
    const int64_t order = p.order ? p.order : 12;
    const int n_max = p.n_max ? p.n_max : 4;  // default grid tops out at N = 4
    CheckReport report;
    report.name = "klein-iso";
    for (int n = std::max(1, p.n_min); n <= n_max; ++n) {
        for (const auto& lambda : dominant_gl_weights(n, p.lambda_max)) {
            CheckReport sub = iso_module_map_report(n, lambda, order);
            const std::string id = "N=" + std::to_string(n) + " lambda=" + weight_str(lambda);
            report.add(id, sub.all_pass(), "exact intertwining (scalar 1)",
                       sub.all_pass() ? "exact intertwining (scalar 1)"
                                      : std::to_string(sub.failures()) + " failures");
        }
    }
    return report;
}

CheckReport suite_ring_computation(const SuiteParams& p) {
    CheckReport report;
    report.name = "ring-computation";
    for (int wj = p.wj_min; wj <= p.wj_max; ++wj)
        for (int wi = p.wi_min; wi <= p.wi_max; ++wi) {
            CheckReport sub = verify_computation_relations(wj, wi);
            for (auto& c : sub.cases) {
                c.id = "w=(" + std::to_string(wj) + "," + std::to_string(wi) + ") " + c.id;
                report.cases.push_back(std::move(c));
            }
        }
    return report;
}

CheckReport suite_ring_rmn(const SuiteParams& p) {
    CheckReport report;
    report.name = "ring-rmn";
    std::vector<int64_t> ms, ns;
    for (int64_t m = p.m_min; m <= p.m_max; ++m) ms.push_back(m);
    for (int64_t n = p.n_lo; n <= p.n_hi; ++n) ns.push_back(n);
    for (int wj = std::max(1, p.wj_min); wj <= p.wj_max; ++wj)
        for (int wi = std::max(1, p.wi_min); wi <= p.wi_max; ++wi) {
            std::vector<int> alphas;
            for (int a = 0; a <= wj; ++a) alphas.push_back(a);
            CheckReport sub = verify_rmn(wj, wi, alphas, ms, ns);
            const std::string id =
                "w=(" + std::to_string(wj) + "," + std::to_string(wi) + ")";
            report.add(id + " all cells", sub.all_pass(),
                       std::to_string(sub.cases.size()) + " cells exact",
                       sub.all_pass() ? std::to_string(sub.cases.size()) + " cells exact"
                                      : std::to_string(sub.failures()) + " failures");
        }
    return report;
}

CheckReport suite_sl3(const SuiteParams&) {
    CheckReport report = sl3_cross_check();
    report.name = "sl3-example";
    return report;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"monopole-hilbert",   "sn-coincidence", "klein-multiplicity",
            "klein-surjectivity", "klein-iso",      "ring-computation",
            "ring-rmn",           "sl3-example"};
}

CheckReport run_suite(const std::string& name, const SuiteParams& params) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    if (name == "monopole-hilbert")
        report = suite_monopole_hilbert(params);
    else if (name == "sn-coincidence")
        report = suite_sn_coincidence(params);
    else if (name == "klein-multiplicity")
        report = suite_klein_multiplicity(params);
    else if (name == "klein-surjectivity")
        report = suite_klein_surjectivity(params);
    else if (name == "klein-iso")
        report = suite_klein_iso(params);
    else if (name == "ring-computation")
        report = suite_ring_computation(params);
    else if (name == "ring-rmn")
        report = suite_ring_rmn(params);
    else if (name == "sl3-example")
        report = suite_sl3(params);
    else
        throw StructuralError("unknown suite '" + name + "'");
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace coulomb
