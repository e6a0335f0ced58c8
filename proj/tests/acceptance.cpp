// Acceptance suite: every criterion at its pinned grid and tolerance
// (exact equality throughout), one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "coulomb/abelian.hpp"
#include "coulomb/klein.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/quadric.hpp"
#include "coulomb/suites.hpp"
#include "test_util.hpp"

namespace {

using namespace coulomb;

int g_failures = 0;

void outcome(int number, const std::string& name, bool pass, size_t cases, double ms,
             double budget_s, const std::string& detail = "") {
    const bool in_budget = ms <= budget_s * 1000.0;
    const bool ok = pass && in_budget;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " ("
              << cases << " cases, " << static_cast<long>(ms) << " ms, budget "
              << static_cast<long>(budget_s) << " s)";
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    if (pass && !in_budget) std::cout << " -- over time budget";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

template <typename F>
void criterion(int number, const std::string& name, double budget_s, F&& run) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    size_t cases = 0;
    std::string detail;
    try {
        auto [p, c, d] = run();
        pass = p;
        cases = c;
        detail = d;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    outcome(number, name, pass, cases, ms, budget_s, detail);
}

struct Result {
    bool pass;
    size_t cases;
    std::string detail;
};

Result from_report(const CheckReport& r) {
    std::string detail;
    for (const auto& c : r.cases)
        if (!c.pass) {
            detail = "first failure: " + c.id;
            break;
        }
    return {r.all_pass(), r.cases.size(), detail};
}

// --- criterion 9 property batteries (1000 randomized cases each) ---

Result series_ring_axioms(int cases) {
    testutil::Rng rng(101);
    for (int rep = 0; rep < cases; ++rep) {
        const auto a = testutil::random_series(rng, 2, 6, 4);
        const auto b = testutil::random_series(rng, 2, 6, 4);
        const auto c = testutil::random_series(rng, 2, 6, 4);
        const bool ok = a.add(b) == b.add(a) && a.mul(b) == b.mul(a) &&
                        a.add(b).add(c) == a.add(b.add(c)) &&
                        a.mul(b).mul(c) == a.mul(b.mul(c)) &&
                        a.mul(b.add(c)) == a.mul(b).add(a.mul(c));
        bool normalized = true;
        for (const auto& s : {a.add(b), a.mul(b), a.sub(a)})
            for (const auto& [d, v] : s.terms())
                if (v.is_zero()) normalized = false;
        if (!ok || !normalized)
            return {false, static_cast<size_t>(rep + 1),
                    "series axiom failed at case " + std::to_string(rep)};
    }
    return {true, static_cast<size_t>(cases), ""};
}

Result multiply_axioms(int cases) {
    testutil::Rng rng(103);
    const TheorySpec t = preset_two_node(2, 1);
    for (int rep = 0; rep < cases; ++rep) {
        const RingElement a = testutil::random_element(rng, t);
        const RingElement b = testutil::random_element(rng, t);
        const RingElement c = testutil::random_element(rng, t);
        if (!(multiply(a, b) == multiply(b, a)) ||
            !(multiply(multiply(a, b), c) == multiply(a, multiply(b, c))))
            return {false, static_cast<size_t>(rep + 1),
                    "ring multiply axiom failed at case " + std::to_string(rep)};
    }
    return {true, static_cast<size_t>(cases), ""};
}

Result pairing_parity(int cases) {
    testutil::Rng rng(107);
    const TheorySpec t = preset_two_node(2, 2);
    for (int rep = 0; rep < cases; ++rep) {
        const auto sa = testutil::random_sector(rng, t), sb = testutil::random_sector(rng, t);
        const ClassIndex ia = testutil::random_index(rng, t, sa);
        const ClassIndex ib = testutil::random_index(rng, t, sb);
        for (const auto& w : t.matter) {
            int64_t pa = 0, pb = 0;
            for (int f = 0; f < t.n_factors(); ++f) {
                pa += w.gauge[f][0] * ia.gauge[f];
                pb += w.gauge[f][0] * ib.gauge[f];
            }
            for (int r = 0; r < t.flavor_rank; ++r) {
                pa += w.flavor[r] * ia.flavor[r];
                pb += w.flavor[r] * ib.flavor[r];
            }
            // pairing_exponent throws on parity or sign violation.
            if (pairing_exponent(pa, pb) < 0)
                return {false, static_cast<size_t>(rep + 1), "negative exponent"};
        }
    }
    return {true, static_cast<size_t>(cases), ""};
}

Result radius_stability(int cases) {
    testutil::Rng rng(109);
    std::uniform_int_distribution<int64_t> kv(-2, 2);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int rep = 0; rep < cases; ++rep) {
        TheorySpec theory;
        switch (pick(rng)) {
            case 0: theory = preset_sqed(1); break;
            case 1: theory = preset_sqed(2); break;
            case 2: theory = preset_sqed(3); break;
            case 3: theory = preset_sqed(4); break;
            case 4: theory = preset_jordan(1); break;
            case 5: theory = preset_jordan(2); break;
            case 6: theory = preset_two_node(1, 1); break;
            default: theory = preset_two_node(1 + (rep % 2), rep % 2); break;
        }
        std::vector<int64_t> kappa;
        for (int r = 0; r < theory.flavor_rank; ++r) kappa.push_back(kv(rng));
        const int64_t order = 6;
        const auto [series, radius] = monopole_series_stabilized(theory, kappa, order, false);
        const int64_t doubled = 2 * std::max<int64_t>(radius, 1);
        if (!(monopole_sum_at_radius(theory, kappa, order, false, doubled) == series))
            return {false, static_cast<size_t>(rep + 1),
                    "radius instability at case " + std::to_string(rep)};
    }
    return {true, static_cast<size_t>(cases), ""};
}

}  // namespace

int main() {
    criterion(1, "monopole-Hilbert identity (jordan(2), l=0..5, T=30)", 5.0, [] {
        SuiteParams p;
        p.l_min = 0;
        p.l_max = 5;
        p.order = 30;
        return from_report(run_suite("monopole-hilbert", p));
    });

    criterion(2, "S_N coincidence (sqed(N), N=1..5, T=24)", 5.0, [] {
        SuiteParams p;
        p.n_min = 1;
        p.n_max = 5;
        p.order = 24;
        return from_report(run_suite("sn-coincidence", p));
    });

    criterion(3, "Klein characters equal and multiplicity free (N<=5, lambda_1<=3, T=20)",
              30.0, [] {
                  SuiteParams p;
                  p.n_min = 1;
                  p.n_max = 5;
                  p.lambda_max = 3;
                  p.order = 20;
                  return from_report(run_suite("klein-multiplicity", p));
              });

    criterion(4, "tensor surjectivity witnesses (N<=5, lambda_1<=3, fundamental mu, T=20)",
              30.0, [] {
                  SuiteParams p;
                  p.n_min = 1;
                  p.n_max = 5;
                  p.lambda_max = 3;
                  p.order = 20;
                  return from_report(run_suite("klein-surjectivity", p));
              });

    criterion(5, "abelian-ring relations (w_j, w_i in {0..3}, all alpha)", 5.0, [] {
        SuiteParams p;
        p.wj_min = 0;
        p.wj_max = 3;
        p.wi_min = 0;
        p.wi_max = 3;
        return from_report(run_suite("ring-computation", p));
    });

    criterion(6, "r^{m,n} closed form (w in {1..3}, alpha in [0,w_j], m,n in [-4,4])", 10.0,
              [] {
                  CheckReport all;
                  all.name = "ring-rmn";
                  std::vector<int64_t> ms, ns;
                  for (int64_t v = -4; v <= 4; ++v) {
                      ms.push_back(v);
                      ns.push_back(v);
                  }
                  for (int wj = 1; wj <= 3; ++wj)
                      for (int wi = 1; wi <= 3; ++wi) {
                          std::vector<int> alphas;
                          for (int a = 0; a <= wj; ++a) alphas.push_back(a);
                          CheckReport sub = verify_rmn(wj, wi, alphas, ms, ns);
                          for (auto& c : sub.cases) all.cases.push_back(std::move(c));
                      }
                  return from_report(all);
              });

    criterion(7, "normalized isomorphism, no scalar (N<=4, lambda_1<=3, T=12)", 30.0, [] {
        CheckReport all;
        all.name = "klein-iso";
        for (int n = 1; n <= 4; ++n)
            for (const auto& lambda : dominant_gl_weights(n, 3)) {
                CheckReport sub = iso_module_map_report(n, lambda, 12);
                for (auto& c : sub.cases) all.cases.push_back(std::move(c));
            }
        return from_report(all);
    });

    criterion(8, "SL(3) incidence-quadric example", 1.0, [] {
        CheckReport all = sl3_cross_check();
        return from_report(all);
    });

    criterion(9, "property suites, 1000 randomized cases each", 60.0, [] {
        size_t total = 0;
        for (auto* battery : {&series_ring_axioms, &multiply_axioms, &pairing_parity,
                              &radius_stability}) {
            const Result r = (*battery)(1000);
            total += r.cases;
            if (!r.pass) return Result{false, total, r.detail};
        }
        return Result{true, total, ""};
    });

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
