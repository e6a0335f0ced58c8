#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/report.hpp"

namespace coulomb {

/// Parameter grid for the named verification suites; every field has the
/// default the acceptance criteria pin down.
struct SuiteParams {
    int64_t l_min = 0, l_max = 5;       // monopole-hilbert
    int64_t order = 0;                  // 0 = suite default
    int n_min = 1, n_max = 0;           // 0 = suite default (5; klein-iso: 4)
    int64_t lambda_max = 3;             // cap on lambda_1
    int wj_min = 0, wj_max = 3;         // ring suites
    int wi_min = 0, wi_max = 3;
    int64_t m_min = -4, m_max = 4;      // ring-rmn
    int64_t n_lo = -4, n_hi = 4;
};

/// All weakly decreasing n-tuples with entries in [0, max_entry] and last
/// entry 0 (canonicalized dominant weights), deterministic order.
std::vector<std::vector<int64_t>> dominant_gl_weights(int n, int64_t max_entry);

/// Runs one named suite. Known names: monopole-hilbert, sn-coincidence,
/// klein-multiplicity, klein-surjectivity, klein-iso, ring-computation,
/// ring-rmn, sl3-example. Throws StructuralError for unknown names.
CheckReport run_suite(const std::string& name, const SuiteParams& params = {});

/// The names above, in canonical order.
std::vector<std::string> suite_names();

}  // namespace coulomb
