#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

/// Product of general linear factors; rank-1 factors model torus components.
struct GaugeGroup {
    std::vector<int> factor_ranks;

    friend bool operator==(const GaugeGroup&, const GaugeGroup&) = default;
};

/// One weight of the matter representation: a weight of each factor's
/// diagonal torus plus a flavor-torus charge vector.
struct MatterWeight {
    std::vector<std::vector<int64_t>> gauge;  // one vector per factor, length = rank
    std::vector<int64_t> flavor;              // length = flavor_rank

    friend bool operator==(const MatterWeight&, const MatterWeight&) = default;
};

/// A gauge theory with flavor symmetry: the pair (G, N) plus a flavor torus.
struct TheorySpec {
    GaugeGroup group;
    int flavor_rank = 0;
    std::vector<MatterWeight> matter;

    // Presentation metadata (stable across runs, not part of structural
    // equality concerns): names for the equivariant parameters and the
    // node each flavor slot belongs to.
    std::vector<std::string> gauge_var_names;
    std::vector<std::string> flavor_var_names;
    std::vector<int> flavor_node_of_slot;

    int n_factors() const { return static_cast<int>(group.factor_ranks.size()); }
    int rank(int factor) const { return group.factor_ranks[factor]; }
    bool all_rank_one() const;

    /// Throws StructuralError if shapes are inconsistent.
    void validate() const;

    friend bool operator==(const TheorySpec&, const TheorySpec&) = default;
};

/// Weakly decreasing integer tuple per gauge factor.
struct DominantCoweight {
    std::vector<std::vector<int64_t>> parts;

    friend bool operator==(const DominantCoweight&, const DominantCoweight&) = default;
};

/// Integer vector kappa = (k_1, ..., k_N) grading line bundles, with a
/// node assignment telling which quiver node each slot belongs to.
struct FlavorCoweight {
    std::vector<int64_t> entries;
    std::vector<int> node_of_slot;  // same length as entries

    static FlavorCoweight zero(int n, const std::vector<int>& nodes);
    /// All slots on one node (the common case for sqed/jordan).
    static FlavorCoweight single_node(std::vector<int64_t> entries);

    friend bool operator==(const FlavorCoweight&, const FlavorCoweight&) = default;
};

/// Preset theories.
TheorySpec preset_sqed(int n_flavors);
TheorySpec preset_jordan(int n);
TheorySpec preset_two_node(int w_j, int w_i);
TheorySpec preset_trivial();

/// Parses "sqed:2", "jordan:3", "two-node:2,3", "trivial".
/// Throws StructuralError on unknown shorthand.
TheorySpec parse_preset(const std::string& text);

/// All dominant coweights with every entry in [-radius, radius], in
/// descending lexicographic order on the concatenated tuples.
std::vector<DominantCoweight> enumerate_dominant(const TheorySpec& theory, int64_t radius);

/// The node-wise coweight kappa^(i): coefficients of the fundamental
/// coweights omega_1..omega_{N_i-1}, i.e. (k_{s_n} - k_{s_{n+1}}) for the
/// node's slots s_1 < ... < s_{N_i}. Requires the node restriction to be
/// weakly decreasing.
std::vector<int64_t> kappa_node_coweight(const FlavorCoweight& kappa, int node);

/// Layer-peeling decomposition of kappa in Lambda_F^{++} (globally weakly
/// decreasing, k_N >= 0) into layers of the form (1,...,1,0,...,0): the
/// l-th layer has ones exactly where k_s >= l. Layers sum back to kappa.
std::vector<FlavorCoweight> decompose_lambda_plus_plus(const FlavorCoweight& kappa);

/// Pairing of a matter weight with a (coweight, flavor coweight) pair:
/// <gauge part, lambda> + <flavor part, kappa>.
int64_t pair_weight(const MatterWeight& w, const DominantCoweight& lambda,
                    const std::vector<int64_t>& kappa_entries);

}  // namespace coulomb
