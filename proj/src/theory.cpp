#include "coulomb/theory.hpp"

#include <algorithm>
#include <numeric>

namespace coulomb {

bool TheorySpec::all_rank_one() const {
    return std::all_of(group.factor_ranks.begin(), group.factor_ranks.end(),
                       [](int r) { return r == 1; });
}

void TheorySpec::validate() const {
    for (int r : group.factor_ranks)
        if (r < 1) throw StructuralError("TheorySpec: factor rank must be >= 1");
    if (flavor_rank < 0) throw StructuralError("TheorySpec: negative flavor rank");
    for (const auto& w : matter) {
        if (static_cast<int>(w.gauge.size()) != n_factors())
            throw StructuralError("MatterWeight: gauge part count != number of factors");
        for (int f = 0; f < n_factors(); ++f)
            if (static_cast<int>(w.gauge[f].size()) != rank(f))
                throw StructuralError("MatterWeight: gauge vector length != factor rank");
        if (static_cast<int>(w.flavor.size()) != flavor_rank)
            throw StructuralError("MatterWeight: flavor vector length != flavor rank");
    }
    if (!gauge_var_names.empty() && static_cast<int>(gauge_var_names.size()) != n_factors())
        throw StructuralError("TheorySpec: gauge variable name count mismatch");
    if (!flavor_node_of_slot.empty() &&
        static_cast<int>(flavor_node_of_slot.size()) != flavor_rank)
        throw StructuralError("TheorySpec: flavor node assignment length mismatch");
}

FlavorCoweight FlavorCoweight::zero(int n, const std::vector<int>& nodes) {
    FlavorCoweight k;
    k.entries.assign(n, 0);
    k.node_of_slot = nodes.empty() ? std::vector<int>(n, 0) : nodes;
    return k;
}

FlavorCoweight FlavorCoweight::single_node(std::vector<int64_t> entries) {
    FlavorCoweight k;
    k.node_of_slot.assign(entries.size(), 0);
    k.entries = std::move(entries);
    return k;
}

namespace {

std::vector<std::string> numbered(const std::string& stem, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

}  // namespace

TheorySpec preset_sqed(int n_flavors) {
    if (n_flavors < 1) throw StructuralError("sqed: need at least one flavor");
    TheorySpec t;
    t.group.factor_ranks = {1};
    t.flavor_rank = n_flavors;
    for (int r = 0; r < n_flavors; ++r) {
        MatterWeight w;
        w.gauge = {{1}};
        w.flavor.assign(n_flavors, 0);
        w.flavor[r] = -1;
        t.matter.push_back(std::move(w));
    }
    t.gauge_var_names = {"w"};
    t.flavor_var_names = numbered("wf", n_flavors);
    t.flavor_node_of_slot.assign(n_flavors, 0);
    t.validate();
    return t;
}

TheorySpec preset_jordan(int n) {
    if (n < 1) throw StructuralError("jordan: rank must be >= 1");
    TheorySpec t;
    t.group.factor_ranks = {n};
    t.flavor_rank = 1;
    auto basis = [n](int a) {
        std::vector<int64_t> e(n, 0);
        e[a] = 1;
        return e;
    };
    // V: weights e_a, dilatation charge 1.
    for (int a = 0; a < n; ++a) t.matter.push_back({{basis(a)}, {1}});
    // gl(V): weights e_a - e_b for all ordered pairs, dilatation charge 1.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int64_t> e(n, 0);
            e[a] += 1;
            e[b] -= 1;
            t.matter.push_back({{e}, {1}});
        }
    t.gauge_var_names = {"w"};
    t.flavor_var_names = {"wf1"};
    t.flavor_node_of_slot = {0};
    t.validate();
    return t;
}

TheorySpec preset_two_node(int w_j, int w_i) {
    if (w_j < 0 || w_i < 0) throw StructuralError("two-node: negative flavor count");
    TheorySpec t;
    t.group.factor_ranks = {1, 1};
    t.flavor_rank = w_j + w_i;
    auto flavor_unit = [&](int slot) {
        std::vector<int64_t> e(t.flavor_rank, 0);
        e[slot] = -1;
        return e;
    };
    for (int b = 0; b < w_j; ++b) t.matter.push_back({{{1}, {0}}, flavor_unit(b)});
    for (int b = 0; b < w_i; ++b) t.matter.push_back({{{0}, {1}}, flavor_unit(w_j + b)});
    t.matter.push_back({{{-1}, {1}}, std::vector<int64_t>(t.flavor_rank, 0)});
    t.gauge_var_names = {"w_j", "w_i"};
    for (int b = 1; b <= w_j; ++b) t.flavor_var_names.push_back("wf_j" + std::to_string(b));
    for (int b = 1; b <= w_i; ++b) t.flavor_var_names.push_back("wf_i" + std::to_string(b));
    t.flavor_node_of_slot.assign(w_j, 0);
    t.flavor_node_of_slot.insert(t.flavor_node_of_slot.end(), w_i, 1);
    t.validate();
    return t;
}

TheorySpec preset_trivial() { return TheorySpec{}; }

TheorySpec parse_preset(const std::string& text) {
    auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::vector<long> args;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t next = rest.find(',', pos);
            std::string piece = rest.substr(pos, next == std::string::npos ? next : next - pos);
            try {
                args.push_back(std::stol(piece));
            } catch (const std::exception&) {
                throw StructuralError("preset: bad integer '" + piece + "' in '" + text + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    if (head == "trivial" && args.empty()) return preset_trivial();
    if (head == "sqed" && args.size() == 1) return preset_sqed(static_cast<int>(args[0]));
    if (head == "jordan" && args.size() == 1) return preset_jordan(static_cast<int>(args[0]));
    if (head == "two-node" && args.size() == 2)
        return preset_two_node(static_cast<int>(args[0]), static_cast<int>(args[1]));
    throw StructuralError("unknown theory preset '" + text + "'");
}

namespace {

// Weakly decreasing tuples of a given length with entries in [-radius,
// radius], descending lexicographic.
void gen_dominant(int length, int64_t radius, int64_t max_entry, std::vector<int64_t>& cur,
                  std::vector<std::vector<int64_t>>& out) {
    if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
    }
    for (int64_t v = max_entry; v >= -radius; --v) {
        cur.push_back(v);
        gen_dominant(length, radius, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DominantCoweight> enumerate_dominant(const TheorySpec& theory, int64_t radius) {
    if (radius < 0) throw StructuralError("enumerate_dominant: negative radius");
    std::vector<std::vector<std::vector<int64_t>>> per_factor;
    for (int f = 0; f < theory.n_factors(); ++f) {
        std::vector<std::vector<int64_t>> tuples;
        std::vector<int64_t> cur;
        gen_dominant(theory.rank(f), radius, radius, cur, tuples);
        per_factor.push_back(std::move(tuples));
    }
    std::vector<DominantCoweight> out;
    DominantCoweight acc;
    acc.parts.resize(theory.n_factors());
    // Nested product, factor 0 most significant.
    std::vector<size_t> idx(theory.n_factors(), 0);
    while (true) {
        for (int f = 0; f < theory.n_factors(); ++f) acc.parts[f] = per_factor[f][idx[f]];
        out.push_back(acc);
        int f = theory.n_factors() - 1;
        while (f >= 0 && ++idx[f] == per_factor[f].size()) idx[f--] = 0;
        if (f < 0) break;
    }
    return out;
}

std::vector<int64_t> kappa_node_coweight(const FlavorCoweight& kappa, int node) {
    std::vector<int64_t> ks;
    for (size_t s = 0; s < kappa.entries.size(); ++s)
        if (kappa.node_of_slot[s] == node) ks.push_back(kappa.entries[s]);
    for (size_t n = 1; n < ks.size(); ++n)
        if (ks[n - 1] < ks[n])
            throw StructuralError("kappa_node_coweight: node restriction is not dominant");
    std::vector<int64_t> out;
    for (size_t n = 1; n < ks.size(); ++n) out.push_back(ks[n - 1] - ks[n]);
    return out;
}

std::vector<FlavorCoweight> decompose_lambda_plus_plus(const FlavorCoweight& kappa) {
    const auto& k = kappa.entries;
    for (size_t s = 1; s < k.size(); ++s)
        if (k[s - 1] < k[s])
            throw StructuralError("decompose_lambda_plus_plus: kappa not weakly decreasing");
    if (!k.empty() && k.back() < 0)
        throw StructuralError("decompose_lambda_plus_plus: negative entries (shift kappa first)");
    std::vector<FlavorCoweight> layers;
    const int64_t top = k.empty() ? 0 : k.front();
    for (int64_t l = 1; l <= top; ++l) {
        FlavorCoweight layer;
        layer.node_of_slot = kappa.node_of_slot;
        for (int64_t v : k) layer.entries.push_back(v >= l ? 1 : 0);
        layers.push_back(std::move(layer));
    }
    return layers;
}

int64_t pair_weight(const MatterWeight& w, const DominantCoweight& lambda,
                    const std::vector<int64_t>& kappa_entries) {
    int64_t p = 0;
    for (size_t f = 0; f < w.gauge.size(); ++f)
        p += std::inner_product(w.gauge[f].begin(), w.gauge[f].end(), lambda.parts[f].begin(),
                                int64_t{0});
    if (!kappa_entries.empty())
        p += std::inner_product(w.flavor.begin(), w.flavor.end(), kappa_entries.begin(),
                                int64_t{0});
    return p;
}

}  // namespace coulomb
