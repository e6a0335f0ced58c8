#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/report.hpp"
#include "coulomb/theory.hpp"
#include "coulomb/wpoly.hpp"

namespace coulomb {

/// Coweight of the extended torus of an abelian theory: one integer per
/// rank-1 gauge factor plus a flavor coweight vector.
struct ClassIndex {
    std::vector<int64_t> gauge;
    std::vector<int64_t> flavor;

    friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
    friend bool operator<(const ClassIndex& a, const ClassIndex& b) {
        if (a.gauge != b.gauge) return a.gauge < b.gauge;
        return a.flavor < b.flavor;
    }
};

/// Element of the abelian Coulomb-branch ring or of one of its costalk
/// modules: a finite sum of basis classes r^idx with WPoly coefficients.
/// All indices of one element share a single flavor vector (the element's
/// sector); the zero sector is the ring itself.
///
/// Coefficients live in the polynomial ring on gauge + flavor equivariant
/// parameters; with the default specialization the flavor parameters are
/// simply never written to.
class RingElement {
public:
    RingElement(TheorySpec theory);

    static RingElement zero(const TheorySpec& t) { return RingElement(t); }
    static RingElement one(const TheorySpec& t);

    const TheorySpec& theory() const { return theory_; }
    const std::map<ClassIndex, WPoly>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    int n_params() const { return theory_.n_factors() + theory_.flavor_rank; }

    /// The common flavor vector of the support; nullopt for 0 or mixed.
    std::optional<std::vector<int64_t>> sector() const;

    void add_term(const ClassIndex& idx, const WPoly& coeff);
    RingElement add(const RingElement& o) const;
    RingElement scaled(const WPoly& c) const;
    RingElement scaled(const Rational& c) const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

    /// "(w_i - w_j)*r[-1,-1;0]": canonical ordering on indices; coefficients
    /// are printed factored over the theory's matter linear forms.
    std::string str() const;

private:
    TheorySpec theory_;
    std::map<ClassIndex, WPoly> support_;
};

/// The element 1 * r^idx. Shapes must match the theory (all factors rank 1).
RingElement basis_class(const TheorySpec& theory, const ClassIndex& idx);

/// Weight-pairing multiplication: r^a * r^b = prod_chi l_chi^{d_chi} *
/// r^{a+b} with d_chi = (|<chi,a>| + |<chi,b>| - |<chi,a+b>|) / 2, extended
/// bilinearly. l_chi is chi's linear form in the equivariant parameters;
/// flavor parameters are specialized to zero unless formal_flavor is set.
RingElement multiply(const RingElement& a, const RingElement& b, bool formal_flavor = false);

RingElement power(const RingElement& a, int64_t e, bool formal_flavor = false);

/// The pairing exponent d_chi for one matter weight and an index pair;
/// throws if the parity/nonnegativity invariant fails.
int64_t pairing_exponent(int64_t pair_a, int64_t pair_b);

/// Named elements of the two-node local model. Basic names:
/// y_j, y_i, y_ji, z_j, z_i, z_ji, r0.
RingElement two_node_named(const TheorySpec& t, const std::string& name);

/// Section classes: kind in {"y_j", "'y_j", "z_j", "z_i", "'z_i"} with the
/// section index alpha (for j-kinds, 0 <= alpha <= w_j) or beta (i-kinds,
/// 0 <= beta <= w_i).
RingElement two_node_section(const TheorySpec& t, const std::string& kind, int idx);

/// The class ^alpha r^{m,n} over the coweight (m, 1^alpha 0...; n, 0...).
RingElement two_node_r(const TheorySpec& t, int64_t m, int64_t n, int alpha);

/// Checks every displayed relation of the two-node local model for the
/// given flavor dimensions, alpha in [0, w_j].
CheckReport verify_computation_relations(int w_j, int w_i);

/// Checks the six-case closed form for ^alpha r^{m,n} against the basis
/// class, every applicable case per cell.
CheckReport verify_rmn(int w_j, int w_i, const std::vector<int>& alphas,
                       const std::vector<int64_t>& ms, const std::vector<int64_t>& ns);

/// Cross-checks the two-node model at w_j = w_i = 1 against the incidence
/// quadric realization, plus the structural section identities.
CheckReport sl3_cross_check();

}  // namespace coulomb
