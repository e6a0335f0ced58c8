#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coulomb/series.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

/// The integer t-exponent of the monopole summand at a dominant coweight:
///   -2 * sum over factors of sum_{a<b} |lambda_a - lambda_b|
///   + sum over matter weights of |<gauge, lambda> + <flavor, kappa>|.
int64_t delta_exponent(const TheorySpec& theory, const DominantCoweight& lambda,
                       const std::vector<int64_t>& kappa_entries);

/// One summand of the monopole sum. The t-exponent always equals
/// delta_exponent of the coweight; the x-exponent carries one entry per
/// gauge factor, the sum of the factor's coweight entries.
struct MonopoleTerm {
    DominantCoweight coweight;
    int64_t t_exponent = 0;
    std::vector<int64_t> x_exponent;
};

/// The summands with t-exponent below `order` within the given enumeration
/// radius, in the dominant enumeration order.
std::vector<MonopoleTerm> monopole_terms(const TheorySpec& theory,
                                         const std::vector<int64_t>& kappa, int64_t order,
                                         int64_t radius);

/// Classical factor attached to the stabilizer of a coweight: over each
/// block of equal consecutive entries of size m, the expansion of
/// prod_{k=1}^{m} (1 - t^{2k})^{-1}. Returned with x_rank 0.
TruncatedSeries classical_factor(const DominantCoweight& lambda, int64_t order);

/// Default enumeration cap; overridable per call or via COULOMB_MAX_RADIUS.
constexpr int64_t kDefaultMaxRadius = 64;

/// The flavored monopole formula: sum over dominant coweights of
/// t^delta * x^charge * classical_factor. When `graded`, the series carries
/// one x-variable per gauge factor with exponent sum_a lambda_a; otherwise
/// x_rank is 0.
///
/// Enumeration radius doubles until two successive radii agree, plus one
/// more doubling as a guard; a radius past the cap without stabilization
/// raises ConvergenceError naming an offending ray.
TruncatedSeries monopole_series(const TheorySpec& theory, const std::vector<int64_t>& kappa,
                                int64_t order, bool graded,
                                std::optional<int64_t> max_radius = std::nullopt);

/// Single fixed-radius evaluation of the same sum (no stabilization logic);
/// used by radius-stability checks.
TruncatedSeries monopole_sum_at_radius(const TheorySpec& theory,
                                       const std::vector<int64_t>& kappa, int64_t order,
                                       bool graded, int64_t radius);

/// monopole_series plus the radius at which the doubling stabilized.
std::pair<TruncatedSeries, int64_t> monopole_series_stabilized(
    const TheorySpec& theory, const std::vector<int64_t>& kappa, int64_t order, bool graded,
    std::optional<int64_t> max_radius = std::nullopt);

/// Closed-form comparator for the degree-2 Hilbert scheme module:
/// t^{2l} (1-t^2)^{-1} (1-t)^{-2} sum_{m in Z} t^{|l-m|+|m|}, expanded.
TruncatedSeries hilb2_closed_form(int64_t l, int64_t order);

/// monopole_series(jordan(2), kappa=(l), ungraded) == hilb2_closed_form(l).
bool verify_monopole_hilbert(int64_t l, int64_t order);

/// Bigraded character (x_rank 1) of the Kleinian costalk at a weakly
/// decreasing lambda: generator sum over m in Z of
/// x^{sum_i (lambda_i - m)} t^{sum_i |lambda_i - m|}; `with_classical`
/// multiplies by (1 - t^2)^{-1}.
TruncatedSeries klein_costalk_character(int n, const std::vector<int64_t>& lambda, int64_t order,
                                        bool with_classical);

/// Independent oracle: exact bigraded Hilbert series of C[Z,Y,W]/(ZY - W^N)
/// by direct monomial enumeration, with t(W)=2, t(Z)=t(Y)=N and x-charges
/// x(Z)=+N, x(Y)=-N, x(W)=0 (the convention x(u)=+1, x(v)=-1).
TruncatedSeries sn_ring_character(int n, int64_t order);

}  // namespace coulomb
