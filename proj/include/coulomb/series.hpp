#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

/// Bidegree of one term: a t-power (>= 0) and a vector of Laurent exponents,
/// one per x-variable of the ambient series.
struct BiDegree {
    int64_t t = 0;
    std::vector<int64_t> x;

    friend bool operator==(const BiDegree&, const BiDegree&) = default;
    friend bool operator<(const BiDegree& a, const BiDegree& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.x < b.x;
    }
};

/// Sparse bigraded Laurent series in t (truncated at `order`) and x-variables,
/// with exact rational coefficients. Coefficients are only meaningful for
/// t-degrees below `order`; binary operations propagate the minimum order.
///
/// Invariants: every stored t-degree lies in [0, order); no zero coefficients
/// are ever stored. Value-semantic and immutable in spirit: operations return
/// fresh series.
class TruncatedSeries {
public:
    TruncatedSeries(int x_rank, int64_t order);

    static TruncatedSeries zero(int x_rank, int64_t order) { return {x_rank, order}; }
    static TruncatedSeries constant(const Rational& c, int x_rank, int64_t order);
    static TruncatedSeries monomial(const Rational& c, BiDegree deg, int x_rank, int64_t order);

    int x_rank() const { return x_rank_; }
    int64_t order() const { return order_; }
    const std::map<BiDegree, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const BiDegree& d) const;

    /// Adds c * t^d.t * x^d.x, dropping the term if it is zero or beyond order.
    void add_term(const BiDegree& d, const Rational& c);

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries sub(const TruncatedSeries& other) const;
    TruncatedSeries mul(const TruncatedSeries& other) const;
    TruncatedSeries scaled(const Rational& c) const;

    /// Truncates to a smaller order (no-op when new_order >= order).
    TruncatedSeries truncated(int64_t new_order) const;

    /// Linearly remaps x-exponents: new_x[i] = sum_j M[i][j] * old_x[j].
    /// Colliding terms are summed. An empty matrix collapses to x_rank 0.
    TruncatedSeries regrade_x(const std::vector<std::vector<int64_t>>& matrix) const;

    /// Drops the x-grading entirely (sums coefficients per t-degree).
    TruncatedSeries collapsed_x() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Canonical text form, terms ordered by (t ascending, x descending lex),
    /// x factors before the t factor: "1 + 3*t^2", "x*t + x^-1*t".
    std::string str() const;

private:
    int x_rank_;
    int64_t order_;
    std::map<BiDegree, Rational> terms_;
};

/// True iff all coefficients of a and b agree for t-degrees below `order`
/// (clamped to both series' own orders). Errors on x-rank mismatch.
bool series_equal_upto(const TruncatedSeries& a, const TruncatedSeries& b, int64_t order);

/// Expansion of 1 / (1 - t^t_step * x^x_shift) truncated at `order`.
/// Requires t_step >= 1 for t-adic convergence.
TruncatedSeries geom_expand(int64_t t_step, const std::vector<int64_t>& x_shift, int64_t order);

}  // namespace coulomb
