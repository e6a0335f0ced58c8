#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

/// Polynomial in the equivariant parameters (gauge parameters w per rank-1
/// factor, then optional formal flavor parameters). Exponents >= 0, no zero
/// terms stored. The variable count is fixed at construction.
class WPoly {
public:
    explicit WPoly(int n_vars) : n_vars_(n_vars) {}

    static WPoly zero(int n_vars) { return WPoly(n_vars); }
    static WPoly constant(int n_vars, const Rational& c);
    static WPoly variable(int n_vars, int index);
    static WPoly monomial(std::vector<int64_t> exps, const Rational& c);

    int n_vars() const { return n_vars_; }
    const std::map<std::vector<int64_t>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int64_t total_degree() const;  // -1 for the zero polynomial

    void add_term(const std::vector<int64_t>& exps, const Rational& c);

    WPoly add(const WPoly& o) const;
    WPoly sub(const WPoly& o) const;
    WPoly mul(const WPoly& o) const;
    WPoly scaled(const Rational& c) const;
    WPoly pow(int64_t e) const;

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<WPoly> divided_by(const WPoly& divisor) const;

    friend bool operator==(const WPoly&, const WPoly&) = default;

    /// "w_i - w_j", "2*w_j^2 + 1"; terms ordered by (total degree, exponents)
    /// ascending. Names must cover all variables.
    std::string str(const std::vector<std::string>& names) const;

private:
    int n_vars_;
    std::map<std::vector<int64_t>, Rational> terms_;
};

}  // namespace coulomb
