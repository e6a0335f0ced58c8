#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/rational.hpp"
#include "coulomb/report.hpp"
#include "coulomb/series.hpp"

namespace coulomb {

/// Polynomial in u, v with a fixed Z/N character: every monomial u^p v^q
/// satisfies p - q = charge (mod N). Exponents >= 0, no zero terms.
class SemiInvariantPoly {
public:
    SemiInvariantPoly(int n, int charge);

    static SemiInvariantPoly monomial(int n, int64_t u_exp, int64_t v_exp,
                                      const Rational& c = Rational(1));

    int n() const { return n_; }
    int charge() const { return charge_; }
    const std::map<std::pair<int64_t, int64_t>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int64_t u_exp, int64_t v_exp, const Rational& c);
    SemiInvariantPoly add(const SemiInvariantPoly& o) const;

    friend bool operator==(const SemiInvariantPoly&, const SemiInvariantPoly&) = default;

    std::string str() const;

private:
    int n_;
    int charge_;  // in [0, n)
    std::map<std::pair<int64_t, int64_t>, Rational> terms_;
};

/// Polynomial product; charges add mod N.
SemiInvariantPoly module_multiply(const SemiInvariantPoly& f, const SemiInvariantPoly& g);

/// Weakly decreasing weights canonicalized so the last entry is 0.
std::vector<int64_t> canonicalize_gl_weight(std::vector<int64_t> lambda);

/// All monomials u^p v^q with p + q <= max_tdeg and p - q = charge (mod N),
/// ordered by (total degree, u-exponent descending).
std::vector<std::pair<int64_t, int64_t>> semi_invariant_basis(int n, int charge,
                                                              int64_t max_tdeg);

/// The normalized image of the costalk generator class at parameter m in
/// the fundamental sector omega_i: v^{N-i} Y^{m-1} for m > 0, u^i Z^{-m}
/// for m <= 0.
SemiInvariantPoly costalk_to_semiinvariant(int n, int fundamental_i, int64_t m);

/// The generator monomial of the lambda-sector at parameter m under the
/// normalized isomorphism extended multiplicatively:
/// u^{sum (lambda_i - m)_+} v^{sum (m - lambda_i)_+}.
SemiInvariantPoly sector_generator(int n, const std::vector<int64_t>& lambda, int64_t m);

/// Bigraded character of the section module at dominant lambda, computed
/// from the semi-invariant model: x^{p-q} t^{p+q} over the monomials of
/// the product module, truncated below `order`.
TruncatedSeries character_from_semiinvariants(int n, const std::vector<int64_t>& lambda,
                                              int64_t order);

/// Checks the constructive surjectivity witness for each generator of the
/// (lambda + mu)-sector below `order`: m' = m-1, m'' = 1 when
/// m >= lambda_n + 1, else m' = m, m'' = 0, stepping mu through its
/// fundamental decomposition. Both the bidegree addition and the monomial
/// factorization are verified.
CheckReport tensor_surjectivity_report(int n, const std::vector<int64_t>& lambda,
                                       const std::vector<int64_t>& mu, int64_t order);
bool verify_tensor_surjectivity(int n, const std::vector<int64_t>& lambda,
                                const std::vector<int64_t>& mu, int64_t order);

/// Checks that the normalized isomorphism intertwines multiplication by
/// the ring generators mapping to W, Z, Y exactly (scalar 1) on every
/// generator of t-degree < order, with the abelian ring on one side and
/// semi-invariants on the other.
CheckReport iso_module_map_report(int n, const std::vector<int64_t>& lambda, int64_t order);
bool verify_iso_module_map(int n, const std::vector<int64_t>& lambda, int64_t order);

}  // namespace coulomb
