#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "coulomb/rational.hpp"
#include "coulomb/report.hpp"

namespace coulomb {

/// Polynomial in (a_1, a_2, a_3, b_1, b_2, b_3), the coordinates of
/// V x V* for the incidence quadric a_1 b_1 + a_2 b_2 + a_3 b_3 = 0.
class QuadricPoly {
public:
    using Exps = std::array<int64_t, 6>;  // a1 a2 a3 b1 b2 b3

    QuadricPoly() = default;

    static QuadricPoly monomial(const Exps& e, const Rational& c = Rational(1));
    /// Variable by name: "a1".."a3", "b1".."b3".
    static QuadricPoly var(const std::string& name);

    const std::map<Exps, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& e, const Rational& c);
    QuadricPoly add(const QuadricPoly& o) const;
    QuadricPoly sub(const QuadricPoly& o) const;
    QuadricPoly mul(const QuadricPoly& o) const;
    QuadricPoly scaled(const Rational& c) const;

    friend bool operator==(const QuadricPoly&, const QuadricPoly&) = default;

    std::string str() const;

private:
    std::map<Exps, Rational> terms_;
};

/// The defining quadric a1*b1 + a2*b2 + a3*b3.
QuadricPoly incidence_quadric();

/// Canonical normal form modulo the quadric: every occurrence of a2*b2 is
/// replaced by -(a1*b1 + a3*b3) until no monomial contains both a2 and b2.
QuadricPoly reduce_mod_quadric(const QuadricPoly& p);

/// Exact division; nullopt when not divisible.
std::optional<QuadricPoly> quadric_divide(const QuadricPoly& p, const QuadricPoly& divisor);

/// All displayed two-node relations at w_j = w_i = 1 under the incidence-
/// quadric substitutions, in normal form, plus w_i - w_j = a2*b2.
CheckReport verify_example_relations();

/// The section identities a2*b3 = y_j, a3*b3 = w_j, a1*b3 = y_ji.
CheckReport verify_section_vanishing();

}  // namespace coulomb
