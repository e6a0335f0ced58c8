#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coulomb/quadric.hpp"

using namespace coulomb;

namespace {

QuadricPoly v(const char* name) { return QuadricPoly::var(name); }

}  // namespace

TEST_CASE("reduce_mod_quadric rewriting") {
    const QuadricPoly a2b2 = v("a2").mul(v("b2"));
    const QuadricPoly rhs = v("a1").mul(v("b1")).add(v("a3").mul(v("b3"))).scaled(Rational(-1));
    CHECK(reduce_mod_quadric(a2b2) == rhs);

    const QuadricPoly untouched = v("a1").mul(v("b2"));
    CHECK(reduce_mod_quadric(untouched) == untouched);

    CHECK(reduce_mod_quadric(v("a2").mul(a2b2)) == v("a2").mul(rhs));
}

TEST_CASE("reduction is idempotent, linear, and exact modulo the quadric") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> exp(0, 2), coeff(-4, 4), nterms(1, 4);
    auto random_poly = [&]() {
        QuadricPoly p;
        const int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            QuadricPoly::Exps e;
            for (int i = 0; i < 6; ++i) e[i] = exp(rng);
            p.add_term(e, Rational(coeff(rng)));
        }
        return p;
    };
    for (int rep = 0; rep < 200; ++rep) {
        const QuadricPoly p = random_poly(), q = random_poly();
        const QuadricPoly rp = reduce_mod_quadric(p);
        CHECK(reduce_mod_quadric(rp) == rp);
        CHECK(reduce_mod_quadric(p.add(q)) == reduce_mod_quadric(rp.add(reduce_mod_quadric(q))));
        // p - reduce(p) is exactly divisible by the quadric.
        const auto quotient = quadric_divide(p.sub(rp), incidence_quadric());
        REQUIRE(quotient);
        CHECK(quotient->mul(incidence_quadric()) == p.sub(rp));
    }
}

TEST_CASE("normal form never contains a2*b2") {
    const QuadricPoly p = v("a2").mul(v("b2")).mul(v("a2").mul(v("b2"))).add(
        v("a2").mul(v("b1")));
    for (const auto& [e, c] : reduce_mod_quadric(p).terms())
        CHECK((e[1] == 0 || e[4] == 0));
}

TEST_CASE("all displayed relations hold in the quadric model") {
    const CheckReport report = verify_example_relations();
    for (const auto& c : report.cases)
        CHECK_MESSAGE(c.pass, c.id, ": expected ", c.expected, " got ", c.actual);
    CHECK(report.cases.size() == 16);
}

TEST_CASE("section identities") {
    const CheckReport report = verify_section_vanishing();
    CHECK(report.all_pass());
    CHECK(report.cases.size() == 3);
}

TEST_CASE("the chosen signs are load-bearing") {
    // Flipping the sign of z_i breaks z_j*z_i = (w_i - w_j)*z_ji.
    const QuadricPoly z_j = v("a3").mul(v("b2"));
    const QuadricPoly z_i_wrong = v("a2").mul(v("b1"));  // missing the minus
    const QuadricPoly z_ji = v("a3").mul(v("b1")).scaled(Rational(-1));
    const QuadricPoly dif = v("a2").mul(v("b2"));
    CHECK_FALSE(reduce_mod_quadric(z_j.mul(z_i_wrong)) == reduce_mod_quadric(dif.mul(z_ji)));
}
