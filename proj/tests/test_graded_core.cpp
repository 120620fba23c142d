#include "oracles.hpp"

#include <doctest.h>

using namespace gq;
using namespace gqtest;

TEST_CASE("algebra construction") {
    GradedAlgebra su2 = su2_algebra();
    CHECK(su2.size() == 3);
    CHECK(su2.generator(0).name == "xi1");
    CHECK(su2.generator(2).ordinal == 2);

    GradedAlgebra omega_r1 = GradedAlgebra::make("O(R1)", {{"x", 0}, {"dx", 1}});
    CHECK(omega_r1.find("dx") == 1);
    CHECK(omega_r1.find("nope") == -1);

    CHECK_THROWS_AS(GradedAlgebra::make("bad", {{"x", 0}, {"x", 0}}), Error);
    CHECK_THROWS_AS(GradedAlgebra::make("bad", {{"x", -1}}), Error);
    try {
        GradedAlgebra::make("bad", {{"x", 0}, {"x", 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateName);
    }
}

TEST_CASE("odd anticommutation and squares") {
    GradedAlgebra su2 = su2_algebra();
    auto xi = [&](int i) { return GradedPolynomial::generator(su2, i); };
    CHECK(xi(1) * xi(0) == -(xi(0) * xi(1)));
    CHECK((xi(0) * xi(0)).is_zero());

    GradedAlgebra mixed = GradedAlgebra::make("mixed", {{"xi", 1}, {"u", 2}});
    auto g = [&](int i) { return GradedPolynomial::generator(mixed, i); };
    CHECK(g(1) * g(0) == g(0) * g(1)); // even commutes
    CHECK(!(g(1) * g(1)).is_zero());   // even square survives
}

TEST_CASE("add and scale") {
    GradedAlgebra su2 = su2_algebra();
    auto xi = [&](int i) { return GradedPolynomial::generator(su2, i); };
    CHECK((xi(0) - xi(0)).is_zero());
    CHECK(rational(0) * xi(1) == GradedPolynomial(su2));
    CHECK(rational(2) * xi(1) == xi(1) + xi(1));
}

TEST_CASE("degree and homogeneous component") {
    GradedAlgebra su2 = su2_algebra();
    auto xi = [&](int i) { return GradedPolynomial::generator(su2, i); };
    GradedPolynomial p = xi(0) * xi(1);
    CHECK(p.degree() == 2);
    GradedPolynomial q = GradedPolynomial::constant(su2, 1) + p;
    CHECK(!q.is_homogeneous());
    CHECK_THROWS_AS(q.degree(), Error);
    CHECK(q.homogeneous_component(2) == p);
    CHECK(q.homogeneous_component(1).is_zero());
}

TEST_CASE("canonical serialization") {
    GradedAlgebra su2 = su2_algebra();
    auto xi = [&](int i) { return GradedPolynomial::generator(su2, i); };
    CHECK(GradedPolynomial(su2).str() == "0");
    CHECK((rational(-1, 2) * (xi(0) * xi(1))).str() == "-1/2*xi1*xi2");
    CHECK((xi(1) * xi(0)).str() == "-xi1*xi2");
    CHECK((GradedPolynomial::constant(su2, 1) + xi(0) * xi(1)).str() == "1 + xi1*xi2");

    GradedAlgebra r1 = GradedAlgebra::make("R1", {{"x", 0}});
    auto x = GradedPolynomial::generator(r1, 0);
    CHECK((x * x).str() == "x^2");
    CHECK((x * x - GradedPolynomial::constant(r1, 3)).str() == "-3 + x^2");
}

TEST_CASE("randomized algebra laws per grading profile") {
    std::vector<GradedAlgebra> profiles = {
        GradedAlgebra::make("ext4", {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}),
        GradedAlgebra::make("forms2", {{"x", 0}, {"y", 0}, {"dx", 1}, {"dy", 1}}),
        GradedAlgebra::make("tower", {{"x", 0}, {"xi", 1}, {"u", 2}, {"v", 3}}),
    };
    for (const auto& alg : profiles) {
        PolyGen gen(alg, 7);
        for (int it = 0; it < 200; ++it) {
            GradedPolynomial p = gen.random_poly();
            GradedPolynomial q = gen.random_poly();
            GradedPolynomial r = gen.random_poly();
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
            GradedPolynomial hp = gen.random_homogeneous();
            GradedPolynomial hq = gen.random_homogeneous();
            GradedPolynomial qp = hq * hp;
            if ((hp.is_zero() ? 0 : hp.degree()) * (hq.is_zero() ? 0 : hq.degree()) % 2 == 1)
                qp = -qp;
            CHECK(hp * hq == qp);
            // canonical form is stable under rebuilding from its own terms
            std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
            CHECK(GradedPolynomial::from_terms(alg, terms) == p);
        }
    }
}

TEST_CASE("normalization accumulates and cancels") {
    GradedAlgebra su2 = su2_algebra();
    Monomial m({{0, 1}, {1, 1}});
    GradedPolynomial p = GradedPolynomial::from_terms(
        su2, {{m, rational(1, 2)}, {m, rational(1, 2)}, {m, rational(-1)}});
    CHECK(p.is_zero());
}

TEST_CASE("algebra mismatch is rejected") {
    GradedAlgebra a = GradedAlgebra::make("A", {{"x", 0}});
    GradedAlgebra b = GradedAlgebra::make("A", {{"x", 0}}); // same layout, distinct identity
    GradedPolynomial pa = GradedPolynomial::generator(a, 0);
    GradedPolynomial pb = GradedPolynomial::generator(b, 0);
    CHECK_THROWS_AS(pa * pb, Error);
    CHECK(pa != pb);
}
