#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace gq;
using namespace gqtest;

namespace {

Derivation su2_ce(const GradedAlgebra& su2) { return cediff(su2, su2_constants()); }

} // namespace

TEST_CASE("CE differential matches the sign convention") {
    GradedAlgebra su2 = su2_algebra();
    Derivation q = su2_ce(su2);
    auto xi = [&](int i) { return GradedPolynomial::generator(su2, i); };
    CHECK(q.image(0) == -(xi(1) * xi(2)));
    CHECK(q.image(1) == -(xi(2) * xi(0)));
    CHECK(q.image(2) == -(xi(0) * xi(1)));
}

TEST_CASE("apply_derivation follows the graded Leibniz rule") {
    GradedAlgebra su2 = su2_algebra();
    auto xi = [&](int i) { return GradedPolynomial::generator(su2, i); };
    Derivation d1 = Derivation::coordinate(su2, 0);
    CHECK(d1.degree() == -1);
    CHECK(d1.apply(xi(0) * xi(1)) == xi(1));
    CHECK(d1.apply(xi(1) * xi(0)) == -xi(1)); // canonical form forces the sign
    Derivation q = su2_ce(su2);
    CHECK(q.apply(xi(0) * xi(0)).is_zero());
    // inhomogeneous inputs expand linearly
    CHECK(d1.apply(xi(0) * xi(1) + xi(0)) == xi(1) + GradedPolynomial::constant(su2, 1));
}

TEST_CASE("apply_morphism substitutes and respects products") {
    GradedAlgebra su2 = su2_algebra();
    GradedAlgebra forms = GradedAlgebra::make("O(R2)", {{"x", 0}, {"y", 0}, {"dx", 1}, {"dy", 1}});
    auto g = [&](const GradedAlgebra& a, int i) { return GradedPolynomial::generator(a, i); };

    AlgebraMorphism id = AlgebraMorphism::identity(su2);
    GradedPolynomial p = g(su2, 0) * g(su2, 1) + g(su2, 2);
    CHECK(id.apply(p) == p);

    // abelian connection: xi -> P dx; (P dx)^2 = 0
    GradedAlgebra ab = GradedAlgebra::make("ab", {{"xi", 1}});
    GradedPolynomial pdx = g(forms, 0) * g(forms, 2);
    AlgebraMorphism phi(ab, forms, {pdx});
    CHECK(phi.apply(g(ab, 0)) == pdx);

    GradedAlgebra ab2 = GradedAlgebra::make("ab2", {{"xi", 1}, {"eta", 1}});
    AlgebraMorphism phi2(ab2, forms, {pdx, g(forms, 1) * g(forms, 3)});
    CHECK(phi2.apply(g(ab2, 0) * g(ab2, 0)).is_zero());

    // composition law against the direct double substitution
    PolyGen gen(ab2, 11);
    GradedAlgebra mid = GradedAlgebra::make("mid", {{"a", 1}, {"b", 1}});
    AlgebraMorphism psi(mid, forms, {g(forms, 2), g(forms, 3)});
    AlgebraMorphism chi(ab2, mid, {g(mid, 0) + g(mid, 1), g(mid, 1)});
    AlgebraMorphism both = compose(psi, chi);
    for (int it = 0; it < 50; ++it) {
        GradedPolynomial r = gen.random_poly();
        CHECK(both.apply(r) == psi.apply(chi.apply(r)));
    }

    // degree preservation enforced
    CHECK_THROWS_AS(AlgebraMorphism(ab, forms, {g(forms, 0)}), Error);
}

TEST_CASE("commutator basics") {
    GradedAlgebra su2 = su2_algebra();
    Derivation d1 = Derivation::coordinate(su2, 0);
    CHECK(commutator(d1, d1).is_zero());

    Derivation q = su2_ce(su2);
    CHECK(commutator(q, q).is_zero()); // brute-force expansion of Q(Q(xi^a))

    // Euler field as the grading operator
    Derivation euler = Derivation::euler(su2);
    CHECK(commutator(euler, q) == Rational(q.degree()) * q);
    CHECK(commutator(euler, d1) == Rational(d1.degree()) * d1);
}

TEST_CASE("graded Jacobi identity on random derivation triples") {
    GradedAlgebra tower = GradedAlgebra::make("tower", {{"x", 0}, {"xi", 1}, {"u", 2}});
    PolyGen gen(tower, 23);
    for (int it = 0; it < 30; ++it) {
        int dx = static_cast<int>(gen.rng()() % 4) - 2;
        int dy = static_cast<int>(gen.rng()() % 4) - 2;
        int dz = static_cast<int>(gen.rng()() % 4) - 2;
        Derivation x = random_derivation(tower, dx, gen);
        Derivation y = random_derivation(tower, dy, gen);
        Derivation z = random_derivation(tower, dz, gen);
        auto sgn = [](int a, int b) { return (a & 1) && (b & 1); };
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Derivation lhs = commutator(x, commutator(y, z));
        Derivation rhs = commutator(commutator(x, y), z);
        Derivation mixed = commutator(y, commutator(x, z));
        if (sgn(dx, dy)) mixed = -mixed;
        CHECK(lhs == rhs + mixed);
        // graded antisymmetry
        Derivation anti = commutator(y, x);
        if (!sgn(dx, dy)) anti = -anti;
        CHECK(commutator(x, y) == anti);
    }
}

TEST_CASE("nilpotency certificates against the Jacobi oracle") {
    GradedAlgebra su2 = su2_algebra();
    CHECK(jacobi_oracle(su2_constants()));
    CHECK(check_nilpotent(su2_ce(su2)).pass);

    // a flipped cyclic sign still gives a Lie algebra (Bianchi class A):
    // certificate and oracle must agree, both passing
    StructureConstants flipped(3);
    flipped.add(0, 1, 2, 1);
    flipped.add(1, 2, 0, 1);
    flipped.add(2, 0, 1, -1);
    CHECK(jacobi_oracle(flipped));
    CHECK(check_nilpotent(cediff(su2, flipped)).pass);

    // [e1,e2] = e3 + e1 genuinely breaks Jacobi; both routes must fail
    StructureConstants bad = su2_constants();
    bad.add(0, 0, 1, 1);
    CHECK(!jacobi_oracle(bad));
    NilpotencyResult r = check_nilpotent(cediff(su2, bad));
    CHECK(!r.pass);
    CHECK(!r.residual.is_zero());

    CHECK(check_nilpotent(Derivation::zero(su2, 1)).pass);
    CHECK_THROWS_AS(check_nilpotent(Derivation::zero(su2, 2)), Error);
    try {
        check_nilpotent(Derivation::zero(su2, 2));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvenDegree);
    }
}

TEST_CASE("derived bracket") {
    GradedAlgebra su2 = su2_algebra();
    Derivation q = su2_ce(su2);
    Derivation x = Derivation::coordinate(su2, 0);

    Derivation db = derived_bracket(x, x, q);
    CHECK(db.degree() == -1); // |X|+|Y|+|Q| for two degree -1 fields

    // abelian Q = 0 gives the zero bracket
    CHECK(derived_bracket(x, x, Derivation::zero(su2, 1)).is_zero());

    // degree count: two degree -1 fields close
    Derivation y = Derivation::coordinate(su2, 1);
    CHECK(derived_bracket(x, y, q).degree() == -1);

    // [ad_Q X, ad_Q Y] = ad_Q([X,Y]_Q), both sides expanded independently
    PolyGen gen(su2, 5);
    for (int it = 0; it < 25; ++it) {
        Derivation rx = random_derivation(su2, -1, gen);
        Derivation ry = random_derivation(su2, -1, gen);
        Derivation lhs = commutator(commutator(q, rx), commutator(q, ry));
        Derivation rhs = commutator(q, derived_bracket(rx, ry, q));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("field strength of an abelian connection on R2") {
    GradedAlgebra forms = GradedAlgebra::make("O(R2)", {{"x", 0}, {"y", 0}, {"dx", 1}, {"dy", 1}});
    auto g = [&](int i) { return GradedPolynomial::generator(forms, i); };
    GradedPolynomial x = g(0), y = g(1), dx = g(2), dy = g(3);
    // de Rham field on the form algebra
    Derivation d(forms, 1, {dx, dy, GradedPolynomial(forms), GradedPolynomial(forms)});

    GradedAlgebra ab = GradedAlgebra::make("ab", {{"xi", 1}});
    GradedPolynomial p = x * y;     // P(x,y)
    GradedPolynomial r = x * x;     // R(x,y)
    AlgebraMorphism phi(ab, forms, {p * dx + r * dy});
    Derivation f = field_strength(phi, d, Derivation::zero(ab, 1));

    // hand expansion: F = (dR - dP) wedge part = (d_x R - d_y P) dx dy
    GradedPolynomial expected = (rational(2) * x - x) * (dx * dy); // d_x(x^2) - d_y(xy) = 2x - x
    CHECK(f.image(0) == expected);

    // chain map (flat) connection: xi -> d(h) gives F = 0
    AlgebraMorphism flat(ab, forms, {d.apply(x * y)});
    CHECK(field_strength(flat, d, Derivation::zero(ab, 1)).is_zero());
}

TEST_CASE("field strength reproduces dA + [A,A]/2 for su(2)") {
    GradedAlgebra forms =
        GradedAlgebra::make("O(R4)", {{"x1", 0}, {"x2", 0}, {"x3", 0}, {"x4", 0},
                                       {"dx1", 1}, {"dx2", 1}, {"dx3", 1}, {"dx4", 1}});
    auto g = [&](int i) { return GradedPolynomial::generator(forms, i); };
    std::vector<GradedPolynomial> d_img;
    for (int i = 0; i < 4; ++i) d_img.push_back(g(4 + i));
    for (int i = 0; i < 4; ++i) d_img.push_back(GradedPolynomial(forms));
    Derivation d(forms, 1, d_img);

    GradedAlgebra su2 = su2_algebra();
    Derivation q = su2_ce(su2);
    std::vector<GradedPolynomial> a = {g(0) * g(5), g(2) * g(7), g(0) * g(6) + g(1) * g(7)};
    AlgebraMorphism phi(su2, forms, a);
    Derivation f = field_strength(phi, d, q);

    const StructureConstants c = su2_constants();
    for (int i = 0; i < 3; ++i) {
        GradedPolynomial expected = d.apply(a[i]);
        for (int b = 0; b < 3; ++b)
            for (int cc = 0; cc < 3; ++cc) {
                Rational v = c.get(i, b, cc);
                if (v != 0) expected += rational(1, 2) * v * (a[b] * a[cc]);
            }
        CHECK(f.image(i) == expected);
    }
    // componentwise: F(xi1) = dA1 + A2 A3 - A3 A2 over 2 = dA1 + A2 A3
    CHECK(f.image(0) == d.apply(a[0]) + a[1] * a[2]);
}

TEST_CASE("variation of a section") {
    GradedAlgebra forms = GradedAlgebra::make("O(R2)", {{"x", 0}, {"y", 0}, {"dx", 1}, {"dy", 1}});
    auto g = [&](int i) { return GradedPolynomial::generator(forms, i); };
    Derivation d(forms, 1, {g(2), g(3), GradedPolynomial(forms), GradedPolynomial(forms)});
    GradedAlgebra ab = GradedAlgebra::make("ab", {{"xi", 1}});
    AlgebraMorphism phi(ab, forms, {g(0) * g(2)});

    CHECK(variation_of_section(phi, Derivation::zero(ab, 0)).is_zero());

    // delta along ad_Q(eps) with eps constant reproduces d(eps) = 0 in the
    // abelian fiber-only picture; the nontrivial case needs the bundle and is
    // exercised in the characteristic-class suite.
    Derivation eps = Derivation::coordinate(ab, 0);
    Derivation x = commutator(Derivation::zero(ab, 1), eps);
    CHECK(variation_of_section(phi, x).is_zero());
}

TEST_CASE("structure constants file format") {
    std::istringstream in("# su2 table\nC 1 2 3 1\nC 2 3 1 1\nC 3 1 2 1\n");
    StructureConstants c = StructureConstants::parse(in, 3);
    CHECK(c.get(0, 1, 2) == 1);
    CHECK(c.get(0, 2, 1) == -1); // antisymmetry completed
    CHECK(c.get(1, 0, 1) == 0);
    CHECK(jacobi_oracle(c));

    std::istringstream frac("C 1 2 3 -3/2\n");
    StructureConstants c2 = StructureConstants::parse(frac, 3);
    CHECK(c2.get(0, 1, 2) == rational(-3, 2));
}
