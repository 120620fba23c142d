#include "oracles.hpp"

#include "gq/pq.hpp"

#include <doctest.h>

using namespace gq;
using namespace gqtest;

namespace {

// p = 2 fixture: su(2)[1] with the Killing-type pairing
struct Su2Kappa {
    GradedAlgebra su2 = su2_algebra();
    TangentAlgebra t{su2};
    Derivation q = cediff(su2, su2_constants());
    GradedPolynomial omega = make_omega();
    SymplecticStructure s{t, 2, omega};

    GradedPolynomial make_omega() {
        GradedPolynomial w(t.full());
        for (int a = 0; a < 3; ++a) {
            GradedPolynomial dxi = GradedPolynomial::generator(t.full(), t.form_ordinal(a));
            w += rational(1, 2) * (dxi * dxi);
        }
        return w;
    }
    GradedPolynomial xi(int i) { return GradedPolynomial::generator(su2, i); }
};

// p = 1 fixture: T*[1]R^n with a Poisson bivector
struct Cotangent {
    GradedAlgebra alg;
    TangentAlgebra t;
    SymplecticStructure s;
    int n;

    explicit Cotangent(int n_)
        : alg(make_alg(n_)), t(alg), s(SymplecticStructure::from_pairs(t, 1, make_pairs(n_))), n(n_) {}

    static GradedAlgebra make_alg(int n) {
        std::vector<std::pair<std::string, int>> gens;
        for (int i = 0; i < n; ++i) gens.emplace_back("x" + std::to_string(i + 1), 0);
        for (int i = 0; i < n; ++i) gens.emplace_back("p" + std::to_string(i + 1), 1);
        return GradedAlgebra::make("T*[1]R" + std::to_string(n), gens);
    }
    static std::vector<std::pair<int, int>> make_pairs(int n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
        return pairs;
    }
    GradedPolynomial x(int i) const { return GradedPolynomial::generator(alg, i); }
    GradedPolynomial p(int i) const { return GradedPolynomial::generator(alg, n + i); }
};

// Schouten bracket [pi,pi]^{ijk} of an antisymmetric bivector table by brute
// force, independent of the Poisson machinery
bool poisson_jacobi_oracle(const GradedAlgebra& coords_only,
                           const std::vector<std::vector<GradedPolynomial>>& pi) {
    const int n = static_cast<int>(pi.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                GradedPolynomial acc(coords_only);
                for (int l = 0; l < n; ++l) {
                    Derivation dl = Derivation::coordinate(coords_only, l);
                    acc += pi[l][i] * dl.apply(pi[j][k]);
                    acc += pi[l][j] * dl.apply(pi[k][i]);
                    acc += pi[l][k] * dl.apply(pi[i][j]);
                }
                if (!acc.is_zero()) return false;
            }
    return true;
}

} // namespace

TEST_CASE("symplectic structure validation") {
    Su2Kappa fx;
    CHECK(fx.s.p() == 2);
    CHECK(fx.s.pairing()[0][0] == 1);
    CHECK(fx.s.pairing()[0][1] == 0);

    CHECK_THROWS_AS(SymplecticStructure(fx.t, 2, GradedPolynomial(fx.t.full())), Error);
    CHECK_THROWS_AS(SymplecticStructure(fx.t, 0, fx.omega), Error);
    CHECK_THROWS_AS(SymplecticStructure(fx.t, 1, fx.omega), Error); // wrong total degree

    // degenerate pairing
    GradedPolynomial dxi0 = GradedPolynomial::generator(fx.t.full(), fx.t.form_ordinal(0));
    CHECK_THROWS_AS(SymplecticStructure(fx.t, 2, rational(1, 2) * (dxi0 * dxi0)), Error);

    // polynomial coefficients are rejected
    GradedPolynomial bad = fx.omega +
        GradedPolynomial::generator(fx.t.full(), fx.t.fun_ordinal(0)) *
            GradedPolynomial::generator(fx.t.full(), fx.t.fun_ordinal(1)) * dxi0;
    CHECK_THROWS_AS(SymplecticStructure(fx.t, 2, bad), Error);
}

TEST_CASE("liouville form") {
    Su2Kappa fx;
    GradedPolynomial alpha = fx.s.liouville();
    GradedPolynomial expected(fx.t.full());
    for (int a = 0; a < 3; ++a)
        expected += rational(1, 2) *
                    (GradedPolynomial::generator(fx.t.full(), fx.t.fun_ordinal(a)) *
                     GradedPolynomial::generator(fx.t.full(), fx.t.form_ordinal(a)));
    CHECK(alpha == expected);
    CHECK(fx.t.d().apply(alpha) == fx.omega);

    Cotangent ct(1);
    GradedPolynomial a1 = ct.s.liouville();
    CHECK(ct.t.d().apply(a1) == ct.s.omega());
    // only the momentum leg survives iota_xi since deg(x) = 0
    CHECK(ct.t.form_order_component(a1, 1) == a1);
    Derivation iota_dx = contraction(ct.t, Derivation::coordinate(ct.alg, ct.n + 0));
    CHECK(!iota_dx.apply(a1).is_zero());
}

TEST_CASE("hamiltonian vector fields and brackets on T*[1]R") {
    Cotangent ct(1);
    // {p1, x1} = +1 with omega = d:x d:p
    Derivation xp = hamiltonian_vf(ct.s, ct.p(0));
    CHECK(xp.degree() == 0);
    CHECK(poisson_bracket(ct.s, ct.p(0), ct.x(0)) == GradedPolynomial::constant(ct.alg, 1));
    CHECK(poisson_bracket(ct.s, ct.p(0), GradedPolynomial::constant(ct.alg, 5)).is_zero());
    CHECK(hamiltonian_vf(ct.s, GradedPolynomial::constant(ct.alg, 3)).is_zero());

    // [X_h1, X_h2] = X_{h1,h2} on random homogeneous pairs
    PolyGen gen(ct.alg, 61);
    for (int it = 0; it < 25; ++it) {
        GradedPolynomial h1 = gen.random_homogeneous();
        GradedPolynomial h2 = gen.random_homogeneous();
        Derivation lhs = commutator(hamiltonian_vf(ct.s, h1), hamiltonian_vf(ct.s, h2));
        Derivation rhs = hamiltonian_vf(ct.s, poisson_bracket(ct.s, h1, h2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hamiltonian of the su(2) differential") {
    Su2Kappa fx;
    GradedPolynomial qh = hamiltonian_of_q(fx.s, fx.q);
    // Q = -(1/6) sum eps_{abc} xi^a xi^b xi^c = -xi1 xi2 xi3
    CHECK(qh == -(fx.xi(0) * fx.xi(1) * fx.xi(2)));
    CHECK(poisson_bracket(fx.s, qh, qh).is_zero());
    CHECK(hamiltonian_vf(fx.s, qh) == fx.q); // Q = X_Q

    CHECK(hamiltonian_of_q(fx.s, Derivation::zero(fx.su2, 1)).is_zero());
}

TEST_CASE("poisson bivectors on the shifted cotangent space") {
    SUBCASE("constant bivector on R^2") {
        Cotangent ct(2);
        GradedPolynomial qh = ct.p(0) * ct.p(1); // 1/2 pi^{ij} p_i p_j with pi^{12} = 1
        Derivation q = hamiltonian_vf(ct.s, qh);
        CHECK(q.degree() == 1);
        CHECK(q.image(0) == -ct.p(1));
        CHECK(q.image(1) == ct.p(0));
        CHECK(check_nilpotent(q).pass);
        CHECK(hamiltonian_of_q(ct.s, q) == qh);
    }

    SUBCASE("linear su(2) bivector on R^3 obeys the master equation iff Jacobi") {
        Cotangent ct(3);
        GradedAlgebra r3 = GradedAlgebra::make("R3", {{"x1", 0}, {"x2", 0}, {"x3", 0}});
        auto xc = [&](int i) { return GradedPolynomial::generator(r3, i); };
        std::vector<std::vector<GradedPolynomial>> pi(3, std::vector<GradedPolynomial>(3, GradedPolynomial(r3)));
        pi[0][1] = xc(2), pi[1][0] = -xc(2);
        pi[1][2] = xc(0), pi[2][1] = -xc(0);
        pi[2][0] = xc(1), pi[0][2] = -xc(1);
        CHECK(poisson_jacobi_oracle(r3, pi));

        GradedPolynomial qh(ct.alg);
        qh += ct.x(2) * ct.p(0) * ct.p(1) + ct.x(0) * ct.p(1) * ct.p(2) + ct.x(1) * ct.p(2) * ct.p(0);
        Derivation q = hamiltonian_vf(ct.s, qh);
        CHECK(check_nilpotent(q).pass);
        CHECK(hamiltonian_of_q(ct.s, q) == qh);

        // mutation [e1,e2] = e3 + e1 fails both the oracle and the master equation
        auto bad_pi = pi;
        bad_pi[0][1] = xc(2) + xc(0);
        bad_pi[1][0] = -bad_pi[0][1];
        CHECK(!poisson_jacobi_oracle(r3, bad_pi));
        GradedPolynomial bad_qh = qh + ct.x(0) * ct.p(0) * ct.p(1);
        Derivation bad_q = hamiltonian_vf(ct.s, bad_qh);
        CHECK(!check_nilpotent(bad_q).pass);
        CHECK_THROWS_AS(hamiltonian_of_q(ct.s, bad_q), Error);
        CHECK(!poisson_bracket(ct.s, bad_qh, bad_qh).is_zero());
    }
}

TEST_CASE("alpha_hat transgresses omega") {
    Su2Kappa fx;
    GradedPolynomial ah = alpha_hat(fx.s, fx.q);
    CHECK(total_differential(fx.t, fx.q).apply(ah) == fx.omega);
    // alpha_hat = alpha + (1/2) Q_ham for p = 2
    CHECK(ah == fx.s.liouville() + rational(1, 2) * fx.t.include_poly(hamiltonian_of_q(fx.s, fx.q)));

    // Q = 0: alpha_hat reduces to alpha
    Cotangent ct(2);
    Derivation zero = Derivation::zero(ct.alg, 1);
    CHECK(alpha_hat(ct.s, zero) == ct.s.liouville());

    // constant bivector on R^2
    GradedPolynomial qh = ct.p(0) * ct.p(1);
    Derivation q = hamiltonian_vf(ct.s, qh);
    GradedPolynomial ah2 = alpha_hat(ct.s, q);
    CHECK(total_differential(ct.t, q).apply(ah2) == ct.s.omega());
}

TEST_CASE("sigma-model integrand for the constant bivector") {
    Cotangent ct(2);
    GradedPolynomial qh = ct.p(0) * ct.p(1);
    Derivation q = hamiltonian_vf(ct.s, qh);

    GradedAlgebra sigma = GradedAlgebra::make("Sigma", {{"u1", 0}, {"u2", 0}});
    TangentAlgebra base(sigma);
    auto u = [&](int i) { return GradedPolynomial::generator(base.full(), base.fun_ordinal(i)); };
    auto du = [&](int i) { return GradedPolynomial::generator(base.full(), base.form_ordinal(i)); };

    // X^i arbitrary functions, A_i arbitrary one-forms
    std::vector<GradedPolynomial> images = {
        u(0) * u(0),                       // X^1
        u(1) + u(0) * u(1),                // X^2
        u(0) * du(0) + u(1) * u(1) * du(1), // A_1
        du(1),                              // A_2
    };
    AlgebraMorphism phi(ct.alg, base.full(), images);
    AkszResult r = aksz_integrand(ct.s, q, base, phi);
    CHECK(base.d().apply(r.lagrangian) == r.f_omega);

    // L = A_i dX^i + 1/2 pi^{ij}(X) A_i A_j exactly
    GradedPolynomial expected(base.full());
    for (int i = 0; i < 2; ++i) expected += images[2 + i] * base.d().apply(images[i]);
    expected += images[2] * images[3]; // pi^{12} = 1, both off-diagonal halves
    CHECK(r.lagrangian == expected);

    // the integrand formula f*(alpha_hat) = iota_{d} phi*(alpha) + (-1)^{p+1} phi*(Q_ham)
    TangentAlgebra double_tangent(base.full());
    AlgebraMorphism lifted = lift_morphism(ct.t, double_tangent, phi);
    GradedPolynomial alpha_pulled = lifted.apply(ct.s.liouville());
    Derivation iota_d = contraction(double_tangent, base.d());
    GradedPolynomial oracle =
        double_tangent.restrict_to_base(iota_d.apply(alpha_pulled)) + phi.apply(qh);
    CHECK(r.lagrangian == oracle);

    // flat field
    std::vector<GradedPolynomial> zeros(4, GradedPolynomial(base.full()));
    AkszResult flat = aksz_integrand(ct.s, q, base, AlgebraMorphism(ct.alg, base.full(), zeros));
    CHECK(flat.lagrangian.is_zero());
}

TEST_CASE("sigma-model integrand for the linear bivector") {
    Cotangent ct(3);
    GradedPolynomial qh(ct.alg);
    qh += ct.x(2) * ct.p(0) * ct.p(1) + ct.x(0) * ct.p(1) * ct.p(2) + ct.x(1) * ct.p(2) * ct.p(0);
    Derivation q = hamiltonian_vf(ct.s, qh);

    GradedAlgebra sigma = GradedAlgebra::make("Sigma", {{"u1", 0}, {"u2", 0}});
    TangentAlgebra base(sigma);
    auto u = [&](int i) { return GradedPolynomial::generator(base.full(), base.fun_ordinal(i)); };
    auto du = [&](int i) { return GradedPolynomial::generator(base.full(), base.form_ordinal(i)); };

    std::vector<GradedPolynomial> images = {
        u(0), u(1), u(0) * u(1),            // X
        du(0), du(1), u(0) * du(0) + du(1), // A
    };
    AlgebraMorphism phi(ct.alg, base.full(), images);
    AkszResult r = aksz_integrand(ct.s, q, base, phi);

    // monomial families: A_i dX^i plus 1/2 pi^{ij}(X) A_i A_j with
    // pi^{ij}(X) = eps^{ijk} X^k substituted through phi
    GradedPolynomial kinetic(base.full());
    for (int i = 0; i < 3; ++i) kinetic += images[3 + i] * base.d().apply(images[i]);
    GradedPolynomial interaction(base.full());
    interaction += images[2] * (images[3] * images[4]); // X^3 A_1 A_2
    interaction += images[0] * (images[4] * images[5]); // X^1 A_2 A_3
    interaction += images[1] * (images[5] * images[3]); // X^2 A_3 A_1
    CHECK(r.lagrangian == kinetic + interaction);
    CHECK(base.d().apply(r.lagrangian) == r.f_omega);
}
