#pragma once

#include "gq/char_classes.hpp"

namespace gq {

/// A Lie algebra action on a purely even polynomial base: one degree-zero
/// vector field per basis element, with the homomorphism property
/// rho([e_a,e_b]) = [rho_a, rho_b] checked on construction.
class LieAction {
public:
    LieAction(StructureConstants c, GradedAlgebra base, std::vector<Derivation> rho);

    const StructureConstants& constants() const { return c_; }
    const GradedAlgebra& base() const { return base_; }
    const std::vector<Derivation>& rho() const { return rho_; }
    int dim() const { return c_.dim(); }

private:
    StructureConstants c_;
    GradedAlgebra base_;
    std::vector<Derivation> rho_;
};

/// The action Lie algebroid E[1] = M (x) g[1] with Q = rho + Q_CE, plus the
/// split pieces and tangent algebras the Weil/Cartan comparison uses.
struct ActionAlgebroid {
    LieAction action;
    GradedAlgebra e1;
    Derivation q;        // xi^a rho_a + Q_CE, certified nilpotent
    Derivation q_ce;     // CE part, trivially extended to E[1]
    Derivation rho_hat;  // degree-1 part: x -> xi^a rho_a(x)
    TangentAlgebra t;       // T[1]E[1]
    TangentAlgebra t_base;  // T[1]M
    AlgebraMorphism include_base; // Poly(M) -> Poly(E[1])

    int base_size = 0;
    int xi_ordinal(int a) const { return base_size + a; }
};

ActionAlgebroid action_algebroid(const LieAction& act, const std::vector<std::string>& xi_names);

/// Weil-model generator i_eps = L_eps + iota_{rho(eps)}, degree -1 on T[1]E[1].
Derivation i_epsilon(const ActionAlgebroid& e, const std::vector<Rational>& eps);

/// Verifies Q_W = exp(-iota_rho) Q_C exp(iota_rho) on every generator, where
/// Q_C = d + L_Q and Q_W = d + L_{Q_CE}.
Certificate weil_cartan_conjugation(const ActionAlgebroid& e);

struct CartanBasicResult {
    Certificate cert;     // L_eps and L_{[Q,eps]} invariance over the fiber fields
    bool in_cartan_span;  // no bare xi factor, i.e. eta in S(g*) (x) Omega(M)
};

CartanBasicResult cartan_basic_check(const ActionAlgebroid& e, const GradedPolynomial& eta);

struct WzReport {
    Certificate noninvariance;   // variation of the ungauged term matches the
                                 // d(eps)-contraction formula exactly
    Certificate closed;          // d(f* H_hat) = 0
    Certificate gauge_invariant; // variation of f* H_hat vanishes
    Certificate exactness;       // primitive of f* H_hat - f0* H found
    GradedPolynomial gauged;     // f* H_hat
    GradedPolynomial ungauged;   // f0* H
    GradedPolynomial primitive;

    bool all_pass() const {
        return noninvariance.pass && closed.pass && gauge_invariant.pass && exactness.pass;
    }
};

/// Gauging of a closed invariant form H on M over the source forms Omega(Sigma):
/// h on T[1]M, h_hat its equivariantly closed extension on T[1]E[1],
/// x_images/a_images the matter and gauge legs of the section, eps the gauge
/// parameter functions (one degree-zero element of Omega(Sigma) per basis index).
WzReport wz_gauging_check(const ActionAlgebroid& e, const TangentAlgebra& source,
                          const GradedPolynomial& h, const GradedPolynomial& h_hat,
                          const std::vector<GradedPolynomial>& x_images,
                          const std::vector<GradedPolynomial>& a_images,
                          const std::vector<GradedPolynomial>& eps);

} // namespace gq
