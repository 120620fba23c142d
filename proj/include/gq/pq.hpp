#pragma once

#include "gq/tangent.hpp"

namespace gq {

/// A degree-p symplectic structure on a graded algebra: a closed form-order-2
/// polynomial with constant coefficients in Darboux-type generators and an
/// invertible pairing matrix.  L_xi omega = p omega is checked on construction.
class SymplecticStructure {
public:
    /// omega lives on t.full(); p >= 1.
    SymplecticStructure(TangentAlgebra t, int degree, GradedPolynomial omega);

    /// omega = sum_i d(first_i) d(second_i) over the given base-ordinal pairs.
    static SymplecticStructure from_pairs(const TangentAlgebra& t, int degree,
                                          const std::vector<std::pair<int, int>>& pairs);

    const GradedAlgebra& fiber() const { return t_.base(); }
    const TangentAlgebra& tangent() const { return t_; }
    int p() const { return degree_; }
    const GradedPolynomial& omega() const { return omega_; }
    const Derivation& euler() const { return euler_; }
    /// Pairing matrix  omega = 1/2 sum omega_{ab} d:q^a d:q^b  (graded symmetric).
    const std::vector<std::vector<Rational>>& pairing() const { return pairing_; }

    /// alpha = (1/p) iota_xi omega, a primitive of omega (d alpha = omega).
    GradedPolynomial liouville() const;

private:
    TangentAlgebra t_;
    int degree_ = 0;
    GradedPolynomial omega_;
    Derivation euler_;
    std::vector<std::vector<Rational>> pairing_;
    std::vector<std::vector<Rational>> solve_; // inverse of M, M_{ba} = pairing_{ab}
    friend Derivation hamiltonian_vf(const SymplecticStructure&, const GradedPolynomial&);
};

/// Unique X_h with iota_{X_h} omega = (-1)^{deg h + 1} d h; degree deg h - p.
Derivation hamiltonian_vf(const SymplecticStructure& s, const GradedPolynomial& h);

/// {h1, h2} = X_{h1}(h2); degree deg h1 + deg h2 - p.
GradedPolynomial poisson_bracket(const SymplecticStructure& s, const GradedPolynomial& h1,
                                 const GradedPolynomial& h2);

/// Hamiltonian of a compatible homological field:
///   Q of degree p+1 with iota_Q omega = (-1)^p dQ and {Q,Q} = 0, via
///   Q = p/(p+1) (-1)^p iota_Q alpha.
GradedPolynomial hamiltonian_of_q(const SymplecticStructure& s, const Derivation& q);

/// alpha_hat = alpha + ((-1)^p / p) Q_ham; satisfies omega = (d + L_Q)(alpha_hat).
GradedPolynomial alpha_hat(const SymplecticStructure& s, const Derivation& q);

struct AkszResult {
    GradedPolynomial lagrangian; // f*(alpha_hat) on the base forms
    GradedPolynomial f_omega;    // f*(omega); equals d(lagrangian)
};

/// Sigma-model integrand of a gauge field phi: Poly(S) -> Poly(Omega(Sigma)):
/// returns L = f*(alpha_hat) and certifies f*(omega) = d(L).
AkszResult aksz_integrand(const SymplecticStructure& s, const Derivation& q,
                          const TangentAlgebra& base, const AlgebraMorphism& phi);

} // namespace gq
