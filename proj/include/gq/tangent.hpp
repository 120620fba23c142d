#pragma once

#include "gq/derivation.hpp"

namespace gq {

/// The shifted tangent bundle of a graded algebra: for every base generator q
/// of degree k the full algebra carries q (degree k) and d:q (degree k+1).
/// Functions on it are the super differential forms of the base, bigraded by
/// function degree and form order.
class TangentAlgebra {
public:
    TangentAlgebra() = default;
    explicit TangentAlgebra(const GradedAlgebra& base);

    const GradedAlgebra& base() const { return base_; }
    const GradedAlgebra& full() const { return full_; }

    /// Ordinals in the full algebra; pairs are interleaved in base order.
    int fun_ordinal(int base_ordinal) const { return 2 * base_ordinal; }
    int form_ordinal(int base_ordinal) const { return 2 * base_ordinal + 1; }
    /// Form order of a full-algebra generator (0 for q, 1 for d:q).
    int generator_form_order(int full_ordinal) const { return full_ordinal & 1; }

    int form_order(const Monomial& m) const;
    /// Largest form order over the monomials of p (0 for p = 0).
    int max_form_order(const GradedPolynomial& p) const;
    GradedPolynomial form_order_component(const GradedPolynomial& p, int k) const;

    /// De Rham differential: q -> d:q, d:q -> 0.
    const Derivation& d() const { return d_; }
    /// Inclusion of base functions as form-order-zero elements.
    const AlgebraMorphism& include() const { return include_; }
    GradedPolynomial include_poly(const GradedPolynomial& p) const { return include_.apply(p); }
    /// Inverse of include on the form-order-zero subalgebra.
    GradedPolynomial restrict_to_base(const GradedPolynomial& p) const;

private:
    GradedAlgebra base_, full_;
    Derivation d_;
    AlgebraMorphism include_;
};

TangentAlgebra shift_tangent(const GradedAlgebra& base);

/// Contraction of a base vector field: iota(q) = 0, iota(d:q) = X(q),
/// extended as a derivation of degree deg(X) - 1.
Derivation contraction(const TangentAlgebra& t, const Derivation& x);

/// Super Lie derivative L_X = [iota_X, d]; degree deg(X), commutes with d.
Derivation lie_derivative(const TangentAlgebra& t, const Derivation& x);

/// Total differential d + L_Q of a homological vector field on the base.
/// Checks Q odd nilpotent; the result is certified nilpotent.
Derivation total_differential(const TangentAlgebra& t, const Derivation& q);

/// exp(V) p as a finite sum; V must strictly lower form order on every
/// generator, which makes the series terminate on polynomials.
GradedPolynomial exp_contraction(const TangentAlgebra& t, const Derivation& v, const GradedPolynomial& p);

/// Pullback of the tangent lift of a morphism: q -> phi(q), d:q -> d(phi(q)).
/// Commutes with the de Rham differentials by construction.
AlgebraMorphism lift_morphism(const TangentAlgebra& t_from, const TangentAlgebra& t_to,
                              const AlgebraMorphism& phi);

/// The field strength packaged as an algebra morphism
///   f: Poly(T[1]M2) -> Poly(M1),  f(q) = phi(q),  f(d:q) = Q1(phi(q)) - phi(Q2(q)).
/// It intertwines Q1 with the total differential d + L_{Q2} (chain property).
AlgebraMorphism field_strength_morphism(const TangentAlgebra& t_from, const AlgebraMorphism& phi,
                                        const Derivation& q1, const Derivation& q2);

/// Same morphism assembled through the flow of the contraction:
///   f = (Q1 as pullback) . lift(phi) . exp(sigma iota_{Q2}),  sigma = -1.
/// Used to pin the flow-sign convention; agrees with field_strength_morphism.
AlgebraMorphism field_strength_morphism_twist(const TangentAlgebra& t_from, const TangentAlgebra& t_to,
                                              const AlgebraMorphism& phi, const Derivation& q1,
                                              const Derivation& q2);

/// The recorded flow sign sigma of the twist construction.
constexpr int kTwistFlowSign = -1;

/// Primitive of a closed form over a purely degree-zero base, by the radial
/// homotopy K(x^a dx^I) = iota_E(x^a dx^I) / (|a| + |I|).  Exact rationals.
GradedPolynomial poincare_primitive(const TangentAlgebra& t, const GradedPolynomial& omega);

} // namespace gq
