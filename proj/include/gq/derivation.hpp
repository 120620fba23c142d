#pragma once

#include "gq/algebra.hpp"

#include <optional>
#include <vector>

namespace gq {

/// Degree-preserving algebra homomorphism Poly(from) -> Poly(to), determined
/// by generator images.  This is the pullback of a map of graded manifolds
/// written in the only direction the kernel ever needs.
class AlgebraMorphism {
public:
    AlgebraMorphism() = default;
    /// images[i] is the image of from.generator(i); each must be homogeneous
    /// of the generator's degree (or zero).
    AlgebraMorphism(GradedAlgebra from, GradedAlgebra to, std::vector<GradedPolynomial> images);

    static AlgebraMorphism identity(const GradedAlgebra& a);

    const GradedAlgebra& from() const { return from_; }
    const GradedAlgebra& to() const { return to_; }
    const GradedPolynomial& image(int ordinal) const { return images_.at(ordinal); }

    /// Substitution homomorphism: phi(pq) = phi(p)phi(q).
    GradedPolynomial apply(const GradedPolynomial& p) const;

    bool operator==(const AlgebraMorphism& o) const;
    bool operator!=(const AlgebraMorphism& o) const { return !(*this == o); }

private:
    GradedAlgebra from_, to_;
    std::vector<GradedPolynomial> images_;
};

/// g . f as maps of polynomials: first f, then g.
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

/// Ordinal-wise identification of two algebras with the same generator
/// degrees; used to move values between identically shaped algebras.
AlgebraMorphism transport(const GradedAlgebra& from, const GradedAlgebra& to);

/// Graded derivation of degree k, stored by generator images.  Ordinary
/// derivations act on one algebra; a derivation along a morphism phi maps
/// Poly(from) -> Poly(to) by the twisted Leibniz rule
///   D(gh) = D(g) phi(h) + (-1)^{k deg g} phi(g) D(h).
class Derivation {
public:
    Derivation() = default;
    Derivation(GradedAlgebra on, int degree, std::vector<GradedPolynomial> images);
    Derivation(int degree, AlgebraMorphism along, std::vector<GradedPolynomial> images);

    static Derivation zero(const GradedAlgebra& on, int degree);
    /// Coordinate derivation d/d(gen): the named generator maps to 1.
    /// Degree is -deg(gen).
    static Derivation coordinate(const GradedAlgebra& on, int ordinal);
    /// The grading (Euler) field: g -> deg(g)*g.
    static Derivation euler(const GradedAlgebra& on);

    const GradedAlgebra& from() const { return from_; }
    const GradedAlgebra& to() const { return to_; }
    int degree() const { return degree_; }
    bool is_along() const { return along_.has_value(); }
    const AlgebraMorphism& along() const { return *along_; }
    const GradedPolynomial& image(int ordinal) const { return images_.at(ordinal); }
    bool is_zero() const;

    GradedPolynomial apply(const GradedPolynomial& p) const;

    Derivation operator-() const;
    Derivation& operator+=(const Derivation& o);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b);
    friend Derivation operator*(const Rational& c, const Derivation& d);

    /// Equality of generator images; the kernel-wide equality contract.
    bool operator==(const Derivation& o) const;
    bool operator!=(const Derivation& o) const { return !(*this == o); }

private:
    void validate() const;

    GradedAlgebra from_, to_;
    int degree_ = 0;
    std::optional<AlgebraMorphism> along_;
    std::vector<GradedPolynomial> images_;
};

/// Graded commutator [X,Y] = XY - (-1)^{|X||Y|} YX, itself a derivation.
Derivation commutator(const Derivation& x, const Derivation& y);

/// The Loday derived bracket [X,Y]_Q = [[X,Q],Y].
Derivation derived_bracket(const Derivation& x, const Derivation& y, const Derivation& q);

/// Outcome of a generator-level nilpotency check of an odd derivation.
struct NilpotencyResult {
    bool pass = false;
    int witness = -1;                      // offending generator ordinal
    GradedPolynomial residual;             // Q(Q(witness))
};

/// PASS iff Q(Q(g)) = 0 for every generator; sufficient since Q^2 = [Q,Q]/2
/// is itself a derivation.  Rejects even-degree Q.
NilpotencyResult check_nilpotent(const Derivation& q);

/// Throws NotNilpotent unless check_nilpotent passes.
void require_nilpotent(const Derivation& q, const std::string& what);

/// Field strength of a degree-preserving morphism between Q-algebras:
/// the degree-one derivation along phi with images F(g) = Q1(phi(g)) - phi(Q2(g)).
/// phi maps Poly(M2) -> Poly(M1); Q1 lives on M1 (phi.to), Q2 on M2 (phi.from).
Derivation field_strength(const AlgebraMorphism& phi, const Derivation& q1, const Derivation& q2);

/// Variation of a section along a degree-zero vector field X on the target:
/// the derivation along phi with images phi(X(g)).
Derivation variation_of_section(const AlgebraMorphism& phi, const Derivation& x);

} // namespace gq
