#pragma once

#include "gq/certificate.hpp"
#include "gq/structure_constants.hpp"
#include "gq/tangent.hpp"

namespace gq {

/// A chosen set of negative-degree vector fields on the fiber.  Closure under
/// the commutator and the derived bracket is checkable but not required; the
/// basic-form checks only quantify over the generators given here.
class HolonomyGenerators {
public:
    HolonomyGenerators(GradedAlgebra fiber, std::vector<Derivation> gens);

    /// The coordinate fields d/dg for every fiber generator of positive degree.
    static HolonomyGenerators coordinate_fields(const GradedAlgebra& fiber);

    const GradedAlgebra& fiber() const { return fiber_; }
    const std::vector<Derivation>& generators() const { return gens_; }

    /// True when commutators and derived brackets of the given generators stay
    /// in their span over constants.  Advisory: callers may warn, not fail.
    bool closed_under_brackets(const Derivation& q) const;

private:
    GradedAlgebra fiber_;
    std::vector<Derivation> gens_;
};

/// Fully symmetric rational coefficient table of arity p over a fiber's
/// generator indices.  Entries are canonicalized on sorted index tuples;
/// conflicting permutations of one tuple are rejected.
class InvariantPolynomial {
public:
    InvariantPolynomial(int dim, int arity,
                        const std::vector<std::pair<std::vector<int>, Rational>>& entries);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    Rational coefficient(std::vector<int> indices) const;
    const std::map<std::vector<int>, Rational>& table() const { return table_; }

    /// Ad-invariance with respect to structure constants:
    /// sum_k sum_d C^d_{a i_k} Phi_{i_1 .. d .. i_p} = 0 for all a, tuples.
    bool is_ad_invariant(const StructureConstants& c) const;

private:
    int dim_, arity_;
    std::map<std::vector<int>, Rational> table_; // keys sorted ascending
};

/// Trivial product bundle total = base (x) fiber with Q_total = Q_base + Q_fiber.
/// Carries the tangent algebras the characteristic calculus needs.
struct TrivialBundle {
    GradedAlgebra base, fiber, total;
    Derivation q_base, q_fiber, q_total;
    TangentAlgebra t_fiber, t_total;
    AlgebraMorphism include_base;   // Poly(base)  -> Poly(total)
    AlgebraMorphism include_fiber;  // Poly(fiber) -> Poly(total)
    AlgebraMorphism extend_t_fiber; // Poly(T[1]fiber) -> Poly(T[1]total), trivial extension

    /// Ordinal of a fiber generator inside the total algebra.
    int fiber_ordinal(int i) const { return base.size() + i; }
};

TrivialBundle make_bundle(const GradedAlgebra& base, const Derivation& q_base,
                          const GradedAlgebra& fiber, const Derivation& q_fiber);

/// A gauge field of the bundle: base generators map to themselves, fiber
/// generators to the given base-algebra images.
AlgebraMorphism section(const TrivialBundle& b, const std::vector<GradedPolynomial>& fiber_images);

/// Field strength morphism Poly(T[1]total) -> Poly(base) of a section.
AlgebraMorphism section_strength(const TrivialBundle& b, const AlgebraMorphism& phi);

/// Basic form check: L_eps(omega) = 0 = L_{[Q,eps]}(omega) for all eps in G.
Certificate is_basic(const TangentAlgebra& t_fiber, const GradedPolynomial& omega,
                     const HolonomyGenerators& g, const Derivation& q);

/// (1/p!) Phi_{a_1..a_p} d:g^{a_1} ... d:g^{a_p} on T[1]fiber.
GradedPolynomial invariant_to_basic_form(const TangentAlgebra& t_fiber, const InvariantPolynomial& phi);

/// Characteristic form of a gauge field: f*(omega) on the base, with omega a
/// basic form on T[1]fiber extended trivially.  Certifies Q_base-closedness.
GradedPolynomial char_form(const TrivialBundle& b, const AlgebraMorphism& phi,
                           const GradedPolynomial& omega, const HolonomyGenerators& g);

/// Gauge variation of f*(omega) along the inner field ad_Q(Y): expands
/// f*(L_{[Q,Y]} omega') exactly; PASS iff it vanishes.
Certificate gauge_variation_check(const TrivialBundle& b, const AlgebraMorphism& phi,
                                  const Derivation& y, const GradedPolynomial& omega);

struct Transgression {
    GradedPolynomial difference; // char(omega)(1) - char(omega)(0)
    GradedPolynomial primitive;  // integral of beta(t) over [0,1]
    GradedPolynomial beta;       // beta(t) over base (x) [t]
};

/// Linear interpolation A(t) = (1-t)A0 + tA1 between two sections, with
///   beta(t) = 1/(p-1)! Phi_{a...} d/dt A^{a_1}(t) F^{a_2}(t) ... F^{a_p}(t).
/// Asserts difference = Q_base(primitive).  An explicit polynomial path in t
/// (images over base (x) [t]) may replace the linear one.
Transgression transgress(const TrivialBundle& b, const AlgebraMorphism& phi0, const AlgebraMorphism& phi1,
                         const InvariantPolynomial& phi,
                         const std::vector<GradedPolynomial>* path = nullptr,
                         const GradedAlgebra* path_algebra = nullptr);

/// Data of an exact sequence 0 -> h -> g -> g0 -> 0 presented on a basis:
/// 'ideal' lists the 0-based g-indices spanning h; the splitting sends the
/// a-th quotient generator to e_a + sum_i sigma[i][a] e_i (i over the ideal).
struct LecomteResult {
    GradedAlgebra quotient_shifted; // g0[1]
    Derivation q_quotient;          // CE differential of g0
    GradedPolynomial cochain;       // Phi(F_h, ..., F_h)
    std::vector<GradedPolynomial> curvature; // F_h components, one per ideal index
};

LecomteResult lecomte_char(const StructureConstants& g, const std::vector<int>& ideal,
                           const std::vector<std::string>& quotient_names,
                           const InvariantPolynomial& phi,
                           const std::map<std::pair<int, int>, Rational>& splitting = {});

} // namespace gq
