#pragma once

#include "gq/error.hpp"
#include "gq/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gq {

/// A generator of a free graded-commutative algebra.  Parity (degree mod 2)
/// decides commutation behaviour; the ordinal is the canonical sort position.
struct GeneratorSymbol {
    std::string name;
    int degree = 0;
    int ordinal = 0;
};

/// Handle to an immutable free Z>=0-graded commutative polynomial algebra.
/// Identity (not structure) decides equality: polynomials of two distinct
/// algebras never mix, even if the generator lists coincide.
class GradedAlgebra {
public:
    GradedAlgebra() = default;

    static GradedAlgebra make(std::string name, const std::vector<std::pair<std::string, int>>& gens);

    bool valid() const { return impl_ != nullptr; }
    const std::string& name() const;
    int size() const;
    const GeneratorSymbol& generator(int ordinal) const;
    /// Ordinal of a generator by name, -1 if absent.
    int find(std::string_view name) const;

    bool operator==(const GradedAlgebra& o) const { return impl_ == o.impl_; }
    bool operator!=(const GradedAlgebra& o) const { return impl_ != o.impl_; }

private:
    struct Impl {
        std::string name;
        std::vector<GeneratorSymbol> generators;
        std::map<std::string, int, std::less<>> index;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Canonical-form monomial: factors (generator ordinal, exponent >= 1) with
/// strictly increasing ordinals; odd generators carry exponent exactly 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {}

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    int degree(const GradedAlgebra& a) const;
    /// Degree mod 2.
    int parity(const GradedAlgebra& a) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator<(const Monomial& o) const { return factors_ < o.factors_; }

private:
    std::vector<std::pair<int, int>> factors_;
};

/// Element of a free graded-commutative algebra in canonical form: a finite
/// map monomial -> nonzero rational.  Two values are equal iff the maps are.
class GradedPolynomial {
public:
    GradedPolynomial() = default;
    explicit GradedPolynomial(GradedAlgebra alg) : alg_(std::move(alg)) {}

    static GradedPolynomial zero(const GradedAlgebra& a) { return GradedPolynomial(a); }
    static GradedPolynomial constant(const GradedAlgebra& a, const Rational& c);
    /// The generator with the given ordinal, as a polynomial.
    static GradedPolynomial generator(const GradedAlgebra& a, int ordinal);
    /// Normalizing constructor: accumulates coefficients, drops zeros.
    static GradedPolynomial from_terms(const GradedAlgebra& a,
                                       const std::vector<std::pair<Monomial, Rational>>& terms);

    const GradedAlgebra& algebra() const { return alg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const;
    /// Degree of a homogeneous polynomial; 0 for the zero polynomial.
    int degree() const;
    GradedPolynomial homogeneous_component(int k) const;
    /// Splits into (degree, component) pairs, ascending.
    std::vector<std::pair<int, GradedPolynomial>> homogeneous_parts() const;

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    GradedPolynomial pow(int n) const;

    bool operator==(const GradedPolynomial& o) const;
    bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

    /// Canonical text: terms sorted by (degree, lexicographic on flattened
    /// ordinals), coefficients as p/q, factors joined by '*', e.g.
    /// "-1/2*xi1*xi2".  This is the golden-file contract.
    std::string str() const;

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    friend GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p);

private:
    void insert_term(const Monomial& m, const Rational& c);

    GradedAlgebra alg_;
    std::map<Monomial, Rational> terms_;
};

inline void require_same_algebra(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (a.algebra() != b.algebra())
        fail(ErrorCode::AlgebraMismatch,
             "operands live over '" + a.algebra().name() + "' and '" + b.algebra().name() + "'");
}

} // namespace gq
