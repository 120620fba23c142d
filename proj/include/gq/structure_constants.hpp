#pragma once

#include "gq/derivation.hpp"

#include <iosfwd>
#include <map>
#include <tuple>

namespace gq {

/// Lie-algebra structure constants C^a_{bc}, stored antisymmetrized in (b,c).
/// Indices are 0-based internally; the text format is 1-based.
class StructureConstants {
public:
    explicit StructureConstants(int dim) : dim_(dim) {}

    int dim() const { return dim_; }

    /// Adds v to C^a_{bc} and -v to C^a_{cb}.
    void add(int a, int b, int c, const Rational& v);
    Rational get(int a, int b, int c) const;

    /// Reads lines "C a b c value" (1-based); '#' starts a comment.
    static StructureConstants parse(std::istream& in, int dim);

    /// Bracket of basis elements: [e_b, e_c] = sum_a C^a_{bc} e_a, as a
    /// coefficient vector.
    std::vector<Rational> bracket(int b, int c) const;

private:
    int dim_;
    std::map<std::tuple<int, int, int>, Rational> table_;
};

/// The Chevalley-Eilenberg differential on g[1] (all generators of degree 1,
/// one per basis element): Q(xi^a) = -1/2 C^a_{bc} xi^b xi^c.
/// Nilpotency of the result is equivalent to the Jacobi identity.
Derivation cediff(const GradedAlgebra& g1, const StructureConstants& c);

} // namespace gq
