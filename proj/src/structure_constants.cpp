#include "gq/structure_constants.hpp"

#include <istream>
#include <sstream>
#include <string>

namespace gq {

void StructureConstants::add(int a, int b, int c, const Rational& v) {
    if (a < 0 || a >= dim_ || b < 0 || b >= dim_ || c < 0 || c >= dim_)
        fail(ErrorCode::Internal, "structure constant index out of range");
    if (b == c) {
        if (v != 0) fail(ErrorCode::NotSymmetric, "C^a_{bb} must vanish");
        return;
    }
    // set-with-completion: (a,b,c) = v also fixes (a,c,b) = -v; a clashing
    // restatement is rejected rather than accumulated
    auto put = [&](int x, int y, int z, const Rational& w) {
        auto [it, fresh] = table_.try_emplace(std::make_tuple(x, y, z), w);
        if (!fresh && it->second != w)
            fail(ErrorCode::NotSymmetric, "conflicting structure constant entries for (" +
                                              std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                                              std::to_string(z + 1) + ")");
        if (it->second == 0) table_.erase(it);
    };
    put(a, b, c, v);
    put(a, c, b, -v);
}

Rational StructureConstants::get(int a, int b, int c) const {
    auto it = table_.find(std::make_tuple(a, b, c));
    return it == table_.end() ? Rational(0) : it->second;
}

StructureConstants StructureConstants::parse(std::istream& in, int dim) {
    StructureConstants sc(dim);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "C")
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'C a b c value'");
        int a, b, c;
        std::string value;
        if (!(ls >> a >> b >> c >> value))
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'C a b c value'");
        Rational v(value);
        v.canonicalize();
        sc.add(a - 1, b - 1, c - 1, v);
    }
    return sc;
}

std::vector<Rational> StructureConstants::bracket(int b, int c) const {
    std::vector<Rational> out(dim_, Rational(0));
    for (int a = 0; a < dim_; ++a) out[a] = get(a, b, c);
    return out;
}

Derivation cediff(const GradedAlgebra& g1, const StructureConstants& c) {
    if (g1.size() != c.dim())
        fail(ErrorCode::DegreeMismatch, "algebra has " + std::to_string(g1.size()) +
                                            " generators, constants have dim " + std::to_string(c.dim()));
    for (int i = 0; i < g1.size(); ++i)
        if (g1.generator(i).degree != 1)
            fail(ErrorCode::DegreeMismatch, "g[1] generators must all have degree 1");
    std::vector<GradedPolynomial> images;
    images.reserve(g1.size());
    Rational half(1, 2);
    for (int a = 0; a < g1.size(); ++a) {
        GradedPolynomial img(g1);
        for (int b = 0; b < g1.size(); ++b)
            for (int cc = 0; cc < g1.size(); ++cc) {
                Rational v = c.get(a, b, cc);
                if (v == 0) continue;
                img += Rational(-half * v) *
                       (GradedPolynomial::generator(g1, b) * GradedPolynomial::generator(g1, cc));
            }
        images.push_back(std::move(img));
    }
    return Derivation(g1, 1, std::move(images));
}

} // namespace gq
