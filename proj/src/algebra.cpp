#include "gq/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace gq {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::NegativeDegree: return "NegativeDegree";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::Inhomogeneous: return "Inhomogeneous";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::EvenDegree: return "EvenDegree";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::NotLocallyNilpotent: return "NotLocallyNilpotent";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotAffineBase: return "NotAffineBase";
        case ErrorCode::ConstantObstruction: return "ConstantObstruction";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotBasic: return "NotBasic";
        case ErrorCode::NotClosedInternal: return "NotClosedInternal";
        case ErrorCode::NotVertical: return "NotVertical";
        case ErrorCode::NotIdeal: return "NotIdeal";
        case ErrorCode::NotSplitting: return "NotSplitting";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::SingularPairing: return "SingularPairing";
        case ErrorCode::NotCompatible: return "NotCompatible";
        case ErrorCode::MasterEquationFailed: return "MasterEquationFailed";
        case ErrorCode::BaseNotTangent: return "BaseNotTangent";
        case ErrorCode::NotHomomorphism: return "NotHomomorphism";
        case ErrorCode::ConjugationFailed: return "ConjugationFailed";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::NotEquivariantlyClosed: return "NotEquivariantlyClosed";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

GradedAlgebra GradedAlgebra::make(std::string name, const std::vector<std::pair<std::string, int>>& gens) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->generators.reserve(gens.size());
    for (const auto& [gname, deg] : gens) {
        if (deg < 0)
            fail(ErrorCode::NegativeDegree, "generator '" + gname + "' has degree " + std::to_string(deg));
        if (impl->index.count(gname))
            fail(ErrorCode::DuplicateName, "generator '" + gname + "' declared twice");
        int ord = static_cast<int>(impl->generators.size());
        impl->generators.push_back({gname, deg, ord});
        impl->index.emplace(gname, ord);
    }
    GradedAlgebra a;
    a.impl_ = std::move(impl);
    return a;
}

const std::string& GradedAlgebra::name() const { return impl_->name; }
int GradedAlgebra::size() const { return static_cast<int>(impl_->generators.size()); }
const GeneratorSymbol& GradedAlgebra::generator(int ordinal) const { return impl_->generators.at(ordinal); }

int GradedAlgebra::find(std::string_view name) const {
    auto it = impl_->index.find(name);
    return it == impl_->index.end() ? -1 : it->second;
}

int Monomial::degree(const GradedAlgebra& a) const {
    int d = 0;
    for (auto [ord, exp] : factors_) d += exp * a.generator(ord).degree;
    return d;
}

int Monomial::parity(const GradedAlgebra& a) const { return degree(a) & 1; }

namespace {

// Product of canonical monomials.  Each factor of b jumps left past the
// remaining factors of a; every odd-odd transposition flips the sign.
// Returns false when an odd generator squares to zero.
bool mul_monomials(const GradedAlgebra& alg, const Monomial& a, const Monomial& b,
                   Monomial& out, bool& negative) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::vector<std::pair<int, int>> merged;
    merged.reserve(fa.size() + fb.size());

    // parity weight of fa[i..) counted with multiplicity
    std::vector<int> suffix(fa.size() + 1, 0);
    for (int i = static_cast<int>(fa.size()) - 1; i >= 0; --i) {
        int par = (alg.generator(fa[i].first).degree & 1) ? (fa[i].second & 1) : 0;
        suffix[i] = suffix[i + 1] ^ par;
    }

    bool neg = false;
    size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            merged.push_back(fa[i]);
            ++i;
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            const auto& g = alg.generator(fb[j].first);
            if ((g.degree & 1) && (fb[j].second & 1) && suffix[i]) neg = !neg;
            merged.push_back(fb[j]);
            ++j;
        } else { // same generator
            const auto& g = alg.generator(fa[i].first);
            if (g.degree & 1) return false; // odd square vanishes
            merged.emplace_back(fa[i].first, fa[i].second + fb[j].second);
            ++i;
            ++j;
        }
    }
    out = Monomial(std::move(merged));
    negative = neg;
    return true;
}

} // namespace

GradedPolynomial GradedPolynomial::constant(const GradedAlgebra& a, const Rational& c) {
    GradedPolynomial p(a);
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

GradedPolynomial GradedPolynomial::generator(const GradedAlgebra& a, int ordinal) {
    GradedPolynomial p(a);
    p.terms_.emplace(Monomial({{ordinal, 1}}), Rational(1));
    return p;
}

GradedPolynomial GradedPolynomial::from_terms(const GradedAlgebra& a,
                                              const std::vector<std::pair<Monomial, Rational>>& terms) {
    GradedPolynomial p(a);
    for (const auto& [m, c] : terms) p.insert_term(m, c);
    return p;
}

void GradedPolynomial::insert_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool GradedPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree(alg_);
    for (const auto& [m, c] : terms_)
        if (m.degree(alg_) != d) return false;
    return true;
}

int GradedPolynomial::degree() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) fail(ErrorCode::Inhomogeneous, "degree of inhomogeneous polynomial: " + str());
    return terms_.begin()->first.degree(alg_);
}

GradedPolynomial GradedPolynomial::homogeneous_component(int k) const {
    GradedPolynomial out(alg_);
    for (const auto& [m, c] : terms_)
        if (m.degree(alg_) == k) out.terms_.emplace(m, c);
    return out;
}

std::vector<std::pair<int, GradedPolynomial>> GradedPolynomial::homogeneous_parts() const {
    std::map<int, GradedPolynomial> parts;
    for (const auto& [m, c] : terms_) {
        auto [it, fresh] = parts.try_emplace(m.degree(alg_), GradedPolynomial(alg_));
        it->second.terms_.emplace(m, c);
    }
    return {parts.begin(), parts.end()};
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out(alg_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    require_same_algebra(*this, o);
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    require_same_algebra(*this, o);
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    require_same_algebra(a, b);
    GradedPolynomial out(a.alg_);
    Monomial m;
    bool neg = false;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (!mul_monomials(a.alg_, ma, mb, m, neg)) continue;
            out.insert_term(m, neg ? Rational(-ca * cb) : Rational(ca * cb));
        }
    return out;
}

GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p) {
    GradedPolynomial out(p.alg_);
    if (c == 0) return out;
    for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
    return out;
}

GradedPolynomial GradedPolynomial::pow(int n) const {
    GradedPolynomial out = constant(alg_, 1);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

bool GradedPolynomial::operator==(const GradedPolynomial& o) const {
    return alg_ == o.alg_ && terms_ == o.terms_;
}

std::string GradedPolynomial::str() const {
    if (terms_.empty()) return "0";

    // sort keys by (degree, flattened ordinal sequence)
    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto flat = [](const Monomial& m) {
        std::vector<int> v;
        for (auto [ord, exp] : m.factors())
            for (int k = 0; k < exp; ++k) v.push_back(ord);
        return v;
    };
    std::sort(order.begin(), order.end(), [&](auto* x, auto* y) {
        int dx = x->first.degree(alg_), dy = y->first.degree(alg_);
        if (dx != dy) return dx < dy;
        return flat(x->first) < flat(y->first);
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const Rational& c = t->second;
        bool neg = c < 0;
        Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool coeff_shown = t->first.empty() || ac != 1;
        if (coeff_shown) os << ac.get_str();
        bool need_star = coeff_shown && !t->first.empty();
        for (auto [ord, exp] : t->first.factors()) {
            if (need_star) os << "*";
            os << alg_.generator(ord).name;
            if (exp > 1) os << "^" << exp;
            need_star = true;
        }
    }
    return os.str();
}

} // namespace gq
