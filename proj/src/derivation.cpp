#include "gq/derivation.hpp"

namespace gq {

AlgebraMorphism::AlgebraMorphism(GradedAlgebra from, GradedAlgebra to, std::vector<GradedPolynomial> images)
    : from_(std::move(from)), to_(std::move(to)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != from_.size())
        fail(ErrorCode::Internal, "morphism needs one image per generator of " + from_.name());
    for (int i = 0; i < from_.size(); ++i) {
        const auto& img = images_[i];
        if (img.algebra() != to_)
            fail(ErrorCode::AlgebraMismatch, "image of '" + from_.generator(i).name + "' lives over '" +
                                                 img.algebra().name() + "', expected '" + to_.name() + "'");
        if (img.is_zero()) continue;
        if (!img.is_homogeneous() || img.degree() != from_.generator(i).degree)
            fail(ErrorCode::DegreeMismatch, "morphism image of '" + from_.generator(i).name +
                                                "' must be homogeneous of degree " +
                                                std::to_string(from_.generator(i).degree) + ", got " + img.str());
    }
}

AlgebraMorphism AlgebraMorphism::identity(const GradedAlgebra& a) {
    std::vector<GradedPolynomial> images;
    images.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) images.push_back(GradedPolynomial::generator(a, i));
    return AlgebraMorphism(a, a, std::move(images));
}

GradedPolynomial AlgebraMorphism::apply(const GradedPolynomial& p) const {
    if (p.algebra() != from_)
        fail(ErrorCode::AlgebraMismatch, "morphism from '" + from_.name() + "' applied to element of '" +
                                             p.algebra().name() + "'");
    GradedPolynomial out(to_);
    for (const auto& [m, c] : p.terms()) {
        GradedPolynomial t = GradedPolynomial::constant(to_, c);
        for (auto [ord, exp] : m.factors()) {
            t = t * images_[ord].pow(exp);
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

bool AlgebraMorphism::operator==(const AlgebraMorphism& o) const {
    return from_ == o.from_ && to_ == o.to_ && images_ == o.images_;
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (f.to() != g.from())
        fail(ErrorCode::AlgebraMismatch, "composition mismatch: '" + f.to().name() + "' vs '" + g.from().name() + "'");
    std::vector<GradedPolynomial> images;
    images.reserve(f.from().size());
    for (int i = 0; i < f.from().size(); ++i) images.push_back(g.apply(f.image(i)));
    return AlgebraMorphism(f.from(), g.to(), std::move(images));
}

Derivation::Derivation(GradedAlgebra on, int degree, std::vector<GradedPolynomial> images)
    : from_(on), to_(std::move(on)), degree_(degree), images_(std::move(images)) {
    validate();
}

Derivation::Derivation(int degree, AlgebraMorphism along, std::vector<GradedPolynomial> images)
    : from_(along.from()), to_(along.to()), degree_(degree), along_(std::move(along)),
      images_(std::move(images)) {
    validate();
}

void Derivation::validate() const {
    if (static_cast<int>(images_.size()) != from_.size())
        fail(ErrorCode::Internal, "derivation needs one image per generator of " + from_.name());
    for (int i = 0; i < from_.size(); ++i) {
        const auto& img = images_[i];
        if (img.algebra() != to_)
            fail(ErrorCode::AlgebraMismatch, "image of '" + from_.generator(i).name + "' lives over '" +
                                                 img.algebra().name() + "'");
        if (img.is_zero()) continue;
        int want = from_.generator(i).degree + degree_;
        if (!img.is_homogeneous() || img.degree() != want)
            fail(ErrorCode::DegreeMismatch, "derivation image of '" + from_.generator(i).name +
                                                "' must be homogeneous of degree " + std::to_string(want) +
                                                ", got " + img.str());
    }
}

Derivation Derivation::zero(const GradedAlgebra& on, int degree) {
    return Derivation(on, degree, std::vector<GradedPolynomial>(on.size(), GradedPolynomial(on)));
}

Derivation Derivation::coordinate(const GradedAlgebra& on, int ordinal) {
    std::vector<GradedPolynomial> images(on.size(), GradedPolynomial(on));
    images[ordinal] = GradedPolynomial::constant(on, 1);
    return Derivation(on, -on.generator(ordinal).degree, std::move(images));
}

Derivation Derivation::euler(const GradedAlgebra& on) {
    std::vector<GradedPolynomial> images;
    images.reserve(on.size());
    for (int i = 0; i < on.size(); ++i)
        images.push_back(Rational(on.generator(i).degree) * GradedPolynomial::generator(on, i));
    return Derivation(on, 0, std::move(images));
}

bool Derivation::is_zero() const {
    for (const auto& img : images_)
        if (!img.is_zero()) return false;
    return true;
}

GradedPolynomial Derivation::apply(const GradedPolynomial& p) const {
    if (p.algebra() != from_)
        fail(ErrorCode::AlgebraMismatch, "derivation on '" + from_.name() + "' applied to element of '" +
                                             p.algebra().name() + "'");
    auto cover = [&](int ord) -> GradedPolynomial {
        return along_ ? along_->image(ord) : GradedPolynomial::generator(from_, ord);
    };
    const bool odd_d = degree_ & 1;
    GradedPolynomial out(to_);
    for (const auto& [m, c] : p.terms()) {
        // Leibniz over the factor groups of the monomial
        GradedPolynomial prefix = GradedPolynomial::constant(to_, c);
        int prefix_parity = 0;
        for (size_t i = 0; i < m.factors().size(); ++i) {
            auto [ord, exp] = m.factors()[i];
            if (!images_[ord].is_zero()) {
                // D(g^e) = e g^{e-1} D(g); only even g has e > 1, so no signs inside the group
                GradedPolynomial dgroup = Rational(exp) * (cover(ord).pow(exp - 1) * images_[ord]);
                GradedPolynomial term = prefix * dgroup;
                for (size_t j = i + 1; j < m.factors().size(); ++j) {
                    auto [o2, e2] = m.factors()[j];
                    term = term * cover(o2).pow(e2);
                    if (term.is_zero()) break;
                }
                if (odd_d && (prefix_parity & 1)) term = -term;
                out += term;
            }
            prefix = prefix * cover(ord).pow(exp);
            prefix_parity += exp * from_.generator(ord).degree;
            if (prefix.is_zero()) break;
        }
    }
    return out;
}

Derivation Derivation::operator-() const {
    std::vector<GradedPolynomial> images;
    images.reserve(images_.size());
    for (const auto& img : images_) images.push_back(-img);
    return along_ ? Derivation(degree_, *along_, std::move(images))
                  : Derivation(from_, degree_, std::move(images));
}

Derivation& Derivation::operator+=(const Derivation& o) {
    if (from_ != o.from_ || to_ != o.to_)
        fail(ErrorCode::AlgebraMismatch, "derivation sum across different algebras");
    if (degree_ != o.degree_)
        fail(ErrorCode::DegreeMismatch, "derivation sum of degrees " + std::to_string(degree_) + " and " +
                                            std::to_string(o.degree_));
    if (along_.has_value() != o.along_.has_value() || (along_ && *along_ != *o.along_))
        fail(ErrorCode::AlgebraMismatch, "derivation sum along different morphisms");
    for (size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
    return *this;
}

Derivation operator-(Derivation a, const Derivation& b) { return a += -b; }

Derivation operator*(const Rational& c, const Derivation& d) {
    std::vector<GradedPolynomial> images;
    images.reserve(d.from().size());
    for (int i = 0; i < d.from().size(); ++i) images.push_back(c * d.image(i));
    return d.is_along() ? Derivation(d.degree(), d.along(), std::move(images))
                        : Derivation(d.from(), d.degree(), std::move(images));
}

bool Derivation::operator==(const Derivation& o) const {
    // equality of generator images; the formal degree of an all-zero
    // derivation carries no information
    return from_ == o.from_ && to_ == o.to_ &&
           along_.has_value() == o.along_.has_value() && (!along_ || *along_ == *o.along_) &&
           images_ == o.images_;
}

Derivation commutator(const Derivation& x, const Derivation& y) {
    if (x.is_along() || y.is_along())
        fail(ErrorCode::AlgebraMismatch, "commutator of derivations along a morphism is not defined");
    if (x.from() != y.from()) fail(ErrorCode::AlgebraMismatch, "commutator across different algebras");
    const GradedAlgebra& a = x.from();
    const bool sign = (x.degree() & 1) && (y.degree() & 1);
    std::vector<GradedPolynomial> images;
    images.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) {
        GradedPolynomial v = x.apply(y.image(i));
        GradedPolynomial w = y.apply(x.image(i));
        images.push_back(sign ? v + w : v - w);
    }
    return Derivation(a, x.degree() + y.degree(), std::move(images));
}

Derivation derived_bracket(const Derivation& x, const Derivation& y, const Derivation& q) {
    return commutator(commutator(x, q), y);
}

NilpotencyResult check_nilpotent(const Derivation& q) {
    if (q.is_along()) fail(ErrorCode::AlgebraMismatch, "nilpotency check along a morphism is not defined");
    if (!(q.degree() & 1))
        fail(ErrorCode::EvenDegree, "nilpotency certificate requires odd degree, got " +
                                        std::to_string(q.degree()));
    NilpotencyResult r;
    for (int i = 0; i < q.from().size(); ++i) {
        GradedPolynomial qq = q.apply(q.image(i));
        if (!qq.is_zero()) {
            r.pass = false;
            r.witness = i;
            r.residual = qq;
            return r;
        }
    }
    r.pass = true;
    r.residual = GradedPolynomial(q.from());
    return r;
}

void require_nilpotent(const Derivation& q, const std::string& what) {
    NilpotencyResult r = check_nilpotent(q);
    if (!r.pass)
        fail(ErrorCode::NotNilpotent, what + " squares to " + r.residual.str() + " on generator '" +
                                          q.from().generator(r.witness).name + "'");
}

Derivation field_strength(const AlgebraMorphism& phi, const Derivation& q1, const Derivation& q2) {
    if (q1.from() != phi.to())
        fail(ErrorCode::AlgebraMismatch, "Q1 must live on '" + phi.to().name() + "'");
    if (q2.from() != phi.from())
        fail(ErrorCode::AlgebraMismatch, "Q2 must live on '" + phi.from().name() + "'");
    std::vector<GradedPolynomial> images;
    images.reserve(phi.from().size());
    for (int i = 0; i < phi.from().size(); ++i)
        images.push_back(q1.apply(phi.image(i)) - phi.apply(q2.image(i)));
    return Derivation(1, phi, std::move(images));
}

Derivation variation_of_section(const AlgebraMorphism& phi, const Derivation& x) {
    if (x.from() != phi.from())
        fail(ErrorCode::AlgebraMismatch, "variation field must live on '" + phi.from().name() + "'");
    std::vector<GradedPolynomial> images;
    images.reserve(phi.from().size());
    for (int i = 0; i < phi.from().size(); ++i) images.push_back(phi.apply(x.image(i)));
    return Derivation(x.degree(), phi, std::move(images));
}

} // namespace gq
