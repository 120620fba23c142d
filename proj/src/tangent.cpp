#include "gq/tangent.hpp"


#include <set>
namespace gq {

TangentAlgebra::TangentAlgebra(const GradedAlgebra& base) : base_(base) {
    // d:<name>, with extra d: prefixes when the base already carries such a
    // name (iterated tangents)
    std::set<std::string> used;
    for (int i = 0; i < base.size(); ++i) used.insert(base.generator(i).name);
    std::vector<std::pair<std::string, int>> gens;
    gens.reserve(2 * base.size());
    for (int i = 0; i < base.size(); ++i) {
        const auto& g = base.generator(i);
        std::string dname = "d:" + g.name;
        while (used.count(dname)) dname = "d:" + dname;
        used.insert(dname);
        gens.emplace_back(g.name, g.degree);
        gens.emplace_back(dname, g.degree + 1);
    }
    full_ = GradedAlgebra::make("T[1]" + base.name(), gens);

    std::vector<GradedPolynomial> d_images(full_.size(), GradedPolynomial(full_));
    for (int i = 0; i < base.size(); ++i)
        d_images[fun_ordinal(i)] = GradedPolynomial::generator(full_, form_ordinal(i));
    d_ = Derivation(full_, 1, std::move(d_images));

    std::vector<GradedPolynomial> inc_images;
    inc_images.reserve(base.size());
    for (int i = 0; i < base.size(); ++i)
        inc_images.push_back(GradedPolynomial::generator(full_, fun_ordinal(i)));
    include_ = AlgebraMorphism(base_, full_, std::move(inc_images));
}

TangentAlgebra shift_tangent(const GradedAlgebra& base) { return TangentAlgebra(base); }

int TangentAlgebra::form_order(const Monomial& m) const {
    int k = 0;
    for (auto [ord, exp] : m.factors()) k += exp * generator_form_order(ord);
    return k;
}

int TangentAlgebra::max_form_order(const GradedPolynomial& p) const {
    int k = 0;
    for (const auto& [m, c] : p.terms()) k = std::max(k, form_order(m));
    return k;
}

GradedPolynomial TangentAlgebra::form_order_component(const GradedPolynomial& p, int k) const {
    std::vector<std::pair<Monomial, Rational>> keep;
    for (const auto& [m, c] : p.terms())
        if (form_order(m) == k) keep.emplace_back(m, c);
    return GradedPolynomial::from_terms(full_, keep);
}

GradedPolynomial TangentAlgebra::restrict_to_base(const GradedPolynomial& p) const {
    GradedPolynomial out(base_);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::pair<int, int>> factors;
        for (auto [ord, exp] : m.factors()) {
            if (generator_form_order(ord) != 0)
                fail(ErrorCode::Internal, "restrict_to_base on a form of positive order: " + p.str());
            factors.emplace_back(ord / 2, exp);
        }
        out += GradedPolynomial::from_terms(base_, {{Monomial(std::move(factors)), c}});
    }
    return out;
}

Derivation contraction(const TangentAlgebra& t, const Derivation& x) {
    if (x.from() != t.base())
        fail(ErrorCode::AlgebraMismatch, "contraction argument must live on '" + t.base().name() + "'");
    std::vector<GradedPolynomial> images(t.full().size(), GradedPolynomial(t.full()));
    for (int i = 0; i < t.base().size(); ++i)
        images[t.form_ordinal(i)] = t.include_poly(x.image(i));
    return Derivation(t.full(), x.degree() - 1, std::move(images));
}

Derivation lie_derivative(const TangentAlgebra& t, const Derivation& x) {
    return commutator(contraction(t, x), t.d());
}

Derivation total_differential(const TangentAlgebra& t, const Derivation& q) {
    require_nilpotent(q, "total differential of '" + t.base().name() + "': Q");
    Derivation qt = t.d() + lie_derivative(t, q);
    NilpotencyResult r = check_nilpotent(qt);
    if (!r.pass)
        fail(ErrorCode::Internal, "total differential failed its own nilpotency certificate on '" +
                                      t.full().generator(r.witness).name + "'");
    return qt;
}

GradedPolynomial exp_contraction(const TangentAlgebra& t, const Derivation& v, const GradedPolynomial& p) {
    if (v.from() != t.full())
        fail(ErrorCode::AlgebraMismatch, "exp argument must live on '" + t.full().name() + "'");
    for (int i = 0; i < t.full().size(); ++i) {
        const GradedPolynomial& img = v.image(i);
        if (img.is_zero()) continue;
        if (t.max_form_order(img) >= t.generator_form_order(i))
            fail(ErrorCode::NotLocallyNilpotent,
                 "image of '" + t.full().generator(i).name + "' does not lower form order: " + img.str());
    }
    GradedPolynomial sum = p;
    GradedPolynomial power = p;
    Rational factorial(1);
    int k = 1;
    while (!power.is_zero()) {
        power = v.apply(power);
        factorial *= k;
        ++k;
        if (power.is_zero()) break;
        sum += Rational(Rational(1) / factorial) * power;
    }
    return sum;
}

AlgebraMorphism lift_morphism(const TangentAlgebra& t_from, const TangentAlgebra& t_to,
                              const AlgebraMorphism& phi) {
    if (phi.from() != t_from.base() || phi.to() != t_to.base())
        fail(ErrorCode::AlgebraMismatch, "lift expects a morphism between the two base algebras");
    std::vector<GradedPolynomial> images(t_from.full().size(), GradedPolynomial(t_to.full()));
    for (int i = 0; i < t_from.base().size(); ++i) {
        GradedPolynomial img = t_to.include_poly(phi.image(i));
        images[t_from.fun_ordinal(i)] = img;
        images[t_from.form_ordinal(i)] = t_to.d().apply(img);
    }
    return AlgebraMorphism(t_from.full(), t_to.full(), std::move(images));
}

AlgebraMorphism field_strength_morphism(const TangentAlgebra& t_from, const AlgebraMorphism& phi,
                                        const Derivation& q1, const Derivation& q2) {
    if (phi.from() != t_from.base())
        fail(ErrorCode::AlgebraMismatch, "tangent algebra does not match the morphism source");
    Derivation f = field_strength(phi, q1, q2);
    std::vector<GradedPolynomial> images(t_from.full().size(), GradedPolynomial(phi.to()));
    for (int i = 0; i < t_from.base().size(); ++i) {
        images[t_from.fun_ordinal(i)] = phi.image(i);
        images[t_from.form_ordinal(i)] = f.image(i);
    }
    return AlgebraMorphism(t_from.full(), phi.to(), std::move(images));
}

AlgebraMorphism field_strength_morphism_twist(const TangentAlgebra& t_from, const TangentAlgebra& t_to,
                                              const AlgebraMorphism& phi, const Derivation& q1,
                                              const Derivation& q2) {
    // exp(sigma iota_{Q2}) over T[1]M2
    Derivation iota_q2 = contraction(t_from, q2);
    Derivation flow = Rational(kTwistFlowSign) * iota_q2;
    AlgebraMorphism lifted = lift_morphism(t_from, t_to, phi);
    // pullback of Q1 regarded as a map M1 -> T[1]M1: q -> q, d:q -> Q1(q)
    std::vector<GradedPolynomial> q1_images(t_to.full().size(), GradedPolynomial(q1.from()));
    for (int i = 0; i < t_to.base().size(); ++i) {
        q1_images[t_to.fun_ordinal(i)] = GradedPolynomial::generator(q1.from(), i);
        q1_images[t_to.form_ordinal(i)] = q1.image(i);
    }
    AlgebraMorphism q1_pull(t_to.full(), q1.from(), std::move(q1_images));

    std::vector<GradedPolynomial> images;
    images.reserve(t_from.full().size());
    for (int i = 0; i < t_from.full().size(); ++i) {
        GradedPolynomial g = GradedPolynomial::generator(t_from.full(), i);
        images.push_back(q1_pull.apply(lifted.apply(exp_contraction(t_from, flow, g))));
    }
    return AlgebraMorphism(t_from.full(), q1.from(), std::move(images));
}

GradedPolynomial poincare_primitive(const TangentAlgebra& t, const GradedPolynomial& omega) {
    for (int i = 0; i < t.base().size(); ++i)
        if (t.base().generator(i).degree != 0)
            fail(ErrorCode::NotAffineBase, "generator '" + t.base().generator(i).name + "' has degree " +
                                               std::to_string(t.base().generator(i).degree));
    if (omega.algebra() != t.full())
        fail(ErrorCode::AlgebraMismatch, "form must live on '" + t.full().name() + "'");
    if (!t.d().apply(omega).is_zero())
        fail(ErrorCode::NotClosed, "d(omega) = " + t.d().apply(omega).str());
    GradedPolynomial order0 = t.form_order_component(omega, 0);
    if (!order0.is_zero())
        fail(ErrorCode::ConstantObstruction, "closed 0-form part " + order0.str() + " has no primitive");

    // E = sum x^i d/dx^i on coordinates; iota_E(d:x) = x
    std::vector<GradedPolynomial> e_images;
    e_images.reserve(t.base().size());
    for (int i = 0; i < t.base().size(); ++i)
        e_images.push_back(GradedPolynomial::generator(t.base(), i));
    Derivation iota_e = contraction(t, Derivation(t.base(), 0, std::move(e_images)));

    GradedPolynomial out(t.full());
    for (const auto& [m, c] : omega.terms()) {
        int k = t.form_order(m);
        int pd = 0; // polynomial degree in the coordinates
        for (auto [ord, exp] : m.factors())
            if (t.generator_form_order(ord) == 0) pd += exp;
        GradedPolynomial single = GradedPolynomial::from_terms(t.full(), {{m, c}});
        out += Rational(Rational(1) / Rational(pd + k)) * iota_e.apply(single);
    }
    return out;
}

} // namespace gq
