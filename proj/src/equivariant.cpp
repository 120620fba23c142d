#include "gq/equivariant.hpp"

namespace gq {

LieAction::LieAction(StructureConstants c, GradedAlgebra base, std::vector<Derivation> rho)
    : c_(std::move(c)), base_(std::move(base)), rho_(std::move(rho)) {
    if (static_cast<int>(rho_.size()) != c_.dim())
        fail(ErrorCode::DegreeMismatch, "one vector field per basis element required");
    for (int i = 0; i < base_.size(); ++i)
        if (base_.generator(i).degree != 0)
            fail(ErrorCode::NotAffineBase, "action base must be purely of degree 0");
    for (const auto& r : rho_) {
        if (r.from() != base_ || r.is_along())
            fail(ErrorCode::AlgebraMismatch, "rho must consist of vector fields on the base");
        if (r.degree() != 0) fail(ErrorCode::DegreeMismatch, "rho must have degree 0");
    }
    for (int a = 0; a < c_.dim(); ++a)
        for (int b = a + 1; b < c_.dim(); ++b) {
            Derivation lhs = commutator(rho_[a], rho_[b]);
            Derivation rhs = Derivation::zero(base_, 0);
            for (int cc = 0; cc < c_.dim(); ++cc) {
                Rational v = c_.get(cc, a, b);
                if (v != 0) rhs += v * rho_[cc];
            }
            if (lhs != rhs)
                fail(ErrorCode::NotHomomorphism, "rho([e" + std::to_string(a + 1) + ",e" +
                                                     std::to_string(b + 1) + "]) != [rho_a, rho_b]");
        }
}

ActionAlgebroid action_algebroid(const LieAction& act, const std::vector<std::string>& xi_names) {
    if (static_cast<int>(xi_names.size()) != act.dim())
        fail(ErrorCode::DegreeMismatch, "one ghost name per basis element required");
    const GradedAlgebra& m = act.base();
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < m.size(); ++i) gens.emplace_back(m.generator(i).name, 0);
    for (const auto& nm : xi_names) gens.emplace_back(nm, 1);

    ActionAlgebroid e{act, {}, {}, {}, {}, {}, {}, {}, m.size()};
    e.e1 = GradedAlgebra::make(m.name() + "*" + "g[1]", gens);

    std::vector<GradedPolynomial> inc;
    for (int i = 0; i < m.size(); ++i) inc.push_back(GradedPolynomial::generator(e.e1, i));
    e.include_base = AlgebraMorphism(m, e.e1, std::move(inc));

    // ghost algebra view for the CE part
    std::vector<GradedPolynomial> rho_img(e.e1.size(), GradedPolynomial(e.e1));
    std::vector<GradedPolynomial> ce_img(e.e1.size(), GradedPolynomial(e.e1));
    for (int i = 0; i < m.size(); ++i) {
        GradedPolynomial acc(e.e1);
        for (int a = 0; a < act.dim(); ++a)
            acc += GradedPolynomial::generator(e.e1, e.xi_ordinal(a)) *
                   e.include_base.apply(act.rho()[a].image(i));
        rho_img[i] = acc;
    }
    Rational half(1, 2);
    for (int a = 0; a < act.dim(); ++a) {
        GradedPolynomial img(e.e1);
        for (int b = 0; b < act.dim(); ++b)
            for (int c = 0; c < act.dim(); ++c) {
                Rational v = act.constants().get(a, b, c);
                if (v == 0) continue;
                img += Rational(-half * v) * (GradedPolynomial::generator(e.e1, e.xi_ordinal(b)) *
                                              GradedPolynomial::generator(e.e1, e.xi_ordinal(c)));
            }
        ce_img[e.xi_ordinal(a)] = img;
    }
    e.rho_hat = Derivation(e.e1, 1, rho_img);
    e.q_ce = Derivation(e.e1, 1, ce_img);
    e.q = e.rho_hat + e.q_ce;
    require_nilpotent(e.q, "action algebroid Q");

    e.t = TangentAlgebra(e.e1);
    e.t_base = TangentAlgebra(m);
    return e;
}

Derivation i_epsilon(const ActionAlgebroid& e, const std::vector<Rational>& eps) {
    if (static_cast<int>(eps.size()) != e.action.dim())
        fail(ErrorCode::DegreeMismatch, "epsilon needs one coefficient per basis element");
    // constant vertical field eps^a d/dxi^a on E[1]
    std::vector<GradedPolynomial> vert(e.e1.size(), GradedPolynomial(e.e1));
    for (int a = 0; a < e.action.dim(); ++a)
        vert[e.xi_ordinal(a)] = GradedPolynomial::constant(e.e1, eps[a]);
    Derivation eps_vertical(e.e1, -1, std::move(vert));
    // rho(eps) acting on the matter coordinates only
    std::vector<GradedPolynomial> rho_eps(e.e1.size(), GradedPolynomial(e.e1));
    for (int i = 0; i < e.base_size; ++i) {
        GradedPolynomial acc(e.e1);
        for (int a = 0; a < e.action.dim(); ++a)
            if (eps[a] != 0) acc += eps[a] * e.include_base.apply(e.action.rho()[a].image(i));
        rho_eps[i] = acc;
    }
    return lie_derivative(e.t, eps_vertical) + contraction(e.t, Derivation(e.e1, 0, std::move(rho_eps)));
}

Certificate weil_cartan_conjugation(const ActionAlgebroid& e) {
    Derivation q_c = total_differential(e.t, e.q);
    Derivation q_w = total_differential(e.t, e.q_ce);
    Derivation iota_rho = contraction(e.t, e.rho_hat);
    Derivation minus_iota_rho = -iota_rho;
    for (int i = 0; i < e.t.full().size(); ++i) {
        GradedPolynomial g = GradedPolynomial::generator(e.t.full(), i);
        GradedPolynomial conjugated =
            exp_contraction(e.t, minus_iota_rho, q_c.apply(exp_contraction(e.t, iota_rho, g)));
        GradedPolynomial defect = conjugated - q_w.apply(g);
        if (!defect.is_zero())
            return Certificate::failed("weil-cartan-conjugation",
                                       "generator " + e.t.full().generator(i).name, defect);
    }
    return Certificate::ok("weil-cartan-conjugation");
}

CartanBasicResult cartan_basic_check(const ActionAlgebroid& e, const GradedPolynomial& eta) {
    if (eta.algebra() != e.t.full())
        fail(ErrorCode::AlgebraMismatch, "form must live on '" + e.t.full().name() + "'");
    CartanBasicResult out{Certificate::ok("cartan-basic"), true};
    for (const auto& [m, c] : eta.terms())
        for (auto [ord, exp] : m.factors())
            if (e.t.generator_form_order(ord) == 0 && ord / 2 >= e.base_size) out.in_cartan_span = false;
    for (int a = 0; a < e.action.dim(); ++a) {
        Derivation eps = Derivation::coordinate(e.e1, e.xi_ordinal(a));
        GradedPolynomial r1 = lie_derivative(e.t, eps).apply(eta);
        if (!r1.is_zero()) {
            out.cert = Certificate::failed("cartan-basic", "L_eps, basis " + std::to_string(a + 1), r1);
            return out;
        }
        GradedPolynomial r2 = lie_derivative(e.t, commutator(e.q, eps)).apply(eta);
        if (!r2.is_zero()) {
            out.cert =
                Certificate::failed("cartan-basic", "L_[Q,eps], basis " + std::to_string(a + 1), r2);
            return out;
        }
    }
    return out;
}

WzReport wz_gauging_check(const ActionAlgebroid& e, const TangentAlgebra& source,
                          const GradedPolynomial& h, const GradedPolynomial& h_hat,
                          const std::vector<GradedPolynomial>& x_images,
                          const std::vector<GradedPolynomial>& a_images,
                          const std::vector<GradedPolynomial>& eps) {
    const GradedAlgebra& m = e.action.base();
    for (int i = 0; i < source.base().size(); ++i)
        if (source.base().generator(i).degree != 0)
            fail(ErrorCode::NotAffineBase, "source coordinates must have degree 0");
    if (h.algebra() != e.t_base.full())
        fail(ErrorCode::AlgebraMismatch, "H must live on '" + e.t_base.full().name() + "'");
    if (static_cast<int>(x_images.size()) != m.size() ||
        static_cast<int>(a_images.size()) != e.action.dim() ||
        static_cast<int>(eps.size()) != e.action.dim())
        fail(ErrorCode::DegreeMismatch, "section or gauge parameter legs have the wrong arity");

    // invariance preconditions on H
    GradedPolynomial dh = e.t_base.d().apply(h);
    if (!dh.is_zero()) fail(ErrorCode::NotClosed, "d(H) = " + dh.str());
    for (int a = 0; a < e.action.dim(); ++a) {
        GradedPolynomial lh = lie_derivative(e.t_base, e.action.rho()[a]).apply(h);
        if (!lh.is_zero())
            fail(ErrorCode::NotInvariant, "L_rho" + std::to_string(a + 1) + " H = " + lh.str());
    }
    // the extension must be basic and closed for the gauged differential
    CartanBasicResult basic = cartan_basic_check(e, h_hat);
    if (!basic.cert.pass)
        fail(ErrorCode::NotEquivariantlyClosed, "extension is not basic: " + basic.cert.str());
    GradedPolynomial qc_hhat = total_differential(e.t, e.q).apply(h_hat);
    if (!qc_hhat.is_zero())
        fail(ErrorCode::NotEquivariantlyClosed, "Q_C(H_hat) = " + qc_hhat.str());

    WzReport out{Certificate::ok("wz-noninvariance"), Certificate::ok("wz-closed"),
                 Certificate::ok("wz-gauge-invariance"), Certificate::ok("wz-exactness"),
                 {}, {}, {}};

    // ungauged bundle over the source forms, fiber (M, 0)
    TrivialBundle b0 = make_bundle(source.full(), source.d(), m, Derivation::zero(m, 1));
    AlgebraMorphism phi0 = section(b0, x_images);
    AlgebraMorphism f0 = section_strength(b0, phi0);
    out.ungauged = f0.apply(b0.extend_t_fiber.apply(h));

    // (i) variation of the ungauged term along v = eps^a rho_a
    std::vector<GradedPolynomial> v_img(b0.total.size(), GradedPolynomial(b0.total));
    for (int i = 0; i < m.size(); ++i) {
        GradedPolynomial acc(b0.total);
        for (int a = 0; a < e.action.dim(); ++a)
            acc += b0.include_base.apply(eps[a]) * b0.include_fiber.apply(e.action.rho()[a].image(i));
        v_img[b0.fiber_ordinal(i)] = acc;
    }
    Derivation v(b0.total, 0, std::move(v_img));
    GradedPolynomial lhs = f0.apply(lie_derivative(b0.t_total, v).apply(b0.extend_t_fiber.apply(h)));

    std::vector<GradedPolynomial> x_base;
    for (const auto& xi : x_images) x_base.push_back(source.restrict_to_base(xi));
    AlgebraMorphism matter(m, source.base(), x_base);
    AlgebraMorphism matter_lift = lift_morphism(e.t_base, source, matter);
    GradedPolynomial rhs(source.full());
    for (int a = 0; a < e.action.dim(); ++a) {
        rhs += source.d().apply(eps[a]) *
               matter_lift.apply(contraction(e.t_base, e.action.rho()[a]).apply(h));
        rhs += eps[a] * matter_lift.apply(lie_derivative(e.t_base, e.action.rho()[a]).apply(h));
    }
    if (lhs != rhs)
        out.noninvariance = Certificate::failed("wz-noninvariance", "f0* L_v H vs contraction formula",
                                                lhs - rhs);

    // gauged bundle with fiber E[1]
    TrivialBundle be = make_bundle(source.full(), source.d(), e.e1, e.q);
    std::vector<GradedPolynomial> fiber_images = x_images;
    fiber_images.insert(fiber_images.end(), a_images.begin(), a_images.end());
    AlgebraMorphism phi = section(be, fiber_images);
    AlgebraMorphism f = section_strength(be, phi);
    out.gauged = f.apply(be.extend_t_fiber.apply(h_hat));

    // (ii) closedness
    GradedPolynomial d_gauged = source.d().apply(out.gauged);
    if (!d_gauged.is_zero()) out.closed = Certificate::failed("wz-closed", "d f*(H_hat)", d_gauged);

    // (iii) gauge invariance along Y_a = eps_a d/dxi^a
    for (int a = 0; a < e.action.dim(); ++a) {
        std::vector<GradedPolynomial> y_img(be.total.size(), GradedPolynomial(be.total));
        y_img[be.fiber_ordinal(e.xi_ordinal(a))] = be.include_base.apply(eps[a]);
        Certificate c = gauge_variation_check(be, phi, Derivation(be.total, -1, std::move(y_img)), h_hat);
        if (!c.pass) {
            out.gauge_invariant = c;
            out.gauge_invariant.check = "wz-gauge-invariance";
            break;
        }
    }

    // (iv) constructive exactness of the difference over the affine source
    try {
        out.primitive = poincare_primitive(source, out.gauged - out.ungauged);
    } catch (const Error& err) {
        out.exactness = {"wz-exactness", false, err.what(), std::nullopt};
    }
    return out;
}

} // namespace gq
