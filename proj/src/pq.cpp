#include "gq/pq.hpp"

#include "exact_linalg.hpp"

namespace gq {

SymplecticStructure::SymplecticStructure(TangentAlgebra t, int degree, GradedPolynomial omega)
    : t_(std::move(t)), degree_(degree), omega_(std::move(omega)), euler_(Derivation::euler(t_.base())) {
    if (degree_ < 1)
        fail(ErrorCode::DegreeMismatch, "symplectic degree must be >= 1, got " + std::to_string(degree_));
    if (omega_.algebra() != t_.full())
        fail(ErrorCode::AlgebraMismatch, "omega must live on '" + t_.full().name() + "'");
    if (omega_.is_zero() || !omega_.is_homogeneous() || omega_.degree() != degree_ + 2)
        fail(ErrorCode::NotHomogeneous,
             "omega must be homogeneous of degree " + std::to_string(degree_ + 2));

    const int n = t_.base().size();
    pairing_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [m, c] : omega_.terms()) {
        const auto& f = m.factors();
        // constant Darboux coefficients: exactly two d-generator slots
        bool ok = t_.form_order(m) == 2;
        for (auto [ord, exp] : f)
            if (t_.generator_form_order(ord) == 0) ok = false;
        if (!ok)
            fail(ErrorCode::SingularPairing,
                 "omega must have constant coefficients and form order 2, offending term in " +
                     omega_.str());
        if (f.size() == 1) { // (d:q)^2, even generator
            int a = f[0].first / 2;
            pairing_[a][a] = 2 * c;
        } else {
            int a = f[0].first / 2, b = f[1].first / 2;
            int da = t_.full().generator(f[0].first).degree & 1;
            int db = t_.full().generator(f[1].first).degree & 1;
            pairing_[a][b] = c;
            pairing_[b][a] = (da && db) ? Rational(-c) : c;
        }
    }
    detail::Matrix m(n, std::vector<Rational>(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) m[b][a] = pairing_[a][b];
    auto inv = detail::invert(std::move(m));
    if (!inv) fail(ErrorCode::SingularPairing, "pairing matrix is singular");
    solve_ = *inv;

    GradedPolynomial d_omega = t_.d().apply(omega_);
    if (!d_omega.is_zero()) fail(ErrorCode::NotClosed, "d(omega) = " + d_omega.str());
    GradedPolynomial scaled = lie_derivative(t_, euler_).apply(omega_) - Rational(degree_) * omega_;
    if (!scaled.is_zero())
        fail(ErrorCode::DegreeMismatch, "L_xi omega != p omega, defect " + scaled.str());
}

SymplecticStructure SymplecticStructure::from_pairs(const TangentAlgebra& t, int degree,
                                                    const std::vector<std::pair<int, int>>& pairs) {
    GradedPolynomial omega(t.full());
    for (auto [a, b] : pairs)
        omega += GradedPolynomial::generator(t.full(), t.form_ordinal(a)) *
                 GradedPolynomial::generator(t.full(), t.form_ordinal(b));
    return SymplecticStructure(t, degree, omega);
}

GradedPolynomial SymplecticStructure::liouville() const {
    GradedPolynomial alpha =
        Rational(Rational(1) / Rational(degree_)) * contraction(t_, euler_).apply(omega_);
    GradedPolynomial defect = t_.d().apply(alpha) - omega_;
    if (!defect.is_zero()) fail(ErrorCode::Internal, "d(alpha) != omega: " + defect.str());
    return alpha;
}

namespace {

// decomposition p = sum_b w^b d:q^b with the d-generator commuted to the end
std::vector<GradedPolynomial> dq_last_components(const TangentAlgebra& t, const GradedPolynomial& p) {
    const int n = t.base().size();
    std::vector<GradedPolynomial> w(n, GradedPolynomial(t.full()));
    for (const auto& [m, c] : p.terms()) {
        if (t.form_order(m) != 1)
            fail(ErrorCode::Internal, "expected a form of order 1, got " + p.str());
        std::vector<std::pair<int, int>> rest;
        int which = -1;
        int trailing_parity = 0;
        for (auto [ord, exp] : m.factors()) {
            if (t.generator_form_order(ord) == 1) {
                which = ord / 2;
                continue;
            }
            rest.emplace_back(ord, exp);
            if (which >= 0) trailing_parity ^= (t.full().generator(ord).degree & 1) * (exp & 1);
        }
        int dq_parity = t.full().generator(t.form_ordinal(which)).degree & 1;
        Rational coeff = (dq_parity && trailing_parity) ? Rational(-c) : c;
        w[which] += GradedPolynomial::from_terms(t.full(), {{Monomial(std::move(rest)), coeff}});
    }
    return w;
}

} // namespace

Derivation hamiltonian_vf(const SymplecticStructure& s, const GradedPolynomial& h) {
    const TangentAlgebra& t = s.tangent();
    if (h.algebra() != t.base())
        fail(ErrorCode::AlgebraMismatch, "hamiltonian must live on '" + t.base().name() + "'");
    if (h.is_zero()) return Derivation::zero(t.base(), -s.p());
    if (!h.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "hamiltonian must be homogeneous: " + h.str());
    const int q = h.degree();
    const int n = t.base().size();

    GradedPolynomial dh = t.d().apply(t.include_poly(h));
    std::vector<GradedPolynomial> w = dq_last_components(t, dh);
    if (q & 1) { /* (-1)^{q+1} = +1 */
    } else {
        for (auto& c : w) c = -c;
    }
    std::vector<GradedPolynomial> images;
    images.reserve(n);
    for (int a = 0; a < n; ++a) {
        GradedPolynomial u(t.full());
        for (int b = 0; b < n; ++b)
            if (s.solve_[a][b] != 0) u += s.solve_[a][b] * w[b];
        images.push_back(t.restrict_to_base(u));
    }
    Derivation x(t.base(), q - s.p(), std::move(images));

    GradedPolynomial back = contraction(t, x).apply(s.omega());
    GradedPolynomial rhs = t.d().apply(t.include_poly(h));
    if (!(q & 1)) rhs = -rhs;
    if (back != rhs)
        fail(ErrorCode::Internal, "hamiltonian solve back-substitution failed for " + h.str());
    return x;
}

GradedPolynomial poisson_bracket(const SymplecticStructure& s, const GradedPolynomial& h1,
                                 const GradedPolynomial& h2) {
    GradedPolynomial out(s.fiber());
    for (const auto& [deg, part] : h1.homogeneous_parts()) out += hamiltonian_vf(s, part).apply(h2);
    return out;
}

GradedPolynomial hamiltonian_of_q(const SymplecticStructure& s, const Derivation& q) {
    const TangentAlgebra& t = s.tangent();
    if (q.from() != t.base()) fail(ErrorCode::AlgebraMismatch, "Q must live on the fiber");
    if (q.degree() != 1) fail(ErrorCode::DegreeMismatch, "Q must have degree 1");
    require_nilpotent(q, "hamiltonian lift: Q");
    GradedPolynomial lq = lie_derivative(t, q).apply(s.omega());
    if (!lq.is_zero()) fail(ErrorCode::NotCompatible, "L_Q omega = " + lq.str());

    const int p = s.p();
    Rational scale = Rational(p, p + 1);
    if (p & 1) scale = -scale;
    GradedPolynomial qh =
        scale * t.restrict_to_base(contraction(t, q).apply(s.liouville()));

    GradedPolynomial lhs = contraction(t, q).apply(s.omega());
    GradedPolynomial rhs = t.d().apply(t.include_poly(qh));
    if (p & 1) rhs = -rhs;
    if (lhs != rhs)
        fail(ErrorCode::Internal, "iota_Q omega != (-1)^p dQ for the computed hamiltonian");

    GradedPolynomial master = poisson_bracket(s, qh, qh);
    if (!master.is_zero())
        fail(ErrorCode::MasterEquationFailed, "{Q,Q} = " + master.str());
    return qh;
}

GradedPolynomial alpha_hat(const SymplecticStructure& s, const Derivation& q) {
    const TangentAlgebra& t = s.tangent();
    GradedPolynomial qh = hamiltonian_of_q(s, q);
    Rational scale = Rational(1, s.p());
    if (s.p() & 1) scale = -scale;
    GradedPolynomial ah = s.liouville() + scale * t.include_poly(qh);
    GradedPolynomial defect = s.omega() - total_differential(t, q).apply(ah);
    if (!defect.is_zero())
        fail(ErrorCode::Internal, "omega != Q_T(alpha_hat), defect " + defect.str());
    return ah;
}

AkszResult aksz_integrand(const SymplecticStructure& s, const Derivation& q,
                          const TangentAlgebra& base, const AlgebraMorphism& phi) {
    for (int i = 0; i < base.base().size(); ++i)
        if (base.base().generator(i).degree != 0)
            fail(ErrorCode::BaseNotTangent, "source coordinates must have degree 0");
    if (phi.from() != s.fiber() || phi.to() != base.full())
        fail(ErrorCode::BaseNotTangent,
             "gauge field must map the fiber algebra into the base forms");

    AlgebraMorphism f = field_strength_morphism(s.tangent(), phi, base.d(), q);
    AkszResult out;
    out.lagrangian = f.apply(alpha_hat(s, q));
    out.f_omega = f.apply(s.omega());
    GradedPolynomial defect = out.f_omega - base.d().apply(out.lagrangian);
    if (!defect.is_zero())
        fail(ErrorCode::Internal, "f*(omega) != d f*(alpha_hat), defect " + defect.str());
    return out;
}

} // namespace gq
