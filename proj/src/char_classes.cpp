#include "gq/char_classes.hpp"

#include "exact_linalg.hpp"

#include <algorithm>

namespace gq {

HolonomyGenerators::HolonomyGenerators(GradedAlgebra fiber, std::vector<Derivation> gens)
    : fiber_(std::move(fiber)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.from() != fiber_ || g.is_along())
            fail(ErrorCode::AlgebraMismatch, "holonomy generators must be vector fields on the fiber");
        if (g.degree() > -1)
            fail(ErrorCode::DegreeMismatch, "holonomy generators must have degree <= -1, got " +
                                                std::to_string(g.degree()));
    }
}

HolonomyGenerators HolonomyGenerators::coordinate_fields(const GradedAlgebra& fiber) {
    std::vector<Derivation> gens;
    for (int i = 0; i < fiber.size(); ++i)
        if (fiber.generator(i).degree >= 1) gens.push_back(Derivation::coordinate(fiber, i));
    return HolonomyGenerators(fiber, std::move(gens));
}

namespace {

// membership of d in the constant span of the candidates (images compared
// monomial by monomial)
bool in_span(const Derivation& d, const std::vector<const Derivation*>& candidates) {
    if (d.is_zero()) return true;
    std::vector<std::pair<int, Monomial>> rows;
    auto row_of = [&](int gen, const Monomial& m) {
        for (size_t r = 0; r < rows.size(); ++r)
            if (rows[r].first == gen && rows[r].second == m) return r;
        rows.emplace_back(gen, m);
        return rows.size() - 1;
    };
    for (int g = 0; g < d.from().size(); ++g)
        for (const auto& [m, c] : d.image(g).terms()) row_of(g, m);
    for (const auto* cand : candidates)
        for (int g = 0; g < d.from().size(); ++g)
            for (const auto& [m, c] : cand->image(g).terms()) row_of(g, m);

    detail::Matrix a(rows.size(), std::vector<Rational>(candidates.size(), Rational(0)));
    std::vector<Rational> b(rows.size(), Rational(0));
    for (size_t r = 0; r < rows.size(); ++r) {
        auto [g, m] = rows[r];
        for (size_t j = 0; j < candidates.size(); ++j) {
            auto it = candidates[j]->image(g).terms().find(m);
            if (it != candidates[j]->image(g).terms().end()) a[r][j] = it->second;
        }
        auto it = d.image(g).terms().find(m);
        if (it != d.image(g).terms().end()) b[r] = it->second;
    }
    return detail::solve(std::move(a), std::move(b)).has_value();
}

} // namespace

bool HolonomyGenerators::closed_under_brackets(const Derivation& q) const {
    for (const auto& x : gens_)
        for (const auto& y : gens_) {
            for (const Derivation& br : {commutator(x, y), derived_bracket(x, y, q)}) {
                std::vector<const Derivation*> same_degree;
                for (const auto& g : gens_)
                    if (g.degree() == br.degree()) same_degree.push_back(&g);
                if (!in_span(br, same_degree)) return false;
            }
        }
    return true;
}

InvariantPolynomial::InvariantPolynomial(
    int dim, int arity, const std::vector<std::pair<std::vector<int>, Rational>>& entries)
    : dim_(dim), arity_(arity) {
    for (const auto& [idx, v] : entries) {
        if (static_cast<int>(idx.size()) != arity_)
            fail(ErrorCode::NotSymmetric, "entry arity " + std::to_string(idx.size()) + ", expected " +
                                              std::to_string(arity_));
        for (int i : idx)
            if (i < 0 || i >= dim_) fail(ErrorCode::NotSymmetric, "index out of range");
        std::vector<int> key = idx;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = table_.try_emplace(key, v);
        if (!fresh && it->second != v)
            fail(ErrorCode::NotSymmetric, "conflicting values for one index multiset");
        if (it->second == 0) table_.erase(it);
    }
}

Rational InvariantPolynomial::coefficient(std::vector<int> indices) const {
    std::sort(indices.begin(), indices.end());
    auto it = table_.find(indices);
    return it == table_.end() ? Rational(0) : it->second;
}

namespace {

// all ascending tuples of the given length over [0, dim)
void sorted_tuples(int dim, int len, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int k = len - 1;
        while (k >= 0 && cur[k] == dim - 1) --k;
        if (k < 0) return;
        int v = cur[k] + 1;
        for (int j = k; j < len; ++j) cur[j] = v;
    }
}

// all tuples (with repetition, any order)
void all_tuples(int dim, int len, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int k = len - 1;
        while (k >= 0 && cur[k] == dim - 1) {
            cur[k] = 0;
            --k;
        }
        if (k < 0) return;
        ++cur[k];
    }
}

} // namespace

bool InvariantPolynomial::is_ad_invariant(const StructureConstants& c) const {
    if (c.dim() != dim_) fail(ErrorCode::DegreeMismatch, "constants dimension mismatch");
    if (arity_ == 0) return true;
    std::vector<std::vector<int>> tuples;
    sorted_tuples(dim_, arity_, tuples);
    for (int a = 0; a < dim_; ++a)
        for (const auto& tup : tuples) {
            Rational acc(0);
            for (int k = 0; k < arity_; ++k)
                for (int d = 0; d < dim_; ++d) {
                    Rational cv = c.get(d, a, tup[k]);
                    if (cv == 0) continue;
                    std::vector<int> mutated = tup;
                    mutated[k] = d;
                    acc += cv * coefficient(std::move(mutated));
                }
            if (acc != 0) return false;
        }
    return true;
}

TrivialBundle make_bundle(const GradedAlgebra& base, const Derivation& q_base,
                          const GradedAlgebra& fiber, const Derivation& q_fiber) {
    if (q_base.from() != base || q_fiber.from() != fiber)
        fail(ErrorCode::AlgebraMismatch, "bundle Q-structures must live on base and fiber");
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < base.size(); ++i)
        gens.emplace_back(base.generator(i).name, base.generator(i).degree);
    for (int i = 0; i < fiber.size(); ++i)
        gens.emplace_back(fiber.generator(i).name, fiber.generator(i).degree);
    TrivialBundle b;
    b.base = base;
    b.fiber = fiber;
    b.q_base = q_base;
    b.q_fiber = q_fiber;
    b.total = GradedAlgebra::make(base.name() + "*" + fiber.name(), gens);

    std::vector<GradedPolynomial> inc_b, inc_f;
    for (int i = 0; i < base.size(); ++i) inc_b.push_back(GradedPolynomial::generator(b.total, i));
    for (int i = 0; i < fiber.size(); ++i)
        inc_f.push_back(GradedPolynomial::generator(b.total, b.fiber_ordinal(i)));
    b.include_base = AlgebraMorphism(base, b.total, std::move(inc_b));
    b.include_fiber = AlgebraMorphism(fiber, b.total, std::move(inc_f));

    std::vector<GradedPolynomial> qt;
    for (int i = 0; i < base.size(); ++i) qt.push_back(b.include_base.apply(q_base.image(i)));
    for (int i = 0; i < fiber.size(); ++i) qt.push_back(b.include_fiber.apply(q_fiber.image(i)));
    b.q_total = Derivation(b.total, 1, std::move(qt));
    require_nilpotent(b.q_total, "total Q of '" + b.total.name() + "'");

    b.t_fiber = TangentAlgebra(fiber);
    b.t_total = TangentAlgebra(b.total);
    std::vector<GradedPolynomial> ext(b.t_fiber.full().size(), GradedPolynomial(b.t_total.full()));
    for (int i = 0; i < fiber.size(); ++i) {
        ext[b.t_fiber.fun_ordinal(i)] =
            GradedPolynomial::generator(b.t_total.full(), b.t_total.fun_ordinal(b.fiber_ordinal(i)));
        ext[b.t_fiber.form_ordinal(i)] =
            GradedPolynomial::generator(b.t_total.full(), b.t_total.form_ordinal(b.fiber_ordinal(i)));
    }
    b.extend_t_fiber = AlgebraMorphism(b.t_fiber.full(), b.t_total.full(), std::move(ext));
    return b;
}

AlgebraMorphism section(const TrivialBundle& b, const std::vector<GradedPolynomial>& fiber_images) {
    if (static_cast<int>(fiber_images.size()) != b.fiber.size())
        fail(ErrorCode::DegreeMismatch, "one image per fiber generator required");
    std::vector<GradedPolynomial> images;
    images.reserve(b.total.size());
    for (int i = 0; i < b.base.size(); ++i) images.push_back(GradedPolynomial::generator(b.base, i));
    for (const auto& a : fiber_images) images.push_back(a);
    return AlgebraMorphism(b.total, b.base, std::move(images));
}

AlgebraMorphism section_strength(const TrivialBundle& b, const AlgebraMorphism& phi) {
    return field_strength_morphism(b.t_total, phi, b.q_base, b.q_total);
}

Certificate is_basic(const TangentAlgebra& t_fiber, const GradedPolynomial& omega,
                     const HolonomyGenerators& g, const Derivation& q) {
    require_nilpotent(q, "basic-form check: Q");
    for (size_t i = 0; i < g.generators().size(); ++i) {
        const Derivation& eps = g.generators()[i];
        GradedPolynomial r1 = lie_derivative(t_fiber, eps).apply(omega);
        if (!r1.is_zero())
            return Certificate::failed("basic", "L_eps, eps = generator " + std::to_string(i + 1), r1);
        GradedPolynomial r2 = lie_derivative(t_fiber, commutator(q, eps)).apply(omega);
        if (!r2.is_zero())
            return Certificate::failed("basic", "L_[Q,eps], eps = generator " + std::to_string(i + 1), r2);
    }
    return Certificate::ok("basic");
}

GradedPolynomial invariant_to_basic_form(const TangentAlgebra& t_fiber, const InvariantPolynomial& phi) {
    if (phi.dim() != t_fiber.base().size())
        fail(ErrorCode::DegreeMismatch, "invariant table dimension does not match the fiber");
    GradedPolynomial out(t_fiber.full());
    if (phi.arity() == 0) return GradedPolynomial::constant(t_fiber.full(), phi.coefficient({}));
    std::vector<std::vector<int>> tuples;
    all_tuples(phi.dim(), phi.arity(), tuples);
    Rational factorial(1);
    for (int k = 2; k <= phi.arity(); ++k) factorial *= k;
    for (const auto& tup : tuples) {
        Rational c = phi.coefficient(tup);
        if (c == 0) continue;
        GradedPolynomial m = GradedPolynomial::constant(t_fiber.full(), c / factorial);
        for (int idx : tup)
            m = m * GradedPolynomial::generator(t_fiber.full(), t_fiber.form_ordinal(idx));
        out += m;
    }
    return out;
}

GradedPolynomial char_form(const TrivialBundle& b, const AlgebraMorphism& phi,
                           const GradedPolynomial& omega, const HolonomyGenerators& g) {
    Certificate basic = is_basic(b.t_fiber, omega, g, b.q_fiber);
    if (!basic.pass) fail(ErrorCode::NotBasic, basic.str());
    AlgebraMorphism f = section_strength(b, phi);
    GradedPolynomial out = f.apply(b.extend_t_fiber.apply(omega));
    GradedPolynomial closed = b.q_base.apply(out);
    if (!closed.is_zero())
        fail(ErrorCode::NotClosedInternal, "characteristic form is not Q-closed: " + closed.str());
    return out;
}

Certificate gauge_variation_check(const TrivialBundle& b, const AlgebraMorphism& phi,
                                  const Derivation& y, const GradedPolynomial& omega) {
    if (y.from() != b.total || y.is_along())
        fail(ErrorCode::AlgebraMismatch, "variation field must live on the total algebra");
    if (y.degree() != -1)
        fail(ErrorCode::DegreeMismatch, "variation field must have degree -1");
    for (int i = 0; i < b.base.size(); ++i)
        if (!y.image(i).is_zero())
            fail(ErrorCode::NotVertical, "variation field moves base generator '" +
                                             b.base.generator(i).name + "'");
    Derivation x = commutator(b.q_total, y);
    AlgebraMorphism f = section_strength(b, phi);
    GradedPolynomial residual =
        f.apply(lie_derivative(b.t_total, x).apply(b.extend_t_fiber.apply(omega)));
    if (residual.is_zero()) return Certificate::ok("gauge-variation");
    return Certificate::failed("gauge-variation", "delta_{ad_Q(Y)} f*(omega)", residual);
}

namespace {

struct HomotopySetup {
    GradedAlgebra base_t;        // base (x) [t]
    int t_ordinal;
    AlgebraMorphism include;     // Poly(base) -> Poly(base_t)
    Derivation q;                // Q_base extended by t -> 0
    Derivation ddt;              // d/dt
};

HomotopySetup homotopy_setup(const TrivialBundle& b) {
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < b.base.size(); ++i)
        gens.emplace_back(b.base.generator(i).name, b.base.generator(i).degree);
    gens.emplace_back("t", 0);
    HomotopySetup h;
    h.base_t = GradedAlgebra::make(b.base.name() + "[t]", gens);
    h.t_ordinal = b.base.size();
    std::vector<GradedPolynomial> inc;
    for (int i = 0; i < b.base.size(); ++i) inc.push_back(GradedPolynomial::generator(h.base_t, i));
    h.include = AlgebraMorphism(b.base, h.base_t, std::move(inc));
    std::vector<GradedPolynomial> q_img;
    for (int i = 0; i < b.base.size(); ++i) q_img.push_back(h.include.apply(b.q_base.image(i)));
    q_img.push_back(GradedPolynomial(h.base_t));
    h.q = Derivation(h.base_t, 1, std::move(q_img));
    std::vector<GradedPolynomial> dt_img(h.base_t.size(), GradedPolynomial(h.base_t));
    dt_img[h.t_ordinal] = GradedPolynomial::constant(h.base_t, 1);
    h.ddt = Derivation(h.base_t, 0, std::move(dt_img));
    return h;
}

// integral over t in [0,1] of a dt-free polynomial on base (x) [t], as a
// polynomial on the base
GradedPolynomial integrate_t(const TrivialBundle& b, const HomotopySetup& h, const GradedPolynomial& p) {
    GradedPolynomial out(b.base);
    for (const auto& [m, c] : p.terms()) {
        int t_exp = 0;
        std::vector<std::pair<int, int>> rest;
        for (auto [ord, exp] : m.factors()) {
            if (ord == h.t_ordinal)
                t_exp = exp;
            else
                rest.emplace_back(ord, exp);
        }
        out += GradedPolynomial::from_terms(
            b.base, {{Monomial(std::move(rest)), c / Rational(t_exp + 1)}});
    }
    return out;
}

} // namespace

Transgression transgress(const TrivialBundle& b, const AlgebraMorphism& phi0, const AlgebraMorphism& phi1,
                         const InvariantPolynomial& phi,
                         const std::vector<GradedPolynomial>* path,
                         const GradedAlgebra* path_algebra) {
    const int p = phi.arity();
    if (p < 1) fail(ErrorCode::NotSymmetric, "transgression needs arity >= 1");
    for (int i = 0; i < b.fiber.size(); ++i)
        if (!(b.fiber.generator(i).degree & 1))
            fail(ErrorCode::DegreeMismatch,
                 "transgression requires an odd fiber, generator '" + b.fiber.generator(i).name +
                     "' is even");
    GradedPolynomial omega = invariant_to_basic_form(b.t_fiber, phi);
    Certificate basic = is_basic(b.t_fiber, omega, HolonomyGenerators::coordinate_fields(b.fiber), b.q_fiber);
    if (!basic.pass) fail(ErrorCode::NotBasic, basic.str());

    HomotopySetup h = homotopy_setup(b);
    GradedPolynomial t = GradedPolynomial::generator(h.base_t, h.t_ordinal);
    GradedPolynomial one_minus_t = GradedPolynomial::constant(h.base_t, 1) - t;

    // interpolated gauge field as a morphism fiber -> base (x) [t]
    std::vector<GradedPolynomial> a_t;
    if (path) {
        if (!path_algebra || !(*path_algebra == h.base_t))
            fail(ErrorCode::AlgebraMismatch, "path must be given over the homotopy algebra");
        a_t = *path;
    } else {
        for (int i = 0; i < b.fiber.size(); ++i) {
            GradedPolynomial a0 = h.include.apply(phi0.image(b.fiber_ordinal(i)));
            GradedPolynomial a1 = h.include.apply(phi1.image(b.fiber_ordinal(i)));
            a_t.push_back(one_minus_t * a0 + t * a1);
        }
    }
    AlgebraMorphism phi_t(b.fiber, h.base_t, a_t);
    Derivation f_t = field_strength(phi_t, h.q, b.q_fiber);

    std::vector<GradedPolynomial> dt_a;
    for (int i = 0; i < b.fiber.size(); ++i) dt_a.push_back(h.ddt.apply(a_t[i]));

    // beta(t) = 1/(p-1)! Phi_{a...} (d/dt A^{a_1}) F^{a_2} ... F^{a_p}
    Rational factorial(1);
    for (int k = 2; k <= p - 1; ++k) factorial *= k;
    std::vector<std::vector<int>> tuples;
    all_tuples(phi.dim(), p, tuples);
    GradedPolynomial beta(h.base_t);
    for (const auto& tup : tuples) {
        Rational c = phi.coefficient(tup);
        if (c == 0) continue;
        GradedPolynomial term = Rational(c / factorial) * dt_a[tup[0]];
        for (int k = 1; k < p; ++k) {
            if (term.is_zero()) break;
            term = term * f_t.image(tup[k]);
        }
        beta += term;
    }

    Transgression out;
    out.beta = beta;
    out.primitive = integrate_t(b, h, beta);

    HolonomyGenerators hol = HolonomyGenerators::coordinate_fields(b.fiber);
    out.difference = char_form(b, phi1, omega, hol) - char_form(b, phi0, omega, hol);

    GradedPolynomial check = out.difference - b.q_base.apply(out.primitive);
    if (!check.is_zero())
        fail(ErrorCode::Internal, "transgression identity failed: " + check.str());
    return out;
}

LecomteResult lecomte_char(const StructureConstants& g, const std::vector<int>& ideal,
                           const std::vector<std::string>& quotient_names,
                           const InvariantPolynomial& phi,
                           const std::map<std::pair<int, int>, Rational>& splitting) {
    const int n = g.dim();
    std::vector<bool> in_h(n, false);
    for (int i : ideal) {
        if (i < 0 || i >= n) fail(ErrorCode::NotIdeal, "ideal index out of range");
        if (in_h[i]) fail(ErrorCode::NotIdeal, "duplicate ideal index");
        in_h[i] = true;
    }
    // [g, h] must land in h
    for (int a = 0; a < n; ++a)
        for (int i : ideal)
            for (int c = 0; c < n; ++c)
                if (!in_h[c] && g.get(c, a, i) != 0)
                    fail(ErrorCode::NotIdeal, "bracket [e" + std::to_string(a + 1) + ", e" +
                                                  std::to_string(i + 1) + "] leaves the ideal");

    std::vector<int> quot; // g-indices of the quotient basis
    for (int i = 0; i < n; ++i)
        if (!in_h[i]) quot.push_back(i);
    const int n0 = static_cast<int>(quot.size());
    if (static_cast<int>(quotient_names.size()) != n0)
        fail(ErrorCode::NotSplitting, "need " + std::to_string(n0) + " quotient generator names");
    if (phi.dim() != static_cast<int>(ideal.size()))
        fail(ErrorCode::DegreeMismatch, "invariant table must be indexed by the ideal basis");

    // sigma(e-bar_a) = e_{quot[a]} + sum_i splitting[(a,i)] e_i
    for (const auto& [key, v] : splitting) {
        auto [a, i] = key;
        if (a < 0 || a >= n0) fail(ErrorCode::NotSplitting, "splitting row out of range");
        if (i < 0 || i >= n || !in_h[i])
            fail(ErrorCode::NotSplitting, "splitting corrections must land in the ideal");
        (void)v;
    }
    auto sigma = [&](int a, int i) -> Rational {
        auto it = splitting.find({a, i});
        return it == splitting.end() ? Rational(0) : it->second;
    };

    // quotient structure constants
    StructureConstants c0(n0);
    for (int a = 0; a < n0; ++a)
        for (int b = a + 1; b < n0; ++b)
            for (int c = 0; c < n0; ++c) {
                Rational v = g.get(quot[c], quot[a], quot[b]);
                if (v != 0) c0.add(c, a, b, v);
            }

    LecomteResult out;
    std::vector<std::pair<std::string, int>> q_gens;
    for (const auto& nm : quotient_names) q_gens.emplace_back(nm, 1);
    out.quotient_shifted = GradedAlgebra::make("quotient", q_gens);
    out.q_quotient = cediff(out.quotient_shifted, c0);

    std::vector<std::pair<std::string, int>> g_gens;
    for (int i = 0; i < n; ++i) g_gens.emplace_back("z" + std::to_string(i + 1), 1);
    GradedAlgebra g1 = GradedAlgebra::make("extension", g_gens);
    Derivation qg = cediff(g1, g);

    // pullback of the splitting: xi^c -> coordinates of sigma in the quotient
    std::vector<GradedPolynomial> images(n, GradedPolynomial(out.quotient_shifted));
    for (int a = 0; a < n0; ++a) {
        images[quot[a]] += GradedPolynomial::generator(out.quotient_shifted, a);
        for (int i : ideal) {
            Rational s = sigma(a, i);
            if (s != 0) images[i] += s * GradedPolynomial::generator(out.quotient_shifted, a);
        }
    }
    AlgebraMorphism split_pull(g1, out.quotient_shifted, std::move(images));
    Derivation f = field_strength(split_pull, out.q_quotient, qg);

    // h-component along the splitting: F_h^i = F^i - sum_a sigma(a,i) F^{quot[a]}
    for (size_t k = 0; k < ideal.size(); ++k) {
        GradedPolynomial fh = f.image(ideal[k]);
        for (int a = 0; a < n0; ++a) {
            Rational s = sigma(a, ideal[k]);
            if (s != 0) fh -= s * f.image(quot[a]);
        }
        out.curvature.push_back(std::move(fh));
    }

    // cochain = Phi(F_h, ..., F_h), full symmetric evaluation
    out.cochain = GradedPolynomial(out.quotient_shifted);
    if (phi.arity() == 0) {
        out.cochain = GradedPolynomial::constant(out.quotient_shifted, phi.coefficient({}));
    } else {
        std::vector<std::vector<int>> tuples;
        all_tuples(phi.dim(), phi.arity(), tuples);
        for (const auto& tup : tuples) {
            Rational c = phi.coefficient(tup);
            if (c == 0) continue;
            GradedPolynomial term = GradedPolynomial::constant(out.quotient_shifted, c);
            for (int idx : tup) {
                term = term * out.curvature[idx];
                if (term.is_zero()) break;
            }
            out.cochain += term;
        }
    }

    // for h-invariant Phi under the full g-action the cochain must be closed
    bool invariant = true;
    if (phi.arity() > 0) {
        std::vector<std::vector<int>> tuples;
        sorted_tuples(phi.dim(), phi.arity(), tuples);
        std::vector<int> pos(n, -1);
        for (size_t k = 0; k < ideal.size(); ++k) pos[ideal[k]] = static_cast<int>(k);
        for (int a = 0; a < n && invariant; ++a)
            for (const auto& tup : tuples) {
                Rational acc(0);
                for (int k = 0; k < phi.arity(); ++k)
                    for (int j : ideal) {
                        Rational cv = g.get(j, a, ideal[tup[k]]);
                        if (cv == 0) continue;
                        std::vector<int> mutated = tup;
                        mutated[k] = pos[j];
                        acc += cv * phi.coefficient(std::move(mutated));
                    }
                if (acc != 0) {
                    invariant = false;
                    break;
                }
            }
    }
    if (invariant) {
        GradedPolynomial closed = out.q_quotient.apply(out.cochain);
        if (!closed.is_zero())
            fail(ErrorCode::Internal, "invariant cochain not closed: " + closed.str());
    }
    return out;
}

} // namespace gq
