#include "poisson/deformations.hpp"

#include "poisson/cohomology.hpp"
#include "poisson/errors.hpp"
#include "poisson/identities.hpp"

namespace poisson {

void FormalDeformation::validate() const {
    for (const auto& t : terms)
        if (t.dim() != base.dim())
            throw input_error("deformation term dimension does not match the base algebra");
}

AlgebraStructure FormalDeformation::at(const Rational& t) const {
    AlgebraStructure m = base;
    Rational power(1);
    for (const auto& term : terms) {
        power = power * t;
        m = m.plus(term.scaled(power));
    }
    return m;
}

Cochain3 circ(const Cochain2& phi, const Cochain2& psi) {
    std::size_t n = phi.dim();
    if (psi.dim() != n) throw input_error("circ: cochain dimensions differ");
    const Rational third(1, 3);
    Cochain3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = phi.multiply(psi.basis_product(i, j), z);
                v = vec_sub(v, phi.multiply(x, psi.basis_product(j, k)));
                v = vec_sub(v, vec_scale(third, phi.multiply(psi.basis_product(i, k), y)));
                v = vec_sub(v, vec_scale(third, phi.multiply(psi.basis_product(j, k), x)));
                v = vec_add(v, vec_scale(third, phi.multiply(psi.basis_product(j, i), z)));
                v = vec_add(v, vec_scale(third, phi.multiply(psi.basis_product(k, i), y)));
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

ObstructionReport obstructions(const FormalDeformation& d) {
    if (d.order() < 1) throw input_error("obstructions: deformation has no terms");
    d.validate();
    std::size_t n = d.dim();

    // phis[0] = base, phis[m] = φ_m.
    std::vector<Cochain2> phis;
    phis.push_back(d.base);
    for (const auto& t : d.terms) phis.push_back(t);

    ObstructionReport rep;
    for (std::size_t m = 1; m <= d.order(); ++m) {
        Cochain3 residual(n);
        for (std::size_t i = 0; i <= m; ++i) residual = residual.plus(circ(phis[i], phis[m - i]));
        // Normalized so the residual IS the t^m coefficient of the defining
        // identity's residual of mu_t; at order 1 it equals delta2(phi_1).
        residual = residual.scaled(Rational(3));
        ObstructionOrder oo;
        oo.order = m;
        oo.vanishes = residual.is_zero();
        oo.residual = std::move(residual);
        if (!oo.vanishes && rep.first_failing == 0) {
            rep.first_failing = m;
            rep.all_vanish = false;
        }
        rep.orders.push_back(std::move(oo));
    }
    return rep;
}

namespace {

// Coefficients of the truncated series inverse of f_t, so that
// g_t ∘ f_t = id through order K.
std::vector<Matrix> series_inverse(const std::vector<Matrix>& f, std::size_t upto) {
    Matrix g0(f[0].rows(), f[0].cols());
    if (!f[0].invert(g0)) throw input_error("apply_equivalence: constant term is singular");
    std::vector<Matrix> g{g0};
    Matrix zero(g0.rows(), g0.cols());
    for (std::size_t m = 1; m <= upto; ++m) {
        Matrix acc = zero;
        for (std::size_t i = 1; i <= m && i < f.size(); ++i) acc = acc + f[i] * g[m - i];
        g.push_back(zero - g0 * acc);
    }
    return g;
}

}  // namespace

FormalDeformation apply_equivalence(const FormalDeformation& d,
                                    const std::vector<Matrix>& f_terms) {
    d.validate();
    std::size_t n = d.dim();
    if (f_terms.empty()) throw input_error("apply_equivalence: empty base-change series");
    for (const auto& f : f_terms)
        if (f.rows() != n || f.cols() != n)
            throw input_error("apply_equivalence: base-change shape mismatch");

    std::size_t K = d.order();
    std::vector<Matrix> g = series_inverse(f_terms, K);

    std::vector<Cochain2> mu;
    mu.push_back(d.base);
    for (const auto& t : d.terms) mu.push_back(t);

    auto f_at = [&](std::size_t i) -> const Matrix* {
        return i < f_terms.size() ? &f_terms[i] : nullptr;
    };

    // Order-m coefficient of g_t( mu_t( f_t x, f_t y ) ).
    std::vector<Cochain2> out;
    for (std::size_t m = 0; m <= K; ++m) {
        Cochain2 coeff(n);
        for (std::size_t a = 0; a <= m; ++a)
            for (std::size_t b = 0; a + b <= m && b <= K; ++b)
                for (std::size_t c = 0; a + b + c <= m; ++c) {
                    std::size_t e = m - a - b - c;
                    const Matrix* fc = f_at(c);
                    const Matrix* fe = f_at(e);
                    if (!fc || !fe) continue;
                    for (std::size_t i = 0; i < n; ++i) {
                        Vec fx = fc->apply(basis_vec(n, i));
                        for (std::size_t j = 0; j < n; ++j) {
                            Vec fy = fe->apply(basis_vec(n, j));
                            Vec v = g[a].apply(mu[b].multiply(fx, fy));
                            for (std::size_t k = 0; k < n; ++k) coeff.c(i, j, k) += v[k];
                        }
                    }
                }
        out.push_back(std::move(coeff));
    }

    FormalDeformation res(out[0]);
    res.terms.assign(out.begin() + 1, out.end());
    return res;
}

Subspace first_order_space(const AlgebraStructure& a) {
    CheckResult adm = check_admissible(a);
    if (!adm.passed)
        throw input_error("first_order_space: algebra fails '" + adm.identity + "'");
    Matrix d2 = delta2_matrix(a).matrix;
    return Subspace::span(a.dim() * a.dim() * a.dim(), d2.nullspace());
}

}  // namespace poisson
