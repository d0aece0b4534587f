#include "poisson/cohomology.hpp"

#include "poisson/errors.hpp"
#include "poisson/identities.hpp"

namespace poisson {

Matrix operator_matrix(std::size_t domain_dim, std::size_t codomain_dim,
                       const std::function<Vec(const Vec&)>& op) {
    Matrix m(codomain_dim, domain_dim);
    for (std::size_t c = 0; c < domain_dim; ++c) {
        Vec col = op(basis_vec(domain_dim, c));
        for (std::size_t r = 0; r < codomain_dim; ++r) m.at(r, c) = col[r];
    }
    return m;
}

Subspace delta0(const AlgebraStructure& a, bool two_sided) {
    std::size_t n = a.dim();
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix rj = a.right_mult(basis_vec(n, j));  // x -> x·e_j
        for (std::size_t r = 0; r < n; ++r) rows.push_back(rj.row(r));
    }
    if (two_sided)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lj = a.left_mult(basis_vec(n, j));  // x -> e_j·x
            for (std::size_t r = 0; r < n; ++r) rows.push_back(lj.row(r));
        }
    return Subspace::span(n, Matrix::from_rows(rows).nullspace());
}

Cochain2 delta1(const AlgebraStructure& a, const Matrix& f) {
    std::size_t n = a.dim();
    if (f.rows() != n || f.cols() != n)
        throw input_error("delta1: map shape does not match the algebra dimension");
    Cochain2 out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec fi = f.apply(basis_vec(n, i));
        for (std::size_t j = 0; j < n; ++j) {
            Vec fj = f.apply(basis_vec(n, j));
            Vec v = a.multiply(fi, basis_vec(n, j));
            v = vec_add(v, a.multiply(basis_vec(n, i), fj));
            v = vec_sub(v, f.apply(a.basis_product(i, j)));
            for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = v[k];
        }
    }
    return out;
}

CoboundaryMatrix delta1_matrix(const AlgebraStructure& a) {
    std::size_t n = a.dim();
    CoboundaryMatrix cb;
    cb.degree = 1;
    cb.matrix = operator_matrix(n * n, n * n * n, [&](const Vec& v) {
        Matrix f(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) f.at(r, c) = v[r * n + c];
        return delta1(a, f).flatten();
    });
    return cb;
}

Cochain3 delta2(const AlgebraStructure& a, const Cochain2& phi) {
    std::size_t n = a.dim();
    if (phi.dim() != n) throw input_error("delta2: cochain dimension mismatch");
    Cochain3 out(n);
    const Rational three(3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = vec_scale(three, phi.multiply(a.basis_product(i, j), z));
                v = vec_sub(v, vec_scale(three, phi.multiply(x, a.basis_product(j, k))));
                v = vec_sub(v, phi.multiply(a.basis_product(i, k), y));
                v = vec_sub(v, phi.multiply(a.basis_product(j, k), x));
                v = vec_add(v, phi.multiply(a.basis_product(j, i), z));
                v = vec_add(v, phi.multiply(a.basis_product(k, i), y));
                v = vec_add(v, vec_scale(three, a.multiply(phi.basis_product(i, j), z)));
                v = vec_sub(v, vec_scale(three, a.multiply(x, phi.basis_product(j, k))));
                v = vec_sub(v, a.multiply(phi.basis_product(i, k), y));
                v = vec_sub(v, a.multiply(phi.basis_product(j, k), x));
                v = vec_add(v, a.multiply(phi.basis_product(j, i), z));
                v = vec_add(v, a.multiply(phi.basis_product(k, i), y));
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

CoboundaryMatrix delta2_matrix(const AlgebraStructure& a) {
    std::size_t n = a.dim();
    CoboundaryMatrix cb;
    cb.degree = 2;
    cb.matrix = operator_matrix(n * n * n, n * n * n * n, [&](const Vec& v) {
        return delta2(a, Cochain2::unflatten(n, v)).flatten();
    });
    return cb;
}

Cochain3 delta_chevalley(const AlgebraStructure& bracket, const Cochain2& phi) {
    std::size_t n = bracket.dim();
    Cochain3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = bracket.multiply(phi.basis_product(i, j), z);
                v = vec_add(v, bracket.multiply(phi.basis_product(j, k), x));
                v = vec_add(v, bracket.multiply(phi.basis_product(k, i), y));
                v = vec_add(v, phi.multiply(bracket.basis_product(i, j), z));
                v = vec_add(v, phi.multiply(bracket.basis_product(j, k), x));
                v = vec_add(v, phi.multiply(bracket.basis_product(k, i), y));
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

Cochain3 delta_harrison(const AlgebraStructure& product, const Cochain2& phi) {
    std::size_t n = product.dim();
    Cochain3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), z = basis_vec(n, k);
                Vec v = product.multiply(phi.basis_product(i, j), z);
                v = vec_add(v, phi.multiply(product.basis_product(i, j), z));
                v = vec_sub(v, product.multiply(x, phi.basis_product(j, k)));
                v = vec_sub(v, phi.multiply(x, product.basis_product(j, k)));
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

Cochain3 mixed_product_correction(const AlgebraStructure& product, const Cochain2& phi) {
    std::size_t n = product.dim();
    Cochain3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = phi.multiply(product.basis_product(i, j), z);
                v = vec_sub(v, product.multiply(phi.basis_product(i, k), y));
                v = vec_sub(v, product.multiply(x, phi.basis_product(j, k)));
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

Cochain3 mixed_bracket_correction(const AlgebraStructure& bracket, const Cochain2& phi) {
    std::size_t n = bracket.dim();
    Cochain3 out(n);
    const Rational three(3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = vec_scale(-three, phi.multiply(x, bracket.basis_product(j, k)));
                v = vec_add(v, bracket.multiply(phi.basis_product(i, j), z));
                v = vec_sub(v, bracket.multiply(phi.basis_product(i, k), y));
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

Cochain3 delta_lichnerowicz(const AlgebraStructure& bracket, const Cochain2& phi) {
    std::size_t n = bracket.dim();
    Cochain3 out(n);
    const Rational two(2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = phi.multiply(bracket.basis_product(i, j), z);
                v = vec_add(v, phi.multiply(bracket.basis_product(j, k), x));
                v = vec_sub(v, phi.multiply(bracket.basis_product(i, k), y));
                v = vec_add(v, bracket.multiply(phi.basis_product(i, j), z));
                v = vec_add(v, bracket.multiply(phi.basis_product(j, k), x));
                v = vec_sub(v, bracket.multiply(phi.basis_product(i, k), y));
                v = vec_scale(two, v);
                for (std::size_t l = 0; l < n; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

bool is_skew_cochain(const Cochain2& phi) {
    std::size_t n = phi.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(phi.c(i, j, k) + phi.c(j, i, k)).is_zero()) return false;
    return true;
}

bool is_biderivation(const Cochain2& phi, const AlgebraStructure& product) {
    std::size_t n = phi.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec lhs = phi.multiply(x, product.basis_product(j, k));
                Vec rhs = product.multiply(phi.basis_product(i, j), z);
                rhs = vec_add(rhs, product.multiply(y, phi.basis_product(i, k)));
                if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
            }
    return true;
}

ClassicalOperators classical_operators(const PoissonPair& p, const Cochain2& phi) {
    if (phi.dim() != p.dim())
        throw input_error("classical_operators: cochain dimension mismatch");
    CheckResult lie = check_lie(p.bracket);
    if (!lie.passed) throw input_error("classical_operators: bracket fails '" + lie.identity + "'");
    CheckResult ca = check_comm_assoc(p.product);
    if (!ca.passed) throw input_error("classical_operators: product fails '" + ca.identity + "'");
    CheckResult lz = check_leibniz(p);
    if (!lz.passed) throw input_error("classical_operators: pair fails '" + lz.identity + "'");

    Cochain2 pa = phi.skew_half(), ps = phi.sym_half();
    ClassicalOperators ops{Cochain3(p.dim()), Cochain3(p.dim()), Cochain3(p.dim()),
                           Cochain3(p.dim()), Cochain3(p.dim()), Cochain3(p.dim()),
                           false,            Cochain3(p.dim())};
    ops.chevalley_skew = delta_chevalley(p.bracket, pa);
    ops.harrison_sym = delta_harrison(p.product, ps);
    ops.chevalley_sym = delta_chevalley(p.bracket, ps);
    ops.harrison_skew = delta_harrison(p.product, pa);
    ops.correction_skew = mixed_product_correction(p.product, pa);
    ops.correction_sym = mixed_bracket_correction(p.bracket, ps);
    ops.lichnerowicz_defined = is_skew_cochain(phi) && is_biderivation(phi, p.product);
    if (ops.lichnerowicz_defined) ops.lichnerowicz = delta_lichnerowicz(p.bracket, phi);
    return ops;
}

std::array<Rational, 6> delta2_decomposition_coefficients() {
    return {Rational(2), Rational(4), Rational(2), Rational(2), Rational(2), Rational(2)};
}

CohomologyReport cohomology_report(const AlgebraStructure& a) {
    CheckResult adm = check_admissible(a);
    if (!adm.passed)
        throw input_error("cohomology_report: algebra fails '" + adm.identity + "'");
    std::size_t n = a.dim();

    Matrix d1 = delta1_matrix(a).matrix;
    Matrix d2 = delta2_matrix(a).matrix;

    CohomologyReport rep;
    std::vector<Vec> z2 = d2.nullspace();
    std::vector<Vec> b2_cols;
    for (std::size_t c = 0; c < d1.cols(); ++c) {
        Vec col(d1.rows());
        for (std::size_t r = 0; r < d1.rows(); ++r) col[r] = d1.at(r, c);
        b2_cols.push_back(col);
    }
    Subspace z2_space = Subspace::span(n * n * n, z2);
    Subspace b2_space = Subspace::span(n * n * n, b2_cols);
    if (!z2_space.contains(b2_space))
        throw internal_error("cohomology_report: image of delta1 escapes the kernel of delta2");

    rep.dim_Z2 = z2_space.dim();
    rep.dim_B2 = b2_space.dim();
    rep.dim_H2 = rep.dim_Z2 - rep.dim_B2;
    for (const auto& v : z2_space.basis()) rep.z2_basis.push_back(Cochain2::unflatten(n, v));
    for (const auto& v : b2_space.basis()) rep.b2_basis.push_back(Cochain2::unflatten(n, v));

    rep.h0_basis = delta0(a);

    std::size_t dim_z1 = n * n - d1.rank();
    // Inner maps x -> (y -> x·y - y·x) span the degree-1 coboundaries.
    std::vector<Vec> inner;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = a.left_mult(basis_vec(n, i)) - a.right_mult(basis_vec(n, i));
        Vec flat(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = m.at(r, c);
        inner.push_back(flat);
    }
    Subspace b1_space = Subspace::span(n * n, inner);
    Subspace z1_space = Subspace::span(n * n, d1.nullspace());
    if (!z1_space.contains(b1_space))
        throw internal_error("cohomology_report: inner maps are not derivations");
    rep.h1_dims = {dim_z1, b1_space.dim(), dim_z1 - b1_space.dim()};
    return rep;
}

}  // namespace poisson
