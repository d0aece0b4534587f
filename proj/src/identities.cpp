#include "poisson/identities.hpp"

#include "poisson/errors.hpp"

namespace poisson {

namespace {

CheckResult from_residual(const std::string& name, const Cochain3& r) {
    CheckResult res;
    res.identity = name;
    std::size_t n = r.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = r.value(i, j, k);
                if (!vec_is_zero(v)) {
                    res.passed = false;
                    res.witness = {i, j, k};
                    res.witness_arity = 3;
                    res.residual = v;
                    return res;
                }
            }
    return res;
}

}  // namespace

Cochain3 associator_tensor(const AlgebraStructure& a) {
    std::size_t n = a.dim();
    Cochain3 T(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = a.associator(basis_vec(n, i), basis_vec(n, j), basis_vec(n, k));
                for (std::size_t l = 0; l < n; ++l) T.t(i, j, k, l) = v[l];
            }
    return T;
}

Cochain3 admissible_residual(const AlgebraStructure& a) {
    std::size_t n = a.dim();
    Cochain3 R(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = vec_scale(Rational(3), a.associator(x, y, z));
                v = vec_sub(v, a.multiply(a.multiply(x, z), y));
                v = vec_sub(v, a.multiply(a.multiply(y, z), x));
                v = vec_add(v, a.multiply(a.multiply(y, x), z));
                v = vec_add(v, a.multiply(a.multiply(z, x), y));
                for (std::size_t l = 0; l < n; ++l) R.t(i, j, k, l) = v[l];
            }
    return R;
}

Cochain3 flexible_residual(const AlgebraStructure& a) {
    Cochain3 A = associator_tensor(a);
    Sigma3Vector v;
    v.coeff(0) = Rational(1);  // id
    v.coeff(2) = Rational(1);  // (13)
    return v.apply_to(A);
}

Cochain3 cyclic_residual(const AlgebraStructure& a) {
    Cochain3 A = associator_tensor(a);
    Sigma3Vector v;
    v.coeff(0) = Rational(1);   // id
    v.coeff(4) = Rational(1);   // (123): gives A(Y,Z,X)
    v.coeff(1) = Rational(-1);  // (12):  gives A(Y,X,Z)
    return v.apply_to(A);
}

Cochain3 sigma3_residual(const AlgebraStructure& a) {
    return Sigma3Vector::combined_relation().apply_to(associator_tensor(a));
}

CheckResult check_admissible(const AlgebraStructure& a) {
    return from_residual("admissible", admissible_residual(a));
}

CheckResult check_flexible(const AlgebraStructure& a) {
    return from_residual("flexible", flexible_residual(a));
}

CheckResult check_cyclic(const AlgebraStructure& a) {
    return from_residual("cyclic", cyclic_residual(a));
}

CheckResult check_sigma3(const AlgebraStructure& a) {
    return from_residual("sigma3", sigma3_residual(a));
}

CheckResult check_lie(const AlgebraStructure& a) {
    CheckResult res;
    res.identity = "lie";
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = vec_add(a.basis_product(i, j), a.basis_product(j, i));
            if (!vec_is_zero(v)) {
                res.passed = false;
                res.witness = {i, j, 0};
                res.witness_arity = 2;
                res.residual = v;
                return res;
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = a.multiply(a.multiply(x, y), z);
                v = vec_add(v, a.multiply(a.multiply(y, z), x));
                v = vec_add(v, a.multiply(a.multiply(z, x), y));
                if (!vec_is_zero(v)) {
                    res.passed = false;
                    res.witness = {i, j, k};
                    res.witness_arity = 3;
                    res.residual = v;
                    return res;
                }
            }
    return res;
}

CheckResult check_comm_assoc(const AlgebraStructure& a) {
    CheckResult res;
    res.identity = "comm_assoc";
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = vec_sub(a.basis_product(i, j), a.basis_product(j, i));
            if (!vec_is_zero(v)) {
                res.passed = false;
                res.witness = {i, j, 0};
                res.witness_arity = 2;
                res.residual = v;
                return res;
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = a.associator(basis_vec(n, i), basis_vec(n, j), basis_vec(n, k));
                if (!vec_is_zero(v)) {
                    res.passed = false;
                    res.witness = {i, j, k};
                    res.witness_arity = 3;
                    res.residual = v;
                    return res;
                }
            }
    return res;
}

CheckResult check_leibniz(const PoissonPair& p) {
    CheckResult res;
    res.identity = "leibniz";
    std::size_t n = p.dim();
    const AlgebraStructure& br = p.bracket;
    const AlgebraStructure& pr = p.product;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = br.multiply(x, pr.multiply(y, z));
                v = vec_sub(v, pr.multiply(br.multiply(x, y), z));
                v = vec_sub(v, pr.multiply(y, br.multiply(x, z)));
                if (!vec_is_zero(v)) {
                    res.passed = false;
                    res.witness = {i, j, k};
                    res.witness_arity = 3;
                    res.residual = v;
                    return res;
                }
            }
    return res;
}

CheckResult check_power_associative(const AlgebraStructure& a, unsigned max_total,
                                    unsigned n_random, std::uint64_t seed) {
    CheckResult res;
    res.identity = "power_associative";
    std::size_t n = a.dim();
    std::vector<Vec> samples;
    for (std::size_t i = 0; i < n; ++i) samples.push_back(basis_vec(n, i));
    Rng rng(seed);
    for (unsigned r = 0; r < n_random; ++r) samples.push_back(rng.next_vec(n));
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Vec& x = samples[s];
        std::vector<Vec> pow(max_total + 1);
        for (unsigned m = 1; m <= max_total; ++m) pow[m] = a.power(x, m);
        for (unsigned i = 1; i < max_total; ++i)
            for (unsigned j = 1; i + j <= max_total; ++j) {
                Vec v = vec_sub(a.multiply(pow[i], pow[j]), pow[i + j]);
                if (!vec_is_zero(v)) {
                    res.passed = false;
                    res.witness = {s, i, j};  // sample index, then exponents
                    res.witness_arity = 3;
                    res.residual = v;
                    return res;
                }
            }
    }
    return res;
}

const std::array<Perm3, 6>& sigma3_elements() {
    // id, (12), (13), (23), (123), (132) with (123): 0->1, 1->2, 2->0.
    static const std::array<Perm3, 6> elems = {{
        {{0, 1, 2}},
        {{1, 0, 2}},
        {{2, 1, 0}},
        {{0, 2, 1}},
        {{1, 2, 0}},
        {{2, 0, 1}},
    }};
    return elems;
}

Cochain3 Sigma3Vector::apply_to(const Cochain3& T) const {
    std::size_t n = T.dim();
    Cochain3 out(n);
    const auto& elems = sigma3_elements();
    for (std::size_t e = 0; e < 6; ++e) {
        if (c_[e].is_zero()) continue;
        const auto& img = elems[e].img;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    // (T∘Φ_σ)(x₀,x₁,x₂) = T(x_{σ(0)}, x_{σ(1)}, x_{σ(2)})
                    std::array<std::size_t, 3> arg = {i, j, k};
                    std::array<std::size_t, 3> p = {arg[img[0]], arg[img[1]], arg[img[2]]};
                    for (std::size_t l = 0; l < n; ++l)
                        out.t(i, j, k, l) += c_[e] * T.t(p[0], p[1], p[2], l);
                }
    }
    return out;
}

Sigma3Vector Sigma3Vector::admissible_annihilator() {
    Sigma3Vector v;
    v.coeff(0) = Rational(1);
    v.coeff(1) = Rational(-1);
    v.coeff(4) = Rational(1);
    return v;
}

Sigma3Vector Sigma3Vector::flexibility_annihilator() {
    Sigma3Vector v;
    v.coeff(0) = Rational(1);
    v.coeff(2) = Rational(1);
    return v;
}

Sigma3Vector Sigma3Vector::combined_relation() {
    Sigma3Vector v;
    v.coeff(0) = Rational(2);
    v.coeff(1) = Rational(1, 2);
    v.coeff(2) = Rational(1);
    v.coeff(4) = Rational(1);
    v.coeff(5) = Rational(3, 2);
    return v;
}

bool sigma3_annihilates(const Sigma3Vector& v, const AlgebraStructure& a) {
    return v.apply_to(associator_tensor(a)).is_zero();
}

Subspace annihilated_subspace(std::size_t n, const std::vector<Sigma3Vector>& vs) {
    // Conditions are linear in T; stack the matrices of T -> T∘Φ_v over the
    // flattened n⁴-dimensional space and take the kernel.
    std::size_t N = n * n * n * n;
    std::vector<Vec> rows;
    for (const auto& v : vs) {
        // column c of the operator = flatten(apply_to(basis tensor c))
        std::vector<Vec> cols;
        for (std::size_t cidx = 0; cidx < N; ++cidx) {
            Vec unit = vec_zero(N);
            unit[cidx] = Rational(1);
            cols.push_back(v.apply_to(Cochain3::unflatten(n, unit)).flatten());
        }
        for (std::size_t r = 0; r < N; ++r) {
            Vec row(N);
            for (std::size_t c = 0; c < N; ++c) row[c] = cols[c][r];
            rows.push_back(row);
        }
    }
    if (rows.empty()) return Subspace::full(N);
    return Subspace::span(N, Matrix::from_rows(rows).nullspace());
}

}  // namespace poisson
