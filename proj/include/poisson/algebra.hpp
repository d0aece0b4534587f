#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "poisson/exactnum.hpp"

namespace poisson {

using Json = nlohmann::ordered_json;

// Structure constants of a bilinear product on Q^n:
//   e_i · e_j = Σ_k c(i,j,k) e_k.
// Doubles as a 2-cochain (bilinear map with values in the algebra); the
// flattened coordinate order is output index slowest, inputs lexicographic:
// flat[k·n² + i·n + j] = c(i,j,k).
class AlgebraStructure {
public:
    explicit AlgebraStructure(std::size_t dim) : n_(dim), c_(dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return n_; }
    Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[k * n_ * n_ + i * n_ + j]; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[k * n_ * n_ + i * n_ + j]; }

    Vec basis_product(std::size_t i, std::size_t j) const;  // e_i · e_j
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;  // (xy)z - x(yz)
    // Left-normed powers x^1 = x, x^{m+1} = x · x^m.
    Vec power(const Vec& x, unsigned m) const;

    AlgebraStructure plus(const AlgebraStructure& o) const;
    AlgebraStructure minus(const AlgebraStructure& o) const;
    AlgebraStructure scaled(const Rational& f) const;
    AlgebraStructure opposite() const;   // (x,y) -> y·x
    AlgebraStructure skew_half() const;  // (x·y - y·x)/2
    AlgebraStructure sym_half() const;   // (x·y + y·x)/2

    // Same product expressed in the basis f_i = g·e_i (columns of g are the
    // new basis vectors in old coordinates): c'(i,j,·) = g⁻¹(g e_i · g e_j).
    AlgebraStructure change_basis(const Matrix& g) const;

    bool operator==(const AlgebraStructure& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool is_zero() const;

    Vec flatten() const { return c_; }
    static AlgebraStructure unflatten(std::size_t dim, const Vec& flat);

    // Matrices of left/right multiplication by x.
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;

private:
    std::size_t n_;
    std::vector<Rational> c_;  // flat, k·n² + i·n + j
};

// A 2-cochain is the same data as a product table.
using Cochain2 = AlgebraStructure;

// Trilinear map with values in the algebra: T(e_i,e_j,e_k) = Σ_l t(i,j,k,l) e_l.
// Flat order: l·n³ + i·n² + j·n + k.
class Cochain3 {
public:
    explicit Cochain3(std::size_t dim) : n_(dim), t_(dim * dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return n_; }
    Rational& t(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return t_[l * n_ * n_ * n_ + i * n_ * n_ + j * n_ + k];
    }
    const Rational& t(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return t_[l * n_ * n_ * n_ + i * n_ * n_ + j * n_ + k];
    }

    Vec value(std::size_t i, std::size_t j, std::size_t k) const;  // T(e_i,e_j,e_k)
    Vec apply(const Vec& x, const Vec& y, const Vec& z) const;

    Cochain3 plus(const Cochain3& o) const;
    Cochain3 minus(const Cochain3& o) const;
    Cochain3 scaled(const Rational& f) const;
    bool operator==(const Cochain3& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool is_zero() const;

    Vec flatten() const { return t_; }
    static Cochain3 unflatten(std::size_t dim, const Vec& flat);

private:
    std::size_t n_;
    std::vector<Rational> t_;
};

// A Poisson structure as the (bracket, product) table pair.
struct PoissonPair {
    AlgebraStructure bracket;
    AlgebraStructure product;

    explicit PoissonPair(std::size_t dim) : bracket(dim), product(dim) {}
    PoissonPair(AlgebraStructure br, AlgebraStructure pr)
        : bracket(std::move(br)), product(std::move(pr)) {}

    std::size_t dim() const { return bracket.dim(); }
};

// JSON wire format. An algebra is
//   {"dim": n, "products": [{"i":0,"j":1,"k":2,"c":"1/2"}, ...]}
// with 0-based indices, entries sorted by (i,j,k), zero entries omitted and
// coefficients as canonical rational strings, so emit/re-read is bit-exact.
// Cochains use the key "cochain", pairs use "bracket"/"product", linear maps
// use "matrix" (dense row-major string matrix).
Json algebra_to_json(const AlgebraStructure& a);
AlgebraStructure algebra_from_json(const Json& j);
Json cochain2_to_json(const Cochain2& a);
Cochain2 cochain2_from_json(const Json& j);
Json cochain3_to_json(const Cochain3& t);
Json pair_to_json(const PoissonPair& p);
PoissonPair pair_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json subspace_to_json(const Subspace& s);

// Parses "1,0,-1/2" into a vector of rationals.
Vec vec_parse(const std::string& coords);

}  // namespace poisson
