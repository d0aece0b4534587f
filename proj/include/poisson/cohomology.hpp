#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/exactnum.hpp"

namespace poisson {

// Coboundary operator as a matrix over the flattened cochain spaces, so
// kernels and images reduce to exact rank computations.
struct CoboundaryMatrix {
    int degree = 1;  // 1: LinearMap -> Cochain2, 2: Cochain2 -> Cochain3
    Matrix matrix;   // shape n*n^{degree+1} x n*n^{degree}
};

// Degree-0 cohomology: elements X with X·Y = 0 for every Y. The two-sided
// flag additionally requires Y·X = 0.
Subspace delta0(const AlgebraStructure& a, bool two_sided = false);

// delta1 f (X,Y) = f(X)·Y + X·f(Y) - f(X·Y). Kernel of the matrix form is
// the derivation space Z^1.
Cochain2 delta1(const AlgebraStructure& a, const Matrix& f);
CoboundaryMatrix delta1_matrix(const AlgebraStructure& a);

// Second coboundary of the single-product theory: twelve terms, three of
// them weighted by 3, split evenly between phi-inside and phi-outside
// placements. Its kernel classifies first-order deformations.
Cochain3 delta2(const AlgebraStructure& a, const Cochain2& phi);
CoboundaryMatrix delta2_matrix(const AlgebraStructure& a);

// Classical coboundary operators of the separated bracket/product pair.
// Each takes the relevant half of the pair; callers choose which parity of
// phi to feed in.
Cochain3 delta_chevalley(const AlgebraStructure& bracket, const Cochain2& phi);
Cochain3 delta_harrison(const AlgebraStructure& product, const Cochain2& phi);
// Mixed corrections coupling one parity of phi to the other half of the
// pair; together with the operators above they assemble delta2.
Cochain3 mixed_product_correction(const AlgebraStructure& product, const Cochain2& phi);
Cochain3 mixed_bracket_correction(const AlgebraStructure& bracket, const Cochain2& phi);
// Poisson cohomology differential of a skew 2-cochain against the bracket.
// Pure evaluator: no skewness or biderivation checks.
Cochain3 delta_lichnerowicz(const AlgebraStructure& bracket, const Cochain2& phi);

bool is_skew_cochain(const Cochain2& phi);
// phi(x, y·z) = phi(x,y)·z + y·phi(x,z) over the given product, at all basis
// triples (with skewness this makes phi a derivation in each slot).
bool is_biderivation(const Cochain2& phi, const AlgebraStructure& product);

// All classical operator values of one cochain against a bracket/product
// pair, split by parity the way the delta2 decomposition wants them.
struct ClassicalOperators {
    Cochain3 chevalley_skew;    // Chevalley value of the skew part
    Cochain3 harrison_sym;      // Harrison value of the symmetric part
    Cochain3 chevalley_sym;     // Chevalley formula fed the symmetric part
    Cochain3 harrison_skew;     // Harrison formula fed the skew part
    Cochain3 correction_skew;   // product-side mixed correction of the skew part
    Cochain3 correction_sym;    // bracket-side mixed correction of the symmetric part
    bool lichnerowicz_defined = false;
    Cochain3 lichnerowicz;      // set only when phi is a skew biderivation
};

ClassicalOperators classical_operators(const PoissonPair& p, const Cochain2& phi);

// Exact coefficients of delta2 phi in terms of the six classical values, in
// the field order of ClassicalOperators. Pinned by solving the linear system
// on random cochains over algebras carrying both parities.
std::array<Rational, 6> delta2_decomposition_coefficients();

struct CohomologyReport {
    std::size_t dim_Z2 = 0, dim_B2 = 0, dim_H2 = 0;
    std::vector<Cochain2> z2_basis, b2_basis;
    Subspace h0_basis{0};                 // left annihilator
    std::array<std::size_t, 3> h1_dims{}; // dim Z^1, dim B^1, dim H^1
};

// Requires a single-product algebra; basis lists are canonical RREF rows of
// the corresponding kernel/image subspaces.
CohomologyReport cohomology_report(const AlgebraStructure& a);

// Matrix of a linear operator on a flat coordinate space, assembled column
// by column from its action on basis vectors.
Matrix operator_matrix(std::size_t domain_dim, std::size_t codomain_dim,
                       const std::function<Vec(const Vec&)>& op);

}  // namespace poisson
