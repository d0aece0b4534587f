#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/identities.hpp"

namespace poisson {

// Halving a compatible product into its bracket and commutative parts.
// Validates the input (and the resulting pair) unless `skip_validation`.
PoissonPair split(const AlgebraStructure& a, bool skip_validation = false);

// The inverse: single product = bracket + commutative product. Validates the
// pair (skew/Jacobi, comm/assoc, Leibniz) unless `skip_validation`.
AlgebraStructure combine(const PoissonPair& p, bool skip_validation = false);

// {x : bracket(x, e_j) = 0 for all j}.
Subspace lie_center(const PoissonPair& p);

bool is_idempotent(const AlgebraStructure& a, const Vec& e);

// Nonzero idempotents found by (a) basis vectors, (b) a small coefficient
// grid over {0, ±1, ±1/2} limited by `budget` candidates, (c) exact solving
// of the quadratic system when dim <= 2. Search is complete only for
// dim <= 2; verification of any candidate is exact.
std::vector<Vec> find_idempotents(const AlgebraStructure& a, std::size_t budget = 100000);

struct PierceDecomposition {
    Vec idempotent;
    Subspace p00;  // two-sided kernel of multiplication by e
    Subspace p11;  // two-sided fixed space
    PierceDecomposition() : p00(0), p11(0) {}
};

// Eigenspace decomposition induced by a nonzero idempotent e. Checks that the
// mixed eigenspaces vanish, that the two summands are complementary and
// multiplicatively closed, and that e is central for the bracket.
PierceDecomposition pierce(const AlgebraStructure& a, const Vec& e);

// Common refinement for pairwise orthogonal nonzero idempotents: returns
// [common kernel, fixed space of e_1, ..., fixed space of e_k] whose direct
// sum is the whole space.
std::vector<Subspace> pierce_multi(const AlgebraStructure& a, const std::vector<Vec>& es);

struct RadicalReport {
    Subspace jacobson_of_product;  // radical of the commutative part
    Subspace nilradical;           // largest bracket-and-product ideal inside it
    bool is_nilalgebra = false;
    bool nilalgebra_certified = false;  // true when proved, not sampled
    std::optional<Vec> principal_idempotent;
    RadicalReport() : jacobson_of_product(0), nilradical(0) {}
};

// Radical chain of an admissible algebra. The commutative radical is the
// kernel of the trace form (x,y) -> tr(L_{x•y}); the nilradical is the
// greatest subspace W of it with x·P ⊆ W and P·x ⊆ W for x ∈ W, found by
// descending fixpoint. Nilpotency bound: x nilpotent iff x^{dim+1} = 0.
RadicalReport radicals(const AlgebraStructure& a, unsigned trials = 25, std::uint64_t seed = 1);

struct CompatibleProducts {
    std::size_t dim_bracket;
    // Solution space of the linear constraints (symmetry + derivation rule)
    // on a product table, inside the flattened n³ coordinate space.
    Subspace linear_space;
    // The subset that is also associative, cut out of linear_space by the
    // polarized associativity form; this one is again a linear space.
    Subspace associative_core;
    CompatibleProducts() : linear_space(0), associative_core(0) {}
};

// All commutative products compatible with a given Lie bracket. The linear
// part is exact; associativity is quadratic, so the full solution set is
// {s in linear_space : associativity_residual(s) = 0}. The associative core
// is the largest linear subspace on which the residual vanishes identically
// against the whole linear space.
CompatibleProducts compatible_products(const AlgebraStructure& bracket);

// Associativity residual of the product table s (zero iff associative).
Cochain3 associativity_residual(const AlgebraStructure& s);

struct OperatorAlgebraReport {
    std::size_t dim;                  // of the generated operator algebra
    std::vector<Matrix> basis;        // echelonized basis of M(P) in End(P)
    bool relations_hold = false;      // the three left/right operator relations
    std::string simplicity;           // "not_simple" or "probably_simple"
    std::optional<Subspace> proper_ideal;  // witness when not simple
    bool square_is_whole = false;     // P·P spans P
};

// Operator algebra generated by all left/right multiplications, the operator
// relations satisfied on admissible algebras, and a semi-decision of
// simplicity by ideal-closure probing from basis and random elements.
OperatorAlgebraReport multiplication_algebra(const AlgebraStructure& a, unsigned trials = 25,
                                             std::uint64_t seed = 1);

// Smallest subspace containing v that is invariant under left and right
// multiplication (the two-sided ideal generated by v).
Subspace ideal_closure(const AlgebraStructure& a, const Vec& v);

// Span of all products x·y.
Subspace square_span(const AlgebraStructure& a);

bool is_nilpotent_element(const AlgebraStructure& a, const Vec& x);

}  // namespace poisson
