#pragma once

#include <cstddef>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/exactnum.hpp"

namespace poisson {

// Truncated one-parameter family of multiplications
//   mu_t = base + t·terms[0] + t²·terms[1] + … + t^K·terms[K-1].
struct FormalDeformation {
    AlgebraStructure base;
    std::vector<Cochain2> terms;

    explicit FormalDeformation(AlgebraStructure b) : base(std::move(b)) {}
    FormalDeformation(AlgebraStructure b, std::vector<Cochain2> ts)
        : base(std::move(b)), terms(std::move(ts)) {}

    std::size_t dim() const { return base.dim(); }
    std::size_t order() const { return terms.size(); }
    // The member tables all live in the base dimension.
    void validate() const;
    // Evaluate the family at a concrete parameter value.
    AlgebraStructure at(const Rational& t) const;
};

// Six-term composition of 2-cochains whose symmetrization generates the
// order-by-order deformation conditions:
//   (φ∘ψ)(X,Y,Z) = φ(ψ(X,Y),Z) − φ(X,ψ(Y,Z)) − ⅓φ(ψ(X,Z),Y)
//                  − ⅓φ(ψ(Y,Z),X) + ⅓φ(ψ(Y,X),Z) + ⅓φ(ψ(Z,X),Y).
// Satisfies delta2(μ,φ) = 3(μ∘φ + φ∘μ) identically.
Cochain3 circ(const Cochain2& phi, const Cochain2& psi);

struct ObstructionOrder {
    std::size_t order = 0;
    Cochain3 residual{0};
    bool vanishes = false;
};

struct ObstructionReport {
    std::vector<ObstructionOrder> orders;
    std::size_t first_failing = 0;  // 0 when every order vanishes
    bool all_vanish = true;
};

// Order-m residual 3·Σ_{i+j=m} φ_i∘φ_j with φ₀ = base, for m = 1..order();
// this equals the t^m coefficient of the defining identity's residual of
// mu_t, so the order-1 residual is exactly delta2 of the first term. All
// residuals vanish iff the family satisfies the identity through the
// truncation order (coefficient-wise in t).
ObstructionReport obstructions(const FormalDeformation& d);

// Transform the family by a truncated parameter-dependent base change
//   f_t = f_terms[0] + t·f_terms[1] + …   (f_terms[0] invertible):
// result_t = f_t⁻¹ ∘ mu_t ∘ (f_t × f_t), truncated at the same order.
FormalDeformation apply_equivalence(const FormalDeformation& d,
                                    const std::vector<Matrix>& f_terms);

// Infinitesimal deformation space: kernel of the degree-2 coboundary matrix
// over the flattened 2-cochain coordinates.
Subspace first_order_space(const AlgebraStructure& a);

}  // namespace poisson
