#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "poisson/algebra.hpp"

namespace poisson {

// Outcome of one polynomial-identity check. On failure, `witness` holds the
// basis-triple indices (first `witness_arity` slots meaningful) at which the
// residual value `residual` is nonzero.
struct CheckResult {
    std::string identity;
    bool passed = true;
    std::array<std::size_t, 3> witness{0, 0, 0};
    std::size_t witness_arity = 0;
    Vec residual;
};

// Associator values A(e_i,e_j,e_k) of the product as a trilinear tensor.
Cochain3 associator_tensor(const AlgebraStructure& a);

// Residual tensors of the defining identities; each identity holds iff its
// residual is the zero tensor.
//
// Compatibility:   R(X,Y,Z) = 3A(X,Y,Z) - (XZ)Y - (YZ)X + (YX)Z + (ZX)Y.
//   This is the condition for half-sum/half-difference of the product to be
//   a Poisson bracket/product pair.
Cochain3 admissible_residual(const AlgebraStructure& a);
// Flexibility:     A(X,Y,Z) + A(Z,Y,X).
Cochain3 flexible_residual(const AlgebraStructure& a);
// Cyclic relation: A(X,Y,Z) + A(Y,Z,X) - A(Y,X,Z).
Cochain3 cyclic_residual(const AlgebraStructure& a);
// Single combined relation equivalent to flexibility + cyclic:
//   2A(X,Y,Z) + ½A(Y,X,Z) + A(Z,Y,X) + A(Y,Z,X) + 3/2·A(Z,X,Y).
Cochain3 sigma3_residual(const AlgebraStructure& a);

CheckResult check_admissible(const AlgebraStructure& a);
CheckResult check_flexible(const AlgebraStructure& a);
CheckResult check_cyclic(const AlgebraStructure& a);
CheckResult check_sigma3(const AlgebraStructure& a);

// Bracket axioms: anticommutativity plus the Jacobi identity.
CheckResult check_lie(const AlgebraStructure& a);
// Commutativity plus associativity.
CheckResult check_comm_assoc(const AlgebraStructure& a);
// The bracket acts by derivations of the product:
//   {x, y•z} = {x,y}•z + y•{x,z}.
CheckResult check_leibniz(const PoissonPair& p);
// X^i · X^j = X^{i+j} for i+j <= max_total, on all basis vectors plus
// `n_random` seeded random elements.
CheckResult check_power_associative(const AlgebraStructure& a, unsigned max_total = 8,
                                    unsigned n_random = 0, std::uint64_t seed = 1);

// A permutation of three slots; img[i] is the image of slot i (0-based).
struct Perm3 {
    std::array<std::size_t, 3> img;
};

// The six elements of the symmetric group on three letters, in the fixed
// order: id, (12), (13), (23), (123), (132); (123) maps slot 0->1, 1->2, 2->0.
const std::array<Perm3, 6>& sigma3_elements();

// A rational combination Σ c_σ σ in the group algebra of Σ₃, acting on
// trilinear maps by permuting arguments:
//   (T∘Φ_σ)(x₀,x₁,x₂) = T(x_{σ(0)}, x_{σ(1)}, x_{σ(2)}).
class Sigma3Vector {
public:
    Sigma3Vector() : c_{} { c_.fill(Rational(0)); }

    Rational& coeff(std::size_t idx) { return c_[idx]; }
    const Rational& coeff(std::size_t idx) const { return c_[idx]; }

    Cochain3 apply_to(const Cochain3& T) const;  // Σ c_σ T∘Φ_σ

    // Annihilator coming from the compatibility identity: id - (12) + (123).
    static Sigma3Vector admissible_annihilator();
    // Annihilator coming from flexibility: id + (13).
    static Sigma3Vector flexibility_annihilator();
    // The single element whose annihilation is equivalent to both at once:
    // 2·id + ½(12) + (13) + (123) + 3/2·(132).
    static Sigma3Vector combined_relation();

private:
    std::array<Rational, 6> c_;  // indexed per sigma3_elements()
};

// True iff A_a ∘ Φ_v = 0 where A_a is the associator tensor of `a`.
bool sigma3_annihilates(const Sigma3Vector& v, const AlgebraStructure& a);

// {T in the full trilinear-map space : T∘Φ_v = 0 for every v}, as a subspace
// of the flattened n⁴-dimensional coordinate space.
Subspace annihilated_subspace(std::size_t n, const std::vector<Sigma3Vector>& vs);

}  // namespace poisson
