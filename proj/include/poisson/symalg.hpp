#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/exactnum.hpp"

namespace poisson {

// Ordered basis of the polynomials of total degree <= truncation in
// `generators` variables: exponent vectors sorted by degree, then
// lexicographically descending, so x comes before y and x² before xy.
struct MonomialBasis {
    std::size_t generators = 0;
    unsigned truncation = 0;
    std::vector<std::vector<unsigned>> monomials;

    std::size_t size() const { return monomials.size(); }
    unsigned degree(std::size_t idx) const;
    // Index of an exponent vector; false when it exceeds the truncation.
    bool index_of(const std::vector<unsigned>& expo, std::size_t& out) const;
};

MonomialBasis monomial_basis(std::size_t generators, unsigned truncation);

// Truncated symmetric algebra of a Lie algebra g: the monomial basis
// carries the polynomial product and the induced linear bracket
//   {p, q} = Σ_{i<j,k} C^k_{ij} e_k (∂p/∂e_i ∂q/∂e_j − ∂p/∂e_j ∂q/∂e_i),
// both with degree->truncation tails dropped. Dropping is consistent: the
// span of high-degree monomials is an ideal for the product and is bracket-
// stable (the bracket lowers total degree by one).
struct SymAlg {
    MonomialBasis basis;
    PoissonPair pair;
};

// Validates that `lie` is skew and satisfies Jacobi; the resulting pair
// passes the bracket, product, and compatibility checks exactly.
SymAlg build_symalg(const AlgebraStructure& lie, unsigned truncation);

// How an element acts on the monomial basis through the bracket.
struct AdSpectrum {
    bool diagonal = false;
    std::vector<Rational> eigenvalues;         // per monomial, when diagonal
    std::array<std::size_t, 2> witness{0, 0};  // (row, col) of an offending entry
};

AdSpectrum ad_spectrum(const SymAlg& s, const Vec& x);

// Extend values on generator pairs to a 2-cochain on the whole monomial
// basis by the derivation rule in each argument,
//   φ(u·m, v) = u·φ(m,v) + φ(u,v)·m,
// truncating products as they occur (equivalently: extend in the full
// polynomial ring and truncate the result; degrees only grow during the
// descent). Keys are generator index pairs, values monomial-coordinate
// vectors; the table must be skew in the generator slots.
Cochain2 biderivation_extend(
    const SymAlg& s, const std::map<std::pair<std::size_t, std::size_t>, Vec>& gen_values);

}  // namespace poisson
