#include <doctest.h>

#include "poisson/catalog.hpp"
#include "poisson/cohomology.hpp"
#include "poisson/errors.hpp"
#include "poisson/identities.hpp"
#include "poisson/structure.hpp"

using namespace poisson;

namespace {

AlgebraStructure random_table(std::size_t n, Rng& rng) {
    AlgebraStructure a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.c(i, j, k) = rng.next_rational();
    return a;
}

Cochain3 operators_combination(const ClassicalOperators& ops,
                               const std::array<Rational, 6>& c) {
    Cochain3 sum = ops.chevalley_skew.scaled(c[0]);
    sum = sum.plus(ops.harrison_sym.scaled(c[1]));
    sum = sum.plus(ops.chevalley_sym.scaled(c[2]));
    sum = sum.plus(ops.harrison_skew.scaled(c[3]));
    sum = sum.plus(ops.correction_skew.scaled(c[4]));
    sum = sum.plus(ops.correction_sym.scaled(c[5]));
    return sum;
}

}  // namespace

TEST_CASE("left annihilators") {
    CHECK(delta0(catalog_get("zero", {{"dim", Rational(2)}})).dim() == 2);
    CHECK(delta0(catalog_get("P_3_6")).dim() == 0);
    CHECK(delta0(catalog_get("P_3_5")) == Subspace::span(3, {basis_vec(3, 2)}));

    AlgebraStructure one_sided(2);
    one_sided.c(1, 0, 0) = Rational(1);
    CHECK(delta0(one_sided) == Subspace::span(2, {basis_vec(2, 0)}));
    CHECK(delta0(one_sided, true).dim() == 0);
}

TEST_CASE("coboundary of the identity map reproduces the product") {
    for (const char* name : {"P_3_4", "nonabelian2"}) {
        AlgebraStructure a = catalog_get(name);
        CHECK(delta1(a, Matrix::identity(a.dim())) == a);
    }
}

TEST_CASE("coboundaries are cocycles") {
    std::vector<AlgebraStructure> cases = {
        catalog_get("P_3_2"), catalog_get("P_3_6"), catalog_get("P_3_9"),
        catalog_get("nonabelian2"), catalog_get("P_3_3", {{"alpha", Rational(1)}})};
    Rng rng(23);
    for (int t = 0; t < 20; ++t) cases.push_back(random_admissible(2 + t % 3, rng));
    for (const auto& a : cases) {
        Matrix composite = delta2_matrix(a).matrix * delta1_matrix(a).matrix;
        CHECK(composite.is_zero());
    }
}

TEST_CASE("cohomology report on a simple bracket fixture") {
    CohomologyReport r = cohomology_report(catalog_get("P_3_9"));
    CHECK(r.h0_basis.dim() == 0);
    CHECK(r.h1_dims == std::array<std::size_t, 3>{3, 3, 0});
    CHECK(r.dim_Z2 == 6);
    CHECK(r.dim_B2 == 6);
    CHECK(r.dim_H2 == 0);
}

TEST_CASE("cohomology report on the solvable dim-2 bracket") {
    CohomologyReport r = cohomology_report(catalog_get("nonabelian2"));
    CHECK(r.dim_Z2 == 3);
    CHECK(r.dim_B2 == 2);
    CHECK(r.dim_H2 == 1);
}

TEST_CASE("cohomology of the zero algebra is the whole cochain space") {
    CohomologyReport r = cohomology_report(catalog_get("zero", {{"dim", Rational(2)}}));
    CHECK(r.h0_basis.dim() == 2);
    CHECK(r.h1_dims == std::array<std::size_t, 3>{4, 0, 4});
    CHECK(r.dim_Z2 == 8);
    CHECK(r.dim_B2 == 0);
    CHECK(r.dim_H2 == 8);
}

TEST_CASE("reported bases live in the right kernels") {
    for (const char* name : {"P_3_9", "nonabelian2"}) {
        AlgebraStructure a = catalog_get(name);
        CohomologyReport r = cohomology_report(a);
        for (const auto& z : r.z2_basis) CHECK(delta2(a, z).is_zero());
        for (const auto& b : r.b2_basis) CHECK(delta2(a, b).is_zero());
    }
}

TEST_CASE("the coboundary is the two-sided derivative of the residual") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 3;
        AlgebraStructure mu = random_table(n, rng);
        Cochain2 phi = random_table(n, rng);
        Cochain3 lhs = delta2(mu, phi);
        Cochain3 rhs = admissible_residual(mu.plus(phi))
                           .plus(admissible_residual(mu.minus(phi)).scaled(Rational(-1)))
                           .scaled(Rational(1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("six classical values assemble the coboundary") {
    auto coeffs = delta2_decomposition_coefficients();
    CHECK(coeffs == std::array<Rational, 6>{Rational(2), Rational(4), Rational(2),
                                            Rational(2), Rational(2), Rational(2)});
    Rng rng(37);
    std::vector<AlgebraStructure> cases = {
        catalog_get("P_3_3", {{"alpha", Rational(1)}}), catalog_get("P_3_6"),
        catalog_get("P_3_9"), catalog_get("nonabelian2")};
    for (const auto& a : cases) {
        PoissonPair p = split(a);
        for (int t = 0; t < 4; ++t) {
            Cochain2 phi = random_table(a.dim(), rng);
            ClassicalOperators ops = classical_operators(p, phi);
            CHECK(operators_combination(ops, coeffs) == delta2(a, phi));
        }
    }
}

TEST_CASE("coefficients are pinned by mixed-parity fixtures") {
    // Stack flattened operator values of several random cochains as the
    // columns' samples; full column rank means no other coefficient vector
    // reproduces delta2 on that algebra.
    auto sample_rank = [](const AlgebraStructure& a, std::uint64_t seed) {
        PoissonPair p = split(a);
        Rng rng(seed);
        std::size_t n = a.dim(), block = n * n * n * n;
        std::vector<Vec> rows;
        for (int t = 0; t < 6; ++t) {
            Cochain2 phi = random_table(n, rng);
            ClassicalOperators ops = classical_operators(p, phi);
            std::array<Vec, 6> cols = {
                ops.chevalley_skew.flatten(), ops.harrison_sym.flatten(),
                ops.chevalley_sym.flatten(),  ops.harrison_skew.flatten(),
                ops.correction_skew.flatten(), ops.correction_sym.flatten()};
            for (std::size_t r = 0; r < block; ++r) {
                Vec row(6);
                for (std::size_t c = 0; c < 6; ++c) row[c] = cols[c][r];
                rows.push_back(row);
            }
        }
        return Matrix::from_rows(rows).rank();
    };
    CHECK(sample_rank(catalog_get("P_3_3", {{"alpha", Rational(1)}}), 5) == 6);
    CHECK(sample_rank(catalog_get("P_3_6"), 5) == 6);
    // A pure bracket cannot separate the symmetric-side operators.
    CHECK(sample_rank(catalog_get("P_3_9"), 5) < 6);
}

TEST_CASE("classical values vanish on cocycle bases") {
    auto coeffs = delta2_decomposition_coefficients();
    for (const char* name : {"P_3_9", "nonabelian2"}) {
        AlgebraStructure a = catalog_get(name);
        PoissonPair p = split(a);
        for (const auto& z : cohomology_report(a).z2_basis) {
            ClassicalOperators ops = classical_operators(p, z);
            CHECK(operators_combination(ops, coeffs).is_zero());
        }
    }
}

TEST_CASE("alternating combinations isolate the classical parts") {
    Sigma3Vector comb_c;  // +id -(12) -(13) -(23) +(123) +(132)
    comb_c.coeff(0) = Rational(1);
    comb_c.coeff(1) = Rational(-1);
    comb_c.coeff(2) = Rational(-1);
    comb_c.coeff(3) = Rational(-1);
    comb_c.coeff(4) = Rational(1);
    comb_c.coeff(5) = Rational(1);
    Sigma3Vector comb_h;  // +id -(13) +(23) -(132)
    comb_h.coeff(0) = Rational(1);
    comb_h.coeff(2) = Rational(-1);
    comb_h.coeff(3) = Rational(1);
    comb_h.coeff(5) = Rational(-1);

    Rng rng(41);
    for (const char* name : {"P_3_3", "P_3_6", "P_3_9"}) {
        std::map<std::string, Rational> params;
        if (std::string(name) == "P_3_3") params["alpha"] = Rational(1);
        AlgebraStructure a = catalog_get(name, params);
        PoissonPair p = split(a);
        Cochain2 phi = random_table(a.dim(), rng);
        Cochain3 d2 = delta2(a, phi);
        CHECK(comb_c.apply_to(d2) ==
              delta_chevalley(p.bracket, phi.skew_half()).scaled(Rational(12)));
        CHECK(comb_h.apply_to(d2) ==
              delta_harrison(p.product, phi.sym_half()).scaled(Rational(12)));
    }
}

TEST_CASE("parity of the input kills the opposite-side operators") {
    Rng rng(43);
    AlgebraStructure a = catalog_get("P_3_3", {{"alpha", Rational(1)}});
    PoissonPair p = split(a);
    Cochain2 raw = random_table(3, rng);

    ClassicalOperators sym_in = classical_operators(p, raw.sym_half());
    CHECK(sym_in.chevalley_skew.is_zero());
    CHECK(sym_in.harrison_skew.is_zero());
    CHECK(sym_in.correction_skew.is_zero());

    ClassicalOperators skew_in = classical_operators(p, raw.skew_half());
    CHECK(skew_in.harrison_sym.is_zero());
    CHECK(skew_in.chevalley_sym.is_zero());
    CHECK(skew_in.correction_sym.is_zero());
}

TEST_CASE("the Poisson differential is attached only to skew biderivations") {
    PoissonPair p = split(catalog_get("P_3_9"));
    // The bracket table itself: skew, and a biderivation of the zero product.
    Cochain2 br = p.bracket;
    CHECK(is_skew_cochain(br));
    CHECK(is_biderivation(br, p.product));
    ClassicalOperators ops = classical_operators(p, br);
    CHECK(ops.lichnerowicz_defined);

    PoissonPair q = split(catalog_get("P_3_6"));
    Cochain2 sym(3);
    sym.c(0, 0, 1) = Rational(1);
    CHECK_FALSE(is_skew_cochain(sym));
    CHECK_FALSE(classical_operators(q, sym).lichnerowicz_defined);
}

TEST_CASE("operator_matrix rebuilds a matrix from its action") {
    Matrix m(2, 3);
    m.at(0, 0) = Rational(1);
    m.at(0, 2) = Rational(-2);
    m.at(1, 1) = Rational(1, 3);
    Matrix rebuilt = operator_matrix(3, 2, [&](const Vec& x) { return m.apply(x); });
    CHECK(rebuilt == m);
}
