#include <doctest.h>

#include <algorithm>

#include "poisson/catalog.hpp"
#include "poisson/errors.hpp"
#include "poisson/identities.hpp"
#include "poisson/structure.hpp"

using namespace poisson;

namespace {

AlgebraStructure direct_sum(const AlgebraStructure& a, const AlgebraStructure& b) {
    std::size_t n = a.dim(), m = b.dim();
    AlgebraStructure s(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) s.c(n + i, n + j, n + k) = b.c(i, j, k);
    return s;
}

}  // namespace

TEST_CASE("split halves the table into bracket and product") {
    PoissonPair p = split(catalog_get("P_3_2"));
    AlgebraStructure bracket(3), product(3);
    bracket.c(0, 1, 2) = Rational(1);
    bracket.c(1, 0, 2) = Rational(-1);
    product.c(0, 0, 2) = Rational(1);
    CHECK(p.bracket == bracket);
    CHECK(p.product == product);

    PoissonPair q = split(catalog_get("P_3_6"));
    AlgebraStructure qb(3), qp(3);
    qb.c(0, 1, 1) = Rational(1);
    qb.c(1, 0, 1) = Rational(-1);
    qp.c(2, 2, 2) = Rational(1);
    qp.c(0, 2, 0) = qp.c(2, 0, 0) = Rational(1);
    qp.c(1, 2, 1) = qp.c(2, 1, 1) = Rational(1);
    CHECK(q.bracket == qb);
    CHECK(q.product == qp);
}

TEST_CASE("combine rebuilds the named fixtures from their parts") {
    PoissonPair sl2_pair(3);
    sl2_pair.bracket = split(catalog_get("sl2")).bracket;
    CHECK(combine(sl2_pair) == catalog_get("sl2"));

    PoissonPair heis(3);
    heis.bracket = split(catalog_get("heisenberg")).bracket;
    heis.product.c(0, 0, 2) = Rational(1);
    CHECK(combine(heis) == catalog_get("P_3_2"));

    PoissonPair pure_product(2);
    pure_product.product = catalog_get("comm2_nil");
    CHECK(combine(pure_product) == catalog_get("comm2_nil"));
}

TEST_CASE("split and combine are mutually inverse") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        AlgebraStructure a = random_admissible(2 + t % 3, rng);
        PoissonPair p = split(a);
        CHECK(combine(p) == a);
        PoissonPair q = split(combine(p));
        CHECK(q.bracket == p.bracket);
        CHECK(q.product == p.product);
    }
}

TEST_CASE("split rejects non-admissible tables") {
    AlgebraStructure bad(2);
    bad.c(0, 0, 1) = Rational(1);
    bad.c(0, 1, 0) = bad.c(1, 0, 0) = Rational(1);
    CHECK_THROWS_AS(split(bad), input_error);
    CHECK_NOTHROW(split(bad, true));
}

TEST_CASE("combine rejects pairs violating the derivation rule") {
    PoissonPair bad(3);
    bad.bracket = split(catalog_get("sl2")).bracket;
    bad.product.c(0, 0, 0) = Rational(1);
    CHECK_THROWS_AS(combine(bad), input_error);
}

TEST_CASE("bracket centers") {
    CHECK(lie_center(split(catalog_get("sl2"))).dim() == 0);
    CHECK(lie_center(split(catalog_get("zero", {{"dim", Rational(3)}}))).dim() == 3);
    Subspace c = lie_center(split(catalog_get("P_3_5")));
    CHECK(c.dim() == 1);
    CHECK(c.contains(basis_vec(3, 2)));
}

TEST_CASE("idempotent search on the catalog") {
    CHECK(is_idempotent(catalog_get("P_3_6"), basis_vec(3, 2)));
    CHECK(find_idempotents(catalog_get("zero", {{"dim", Rational(2)}})).empty());

    auto found = find_idempotents(catalog_get("P_3_3", {{"alpha", Rational(1)}}));
    CHECK(std::any_of(found.begin(), found.end(),
                      [](const Vec& e) { return e == basis_vec(3, 2); }));
}

TEST_CASE("dim-2 idempotents are solved exactly beyond the search grid") {
    AlgebraStructure a(2);
    a.c(0, 0, 0) = Rational(3);
    auto found = find_idempotents(a);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == Vec{Rational(1, 3), Rational(0)});

    AlgebraStructure two_lines(2);
    two_lines.c(0, 0, 0) = Rational(1);
    two_lines.c(1, 1, 1) = Rational(1);
    auto all = find_idempotents(two_lines);
    CHECK(all.size() == 3);
    for (const auto& e : all) CHECK(is_idempotent(two_lines, e));
}

TEST_CASE("found idempotents are central for the bracket") {
    AlgebraStructure a = catalog_get("P_3_3", {{"alpha", Rational(1)}});
    PoissonPair p = split(a);
    for (const auto& e : find_idempotents(a))
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(vec_is_zero(p.bracket.multiply(e, basis_vec(3, j))));
}

TEST_CASE("eigenspace decomposition at a unit fills the fixed space") {
    PierceDecomposition d = pierce(catalog_get("P_3_6"), basis_vec(3, 2));
    CHECK(d.p00.dim() == 0);
    CHECK(d.p11.dim() == 3);
}

TEST_CASE("eigenspace decomposition splits a non-unital fixture") {
    PierceDecomposition d = pierce(catalog_get("P_3_3", {{"alpha", Rational(0)}}),
                                   basis_vec(3, 2));
    CHECK(d.p00.dim() == 2);
    CHECK(d.p11.dim() == 1);
    CHECK(d.p00.contains(basis_vec(3, 0)));
    CHECK(d.p00.contains(basis_vec(3, 1)));
    CHECK(d.p11.contains(basis_vec(3, 2)));
}

TEST_CASE("a zero summand lands in the kernel part") {
    AlgebraStructure s = direct_sum(catalog_get("P_3_6"), AlgebraStructure(2));
    PierceDecomposition d = pierce(s, basis_vec(5, 2));
    CHECK(d.p00.dim() == 2);
    CHECK(d.p00.contains(basis_vec(5, 3)));
    CHECK(d.p11.dim() == 3);
}

TEST_CASE("pierce validates its idempotent") {
    CHECK_THROWS_AS(pierce(catalog_get("P_3_6"), basis_vec(3, 0)), input_error);
    CHECK_THROWS_AS(pierce(catalog_get("P_3_6"), vec_zero(3)), input_error);
}

TEST_CASE("orthogonal idempotents refine the decomposition") {
    AlgebraStructure s = direct_sum(catalog_get("P_3_6"), catalog_get("P_3_6"));
    auto parts = pierce_multi(s, {basis_vec(6, 2), basis_vec(6, 5)});
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].dim() == 0);
    CHECK(parts[1].dim() == 3);
    CHECK(parts[2].dim() == 3);

    AlgebraStructure z = direct_sum(catalog_get("P_3_6"), AlgebraStructure(2));
    auto kz = pierce_multi(z, {basis_vec(5, 2)});
    CHECK(kz[0].dim() == 2);

    CHECK_THROWS_AS(pierce_multi(catalog_get("P_3_6"), {basis_vec(3, 2), basis_vec(3, 2)}),
                    input_error);
}

TEST_CASE("radical chain of a split fixture") {
    RadicalReport r = radicals(catalog_get("P_3_3", {{"alpha", Rational(0)}}));
    Subspace e12 = Subspace::span(3, {basis_vec(3, 0), basis_vec(3, 1)});
    CHECK(r.jacobson_of_product == e12);
    CHECK(r.nilradical == e12);
    CHECK_FALSE(r.is_nilalgebra);
    REQUIRE(r.principal_idempotent.has_value());
    CHECK(is_idempotent(catalog_get("P_3_3", {{"alpha", Rational(0)}}), *r.principal_idempotent));
}

TEST_CASE("a pure-bracket nilalgebra has full radical chain") {
    RadicalReport r = radicals(catalog_get("remnil"));
    CHECK(r.nilradical.dim() == 3);
    CHECK(r.jacobson_of_product.dim() == 3);
    CHECK(r.is_nilalgebra);
    CHECK(r.nilalgebra_certified);
    CHECK_FALSE(r.principal_idempotent.has_value());
}

TEST_CASE("zero algebra radical chain") {
    RadicalReport r = radicals(catalog_get("zero", {{"dim", Rational(2)}}));
    CHECK(r.nilradical.dim() == 2);
    CHECK(r.is_nilalgebra);
}

TEST_CASE("unital fixture has nilpotent radical complemented by the unit") {
    RadicalReport r = radicals(catalog_get("P_3_6"));
    CHECK(r.nilradical == Subspace::span(3, {basis_vec(3, 0), basis_vec(3, 1)}));
    REQUIRE(r.principal_idempotent.has_value());
    CHECK(*r.principal_idempotent == basis_vec(3, 2));
}

TEST_CASE("nilpotency of single elements") {
    CHECK(is_nilpotent_element(catalog_get("remnil"), basis_vec(3, 0)));
    CHECK_FALSE(is_nilpotent_element(catalog_get("P_3_6"), basis_vec(3, 2)));
}

TEST_CASE("products compatible with the classified brackets") {
    CompatibleProducts sl2 = compatible_products(split(catalog_get("sl2")).bracket);
    CHECK(sl2.linear_space.dim() == 0);
    CHECK(sl2.associative_core.dim() == 0);

    CompatibleProducts heis = compatible_products(split(catalog_get("heisenberg")).bracket);
    CHECK(heis.linear_space.dim() == 5);
    CHECK(heis.associative_core.dim() == 3);
    for (const auto& row : heis.associative_core.basis()) {
        AlgebraStructure s = AlgebraStructure::unflatten(3, row);
        CHECK(associativity_residual(s).is_zero());
        CHECK(check_comm_assoc(s).passed);
        PoissonPair p(3);
        p.bracket = split(catalog_get("heisenberg")).bracket;
        p.product = s;
        CHECK(check_leibniz(p).passed);
    }

    CompatibleProducts na2 = compatible_products(split(catalog_get("nonabelian2")).bracket);
    CHECK(na2.linear_space.dim() == 1);
    CHECK(na2.associative_core.dim() == 0);
}

TEST_CASE("compatible products reject a non-Lie table") {
    CHECK_THROWS_AS(compatible_products(catalog_get("comm2_idem")), input_error);
}

TEST_CASE("operator algebra satisfies the multiplication relations") {
    for (const char* name : {"P_3_3", "P_3_9", "remnil"}) {
        std::map<std::string, Rational> params;
        if (std::string(name) == "P_3_3") params["alpha"] = Rational(1);
        OperatorAlgebraReport rep = multiplication_algebra(catalog_get(name, params));
        CHECK(rep.relations_hold);
        CHECK(rep.dim >= 1);
    }
}

TEST_CASE("simplicity probing") {
    OperatorAlgebraReport nil = multiplication_algebra(catalog_get("remnil"));
    CHECK(nil.simplicity == "probably_simple");
    CHECK(nil.square_is_whole);

    OperatorAlgebraReport p35 = multiplication_algebra(catalog_get("P_3_5"));
    CHECK(p35.simplicity == "not_simple");
    REQUIRE(p35.proper_ideal.has_value());
    CHECK(p35.proper_ideal->dim() >= 1);
    CHECK(p35.proper_ideal->dim() < 3);

    OperatorAlgebraReport zero = multiplication_algebra(AlgebraStructure(2));
    CHECK(zero.simplicity == "not_simple");
    CHECK_FALSE(zero.square_is_whole);

    CHECK(multiplication_algebra(catalog_get("sl2")).simplicity == "probably_simple");
}

TEST_CASE("ideal closures and squares") {
    AlgebraStructure a = catalog_get("P_3_5");
    CHECK(ideal_closure(a, basis_vec(3, 2)) == Subspace::span(3, {basis_vec(3, 2)}));
    CHECK(ideal_closure(a, basis_vec(3, 1)) == Subspace::span(3, {basis_vec(3, 1)}));
    CHECK(square_span(a) == Subspace::span(3, {basis_vec(3, 1)}));
    CHECK(square_span(catalog_get("remnil")).dim() == 3);
}
