#include "doctest.h"
#include "oracle.hpp"

#include "cyclica/algebra.hpp"

using namespace cyclica;

TEST_CASE("associativity is enforced with a witness") {
    // e0 e0 = e1, e1 e0 = e0, all else 0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0.
    std::vector<SparseVec> p(4);
    p[0] = unit_vec(1);
    p[2] = unit_vec(0);
    try {
        Algebra::from_products("bad", 2, p);
        FAIL("accepted non-associative constants");
    } catch (const AssociativityError& e) {
        CHECK(e.triple == std::array<std::size_t, 3>{0, 0, 0});
    }
}

TEST_CASE("unitalization") {
    auto z = unitalize(Algebra::zero_algebra());
    CHECK(z == Algebra::ground_field());
    auto dual = unitalize(Algebra::zero_multiplication(1));
    CHECK(dual.dim() == 2);
    // basis (ε, 1): ε² = 0, ε·1 = 1·ε = ε, 1·1 = 1
    CHECK(dual.product(0, 0).empty());
    CHECK(dual.product(0, 1) == unit_vec(0));
    CHECK(dual.product(1, 1) == unit_vec(1));
    auto ut = unitalize(Algebra::upper_triangular_2());
    auto u = unit_vec(3);
    for (std::uint32_t i = 0; i < 4; ++i) {
        CHECK(ut.multiply(u, unit_vec(i)) == unit_vec(i));
        CHECK(ut.multiply(unit_vec(i), u) == unit_vec(i));
    }
    CHECK(ut.unit() == std::optional<SparseVec>(u));
    CHECK_FALSE(Algebra::zero_multiplication(1).unit().has_value());
}

TEST_CASE("ideals, powers and quotients") {
    auto a = Algebra::truncated_polynomial(3);
    IdealInclusion x(a, {unit_vec(1), unit_vec(2)});
    CHECK(x.dim() == 2);
    CHECK(power(x, 2).dim() == 1);
    CHECK(power(x, 3).dim() == 0);
    CHECK(power(x, 2).contains(unit_vec(2)));
    CHECK(x.contains(power(x, 2).basis()[0]));

    auto f = Algebra::ground_field();
    auto w = IdealInclusion::whole(f);
    CHECK(power(w, 5).dim() == 1);
    auto zm = IdealInclusion::whole(Algebra::zero_multiplication(2));
    CHECK(power(zm, 2).dim() == 0);

    CHECK_THROWS_AS(IdealInclusion(a, {unit_vec(2), unit_vec(2)}), InvariantError);
    // span(1) is not an ideal: x·1 = x.
    CHECK_THROWS_AS(IdealInclusion(a, {unit_vec(0)}), InvariantError);

    auto dual = Algebra::truncated_polynomial(2);
    auto [q, pi] = quotient_algebra(IdealInclusion(dual, {unit_vec(1)}));
    CHECK(q == Algebra::ground_field());
    CHECK(pi.rows() == 1);
    auto [q0, pi0] = quotient_algebra(IdealInclusion::whole(dual));
    CHECK(q0.dim() == 0);
    auto [qa, pia] = quotient_algebra(IdealInclusion::zero(dual));
    CHECK(qa == dual);
    CHECK(pia == Matrix::identity(2));
}

TEST_CASE("adapted bases for a non-coordinate ideal") {
    // Q × Q[x]/(x^2) with the ideal (x) of the second factor.
    auto a = Algebra::product(Algebra::ground_field(), Algebra::truncated_polynomial(2));
    // Conjugate by an integer base change so the ideal is not coordinate-aligned.
    auto p = Matrix::from_dense({{1, 1, 0}, {0, 1, 2}, {0, 0, 1}});
    auto b = a.base_change(p, "skew");
    // The ideal (x) of the second factor is e2 in the old basis = p^{-1} e2 now.
    auto pinv = inverse(p);
    IdealInclusion k(b, {pinv.apply(unit_vec(2))});
    auto P = k.adapted_basis();
    auto Q = k.adapted_coordinates();
    CHECK(P * Q == Matrix::identity(3));
    auto ad = k.adapted_algebra();
    // K sits in coordinate 0 of the adapted algebra and is an ideal there.
    IdealInclusion k0(ad, {unit_vec(0)});
    CHECK(k0.dim() == 1);
    auto [qq, pi] = quotient_algebra(k);
    CHECK(qq.dim() == 2);
    CHECK(is_algebra_map(pi, b, qq));
    CHECK(k.as_algebra().is_zero_multiplication());
}

TEST_CASE("tensor swap") {
    CHECK(tensor_swap(1, 1) == Matrix::identity(1));
    for (std::size_t v = 1; v <= 3; ++v)
        for (std::size_t w = 1; w <= 3; ++w) {
            auto t = tensor_swap(v, w);
            CHECK(tensor_swap(w, v) * t == Matrix::identity(v * w));
            CHECK(t.nnz() == v * w);
        }
    // Naturality: t (f ⊗ g) = (g ⊗ f) t.
    std::mt19937_64 rng(1);
    auto f = oracle::random_matrix(rng, 2, 2, 70);
    auto g = oracle::random_matrix(rng, 3, 3, 70);
    CHECK(tensor_swap(2, 3) * kron(f, g) == kron(g, f) * tensor_swap(2, 3));
}
