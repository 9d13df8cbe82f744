#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclica/forms.hpp"
#include "oracle.hpp"

using namespace cyclica;

namespace {

using oracle::Dense;

Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<mpq_class>(c, 0)); }

Dense eye(std::size_t n) {
    Dense m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Dense dkron(const Dense& a, const Dense& b) {
    std::size_t ar = a.size(), ac = ar ? a[0].size() : 0, br = b.size(), bc = br ? b[0].size() : 0;
    Dense m = zeros(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            if (a[i][j] != 0)
                for (std::size_t k = 0; k < br; ++k)
                    for (std::size_t l = 0; l < bc; ++l) m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return m;
}

Dense dmul(const Dense& a, const Dense& b) {
    std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    Dense m = zeros(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
    return m;
}

void dadd(Dense& a, const Dense& b, int sign) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += sign * b[i][j];
}

std::size_t upow(std::size_t d, std::size_t n) {
    std::size_t r = 1;
    while (n--) r *= d;
    return r;
}

/// μ: A⊗A → A straight from the structure constants.
Dense mult(const Algebra& a) {
    std::size_t d = a.dim();
    Dense m = zeros(d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) m[k][i * d + j] = a.c(i, j, k).to_mpq();
    return m;
}

/// Cyclic permutation on A^{⊗m} moving the last factor to the front.
Dense last_to_front(std::size_t d, std::size_t m) {
    std::size_t n = upow(d, m), hi = upow(d, m - 1);
    Dense t = zeros(n, n);
    for (std::size_t idx = 0; idx < n; ++idx) t[(idx % d) * hi + idx / d][idx] = 1;
    return t;
}

/// b restricted to C_n → C_{n-1}: Hochschild boundary assembled from Kronecker products.
Dense hochschild_oracle(const Algebra& a, std::size_t n) {
    std::size_t d = a.dim();
    Dense M = mult(a);
    Dense b = zeros(upow(d, n), upow(d, n + 1));
    for (std::size_t i = 0; i < n; ++i) dadd(b, dkron(dkron(eye(upow(d, i)), M), eye(upow(d, n - 1 - i))), i % 2 ? -1 : 1);
    dadd(b, dmul(dkron(M, eye(upow(d, n - 1))), last_to_front(d, n + 1)), n % 2 ? -1 : 1);
    return b;
}

/// b' on A^{⊗n} (n ≥ 2).
Dense bar_oracle(const Algebra& a, std::size_t n) {
    std::size_t d = a.dim();
    Dense M = mult(a);
    Dense b = zeros(upow(d, n - 1), upow(d, n));
    for (std::size_t j = 0; j + 1 < n; ++j) dadd(b, dkron(dkron(eye(upow(d, j)), M), eye(upow(d, n - 2 - j))), j % 2 ? -1 : 1);
    return b;
}

Dense block_of(const Dense& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    Dense out = zeros(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out[i - r0][j - c0] = m[i][j];
    return out;
}

bool is_dense_zero(const Dense& m) {
    for (const auto& r : m)
        for (const auto& x : r)
            if (x != 0) return false;
    return true;
}

std::vector<std::size_t> chain_dims(const ChainComplex& c) {
    std::vector<std::size_t> v;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) v.push_back(c.dim(n));
    return v;
}

}  // namespace

TEST_CASE("forms: b and B agree with a Kronecker-product assembly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        Algebra a = oracle::random_algebra(rng, 2 + trial % 2);
        std::size_t d = a.dim(), N = 4 - trial % 2;
        auto F = omega(a, N);
        for (std::size_t n = 1; n <= N; ++n) {
            Dense b = oracle::to_dense(F.mixed.b(n));
            std::size_t cn = upow(d, n + 1), cm = upow(d, n), top_prev = F.mixed.dim(n - 1);
            // C_n block
            CHECK(block_of(b, 0, cm, 0, cn) == hochschild_oracle(a, n));
            if (n > 1) CHECK(is_dense_zero(block_of(b, cm, top_prev, 0, cn)));
            // unit block: b(1⊗x) = x + (-1)^n t(x) in C_{n-1}, and -b'(x) in the unit block
            Dense c_part = eye(cm);
            dadd(c_part, last_to_front(d, n), n % 2 ? -1 : 1);
            CHECK(block_of(b, 0, cm, cn, cn + cm) == c_part);
            if (n >= 2) {
                Dense nb = bar_oracle(a, n);
                for (auto& r : nb)
                    for (auto& x : r) x = -x;
                CHECK(block_of(b, cm, top_prev, cn, cn + cm) == nb);
            }
        }
        for (std::size_t n = 1; n < N; ++n) {
            Dense B = oracle::to_dense(F.mixed.B(n));
            std::size_t cn = upow(d, n + 1);
            Dense sum = zeros(cn, cn);
            Dense t = eye(cn), step = last_to_front(d, n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                dadd(sum, t, (n * i) % 2 ? -1 : 1);
                t = dmul(step, t);
            }
            CHECK(block_of(B, cn * d, cn * (d + 1), 0, cn) == sum);
            CHECK(is_dense_zero(block_of(B, 0, cn * d, 0, cn)));
            CHECK(is_dense_zero(block_of(B, 0, cn * (d + 1), cn, cn + upow(d, n))));
        }
    }
}

TEST_CASE("forms: dimensions and the ground field") {
    auto F = omega(Algebra::ground_field(), 5);
    CHECK(F.mixed.dims() == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
    CHECK(F.mixed.b(1).rows() == 1);
    CHECK(F.mixed.b(1).cols() == 2);
    // b(e⊗e) = e·e - e·e and b(1⊗e) = e - e·1: commutativity forces b_1 = 0,
    // so H_0 = ℚ as Hochschild homology of a unital algebra requires.
    CHECK(rank(F.mixed.b(1)) == 0);
    auto G = omega(Algebra::truncated_polynomial(3), 3);
    CHECK(G.mixed.dims() == std::vector<std::size_t>{3, 12, 36, 108});
    CHECK_THROWS(omega(Algebra::ground_field(), 0));
}

TEST_CASE("forms: a last face that kills the unit summand breaks b squared") {
    // Variant where μ_n first projects Ã onto A: on ℚ it has b_1 of rank 1 but b_1 b_2 ≠ 0.
    Dense b1{{0, 1}};
    // Ω^2(ℚ) basis (e,e,e), (1,e,e); columns b_2 with μ_2 zero on the unit summand.
    // b(e⊗e⊗e) = e⊗e - e⊗e + e⊗e = e⊗e; b(1⊗e⊗e) = e⊗e - 1⊗e.
    Dense b2{{1, 1}, {0, -1}};
    CHECK_FALSE(is_dense_zero(dmul(b1, b2)));
    auto F = omega(Algebra::ground_field(), 2);
    CHECK((F.mixed.b(1) * F.mixed.b(2)).is_zero());
}

TEST_CASE("forms: zero multiplication has b = 0 and B ≠ 0") {
    auto F = omega(Algebra::zero_multiplication(2), 4);
    for (std::size_t n = 2; n <= 4; ++n) {
        // only the unit-block terms 1⊗x ↦ x ± t(x) survive μ_0 and μ_n
        Matrix c_block = F.mixed.b(n).select_cols([&] {
            std::vector<std::uint32_t> v(upow(2, n + 1));
            for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = i;
            return v;
        }());
        CHECK(c_block.is_zero());
    }
    for (std::size_t n = 0; n < 4; ++n) CHECK_FALSE(F.mixed.B(n).is_zero());
    auto Cb = bar_quotient(F);
    for (int n = 1; n <= 4; ++n) CHECK(Cb.homology_dim(n) == upow(2, std::size_t(n)));
}

TEST_CASE("forms: mixed complex identities on random algebras") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        Algebra a = oracle::random_algebra(rng, 2);
        auto F = omega_unchecked(a, 4);
        auto c = F.mixed.check_identities();
        CHECK(c.b_squared);
        CHECK(c.B_squared);
        CHECK(c.anticommute);
    }
    auto F = omega_unchecked(Algebra::upper_triangular_2(), 3);
    CHECK(F.mixed.check_identities().all());
}

TEST_CASE("forms: cyclic and bar pieces form a short exact sequence of complexes") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 4; ++trial) {
        Algebra a = oracle::random_algebra(rng, 2 + trial % 2);
        std::size_t d = a.dim(), N = 3;
        auto F = omega(a, N);
        auto C = cyclic_sub(F);
        auto Cb = bar_quotient(F);
        for (std::size_t n = 0; n <= N; ++n) {
            CHECK(C.dim(int(n)) == upow(d, n + 1));
            CHECK(Cb.dim(int(n)) == (n == 0 ? 0 : upow(d, n)));
        }
        auto inc = cyclic_inclusion(F);
        auto proj = bar_projection(F);
        for (std::size_t n = 0; n <= N; ++n) CHECK(check_short_exact(inc[n], proj[n]).all());
        for (std::size_t n = 1; n <= N; ++n) {
            CHECK(F.mixed.b(n) * inc[n] == inc[n - 1] * C.d(int(n)));
            CHECK(proj[n - 1] * F.mixed.b(n) == -(Cb.d(int(n)) * proj[n]));
        }
    }
}

TEST_CASE("forms: bar complex of a unital algebra is contractible") {
    for (const Algebra& a : {Algebra::ground_field(), Algebra::truncated_polynomial(2), Algebra::upper_triangular_2()}) {
        std::size_t N = 4, d = a.dim();
        auto Cb = bar_quotient(omega(a, N));
        Matrix u(d, 1);
        auto unit = a.unit();
        REQUIRE(unit);
        for (const auto& e : *unit) u.set(e.idx, 0, e.val);
        for (std::size_t n = 1; n < N; ++n) {
            Matrix s = kron(u, Matrix::identity(upow(d, n)));             // degree n → n+1
            Matrix s_prev = kron(u, Matrix::identity(upow(d, n - 1)));    // degree n-1 → n
            Matrix lhs = Cb.d(int(n) + 1) * s;
            if (n >= 2) lhs += s_prev * Cb.d(int(n));
            CHECK(lhs == Matrix::identity(upow(d, n)));
            CHECK(Cb.homology_dim(int(n)) == 0);
        }
    }
}

TEST_CASE("forms: bar_S over the forms of a one-dimensional algebra") {
    auto S = bar_S(omega(Algebra::ground_field(), 4).mixed);
    CHECK(chain_dims(S.P) == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("forms: relative complexes for ideals") {
    std::mt19937_64 rng(21);
    struct Sample {
        Algebra a;
        std::vector<SparseVec> gens;
    };
    Algebra p3 = Algebra::truncated_polynomial(3);
    Algebra ut = Algebra::upper_triangular_2();
    std::vector<Sample> samples{
        {p3, {unit_vec(2)}},
        {p3, {unit_vec(1), unit_vec(2)}},
        {ut, {unit_vec(1)}},
        {ut, {unit_vec(0), unit_vec(1)}},
        {Algebra::product(Algebra::ground_field(), Algebra::zero_multiplication(1)), {unit_vec(1)}},
    };
    // Skew bases make the ideal basis non-coordinate.
    Matrix P = oracle::random_invertible(rng, 3);
    samples.push_back({p3.base_change(P, "skew"), {inverse(P).apply(unit_vec(1)), inverse(P).apply(unit_vec(2))}});

    for (const auto& s : samples) {
        CAPTURE(s.a.name());
        CAPTURE(s.gens.size());
        auto K = IdealInclusion::span(s.a, s.gens);
        std::size_t N = 3, d = s.a.dim(), q = K.codim();
        auto R = relative_forms(K, N);
        auto F = omega(s.a, N);
        auto C = cyclic_sub(F);
        auto Cb = bar_quotient(F);
        auto [Q, pi] = quotient_algebra(K);
        auto FQ = omega(Q, N);
        auto om_pi = omega_map(pi, s.a, Q, N);
        auto c_pi = cyclic_map(pi, N);
        auto b_pi = bar_map(pi, N);
        check_mixed_map(F.mixed, FQ.mixed, om_pi);

        for (std::size_t n = 0; n <= N; ++n) {
            CAPTURE(n);
            CHECK(R.c_rel.dim(int(n)) == upow(d, n + 1) - upow(q, n + 1));
            CHECK(check_short_exact(R.omega_inclusion[n], om_pi.f[n]).all());
            CHECK(check_short_exact(R.c_inclusion[n], c_pi[n]).all());
            if (n >= 1) CHECK(check_short_exact(R.cbar_inclusion[n], b_pi[n]).all());
        }
        for (std::size_t n = 1; n <= N; ++n) {
            CHECK(F.mixed.b(n) * R.omega_inclusion[n] == R.omega_inclusion[n - 1] * R.omega_rel.b(n));
            CHECK(C.d(int(n)) * R.c_inclusion[n] == R.c_inclusion[n - 1] * R.c_rel.d(int(n)));
            CHECK(Cb.d(int(n)) * R.cbar_inclusion[n] == R.cbar_inclusion[n - 1] * R.cbar_rel.d(int(n)));
            CHECK(F.mixed.B(n - 1) * R.omega_inclusion[n - 1] == R.omega_inclusion[n] * R.omega_rel.B(n - 1));
        }

        // C(K:A) ↣ Ω(K:A) ↠ C^bar(K:A)[-1] from the coordinate description.
        std::size_t dd = R.adapted.dim();
        for (std::size_t n = 1; n <= N; ++n) {
            const auto& om = R.omega_index[n];
            Matrix i(om.size(), R.c_index[n].size()), p(R.cbar_index[n].size(), om.size());
            for (std::size_t j = 0; j < R.c_index[n].size(); ++j)
                i.set(std::size_t(std::lower_bound(om.begin(), om.end(), R.c_index[n][j]) - om.begin()), j, Rational(1));
            std::size_t cn = upow(dd, n + 1);
            for (std::size_t j = 0; j < om.size(); ++j)
                if (om[j] >= cn) {
                    auto& cb = R.cbar_index[n];
                    auto it = std::lower_bound(cb.begin(), cb.end(), std::uint32_t(om[j] - cn));
                    REQUIRE(it != cb.end());
                    p.set(std::size_t(it - cb.begin()), j, Rational(1));
                }
            CHECK(check_short_exact(i, p).all());
        }

        // ΩK → Ω(K:A) is a map of mixed complexes.
        auto FK = omega(K.as_algebra(), N);
        CHECK_NOTHROW(check_mixed_map(FK.mixed, R.omega_rel, ideal_to_relative(R)));
        auto ic = ideal_to_relative_cyclic(R);
        auto ib = ideal_to_relative_bar(R);
        auto CK = cyclic_sub(FK);
        auto CbK = bar_quotient(FK);
        for (std::size_t n = 1; n <= N; ++n) {
            CHECK(R.c_rel.d(int(n)) * ic[n] == ic[n - 1] * CK.d(int(n)));
            CHECK(R.cbar_rel.d(int(n)) * ib[n] == ib[n - 1] * CbK.d(int(n)));
        }
    }
}

TEST_CASE("forms: extreme ideals") {
    Algebra a = Algebra::upper_triangular_2();
    std::size_t N = 3;
    auto whole = relative_forms(IdealInclusion::whole(a), N);
    auto F = omega(a, N);
    CHECK(chain_dims(whole.c_rel) == chain_dims(cyclic_sub(F)));
    CHECK(whole.omega_rel.dims() == F.mixed.dims());
    auto none = relative_forms(IdealInclusion::zero(a), N);
    for (std::size_t n = 0; n <= N; ++n) {
        CHECK(none.c_rel.dim(int(n)) == 0);
        CHECK(none.omega_rel.dim(n) == 0);
        CHECK(none.cbar_rel.dim(int(n)) == 0);
    }
}
