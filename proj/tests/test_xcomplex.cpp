#include <doctest.h>

#include <random>

#include "cyclica/forms.hpp"
#include "cyclica/xcomplex.hpp"
#include "oracle.hpp"

using namespace cyclica;

namespace {

/// Mixed complex with B = 0 whose b-column is the cone of the identity of a
/// random chain complex: M_k = C_k ⊕ C_{k-1}, b = [[d, 1], [0, -d]].
MixedComplex identity_cone_mixed(std::mt19937_64& rng, std::size_t top) {
    std::vector<std::size_t> cd;
    for (std::size_t k = 0; k <= top; ++k) cd.push_back(rng() % 3);
    ChainComplex c = oracle::random_complex(rng, cd);
    std::vector<std::size_t> dims;
    std::vector<Matrix> b, B;
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t lo = k ? cd[k - 1] : 0;
        dims.push_back(cd[k] + lo);
        if (k == 0) {
            b.emplace_back(0, dims[0]);
        } else {
            std::size_t lo2 = k >= 2 ? cd[k - 2] : 0;
            b.push_back(block({{c.d(int(k)), Matrix::identity(lo)}, {Matrix(lo2, cd[k]), -c.d(int(k) - 1)}}));
        }
    }
    for (std::size_t k = 0; k < top; ++k) B.emplace_back(dims[k + 1], dims[k]);
    return MixedComplex(std::move(dims), std::move(b), std::move(B));
}

MixedMap identity_mixed(const MixedComplex& m) {
    MixedMap f;
    for (std::size_t i = 0; i <= m.max_degree(); ++i) f.f.push_back(Matrix::identity(m.dim(i)));
    return f;
}

}  // namespace

TEST_CASE("xcomplex: concentrated mixed complex") {
    auto m = MixedComplex::concentrated(3, 4);
    auto l = x_level(m, 1);
    CHECK(l.x.dim_even() == 3);
    CHECK(l.x.dim_odd() == 0);
    CHECK(l.x.d_even().is_zero());
    auto t = x_tower(m, 3);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(t.tower.level(n).dim_even() == 3);
    CHECK(t.tower.sigma(3).even == Matrix::identity(3));
    CHECK_THROWS_AS(x_tower(m, 4), std::invalid_argument);
    CHECK_THROWS_AS(x_level(m, 4), std::invalid_argument);
}

TEST_CASE("xcomplex: dimensions from ranks of b") {
    auto F = omega(Algebra::ground_field(), 4);
    auto l1 = x_level(F.mixed, 1);
    std::size_t top = F.mixed.dim(1) - oracle::rank(F.mixed.b(2));
    CHECK(l1.x.dim_odd() == top);
    CHECK(l1.x.dim_even() == F.mixed.dim(0));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 4; ++trial) {
        Algebra a = oracle::random_algebra(rng, 2);
        auto G = omega(a, 5);
        for (std::size_t n = 1; n <= 4; ++n) {
            auto l = x_level(G.mixed, n);
            std::size_t expect[2] = {0, 0};
            for (std::size_t i = 0; i < n; ++i) expect[i % 2] += G.mixed.dim(i);
            expect[n % 2] += G.mixed.dim(n) - oracle::rank(G.mixed.b(n + 1));
            CHECK(l.x.dim_even() == expect[0]);
            CHECK(l.x.dim_odd() == expect[1]);
            CHECK(l.summand_dim(n) == G.mixed.dim(n) - oracle::rank(G.mixed.b(n + 1)));
        }
    }
}

TEST_CASE("xcomplex: structure maps are surjective and compose") {
    std::mt19937_64 rng(6);
    Algebra a = oracle::random_algebra(rng, 2);
    auto F = omega(a, 6);
    auto t = x_tower(F.mixed, 5);
    MixedMap id = identity_mixed(F.mixed);
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto& s = t.tower.sigma(n);
        CHECK(oracle::rank(s.even) == t.tower.level(n - 1).dim_even());
        CHECK(oracle::rank(s.odd) == t.tower.level(n - 1).dim_odd());
    }
    for (std::size_t n = 1; n + 2 <= 5; ++n) {
        SuperMap two = t.tower.sigma_power(n + 2, n);
        SuperMap direct = x_level_map(t.levels[n + 1], t.levels[n - 1], id);
        CHECK(two.even == direct.even);
        CHECK(two.odd == direct.odd);
    }
}

TEST_CASE("xcomplex: acyclic mixed complexes give pro-contractible towers") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 4; ++trial) {
        auto m = identity_cone_mixed(rng, 7);
        auto t = x_tower(m, 6);
        auto rep = is_pro_contractible(t.tower, 2);
        CHECK(rep.verdict == Verdict::pass);
    }
}

TEST_CASE("xcomplex: split inclusions with acyclic cokernel give pro weak equivalences") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 3; ++trial) {
        auto m = omega(oracle::random_algebra(rng, 2), 6).mixed;
        auto c = identity_cone_mixed(rng, 6);
        // M ⊕ cone with B = 0 on the cone summand
        std::vector<std::size_t> dims;
        std::vector<Matrix> b, B;
        MixedMap inc;
        for (std::size_t k = 0; k <= 6; ++k) {
            dims.push_back(m.dim(k) + c.dim(k));
            b.push_back(k == 0 ? Matrix(0, dims[0]) : direct_sum(m.b(k), c.b(k)));
            inc.f.push_back(embed(Matrix::identity(m.dim(k)), dims[k], m.dim(k), 0, 0));
        }
        for (std::size_t k = 0; k < 6; ++k) B.push_back(direct_sum(m.B(k), c.B(k)));
        MixedComplex big(dims, b, B);
        check_mixed_map(m, big, inc);
        auto xm = x_tower(m, 5), xb = x_tower(big, 5);
        CHECK(is_pro_weq(x_tower_map(xm, xb, inc)));
    }
}

TEST_CASE("xcomplex: diagonal towers") {
    auto m = omega(Algebra::truncated_polynomial(2), 5).mixed;
    MixedTower mt{std::vector<MixedComplex>(4, m), std::vector<MixedMap>(3, identity_mixed(m))};
    auto d = x_diag(mt, 4);
    auto t = x_tower(m, 4);
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(d.tower.level(n).dim_even() == t.tower.level(n).dim_even());
        CHECK(d.tower.level(n).d_even() == t.tower.level(n).d_even());
        if (n > 1) CHECK(d.tower.sigma(n).odd == t.tower.sigma(n).odd);
    }
    auto z = MixedComplex::concentrated(0, 5);
    MixedTower zt{std::vector<MixedComplex>(3, z), std::vector<MixedMap>(2, identity_mixed(z))};
    auto dz = x_diag(zt, 3);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(dz.tower.level(n).total_dim() == 0);
}
