#pragma once
// Independent dense reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "cyclica/matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense to_dense(const cyclica::Matrix& m) {
    Dense d(m.rows(), std::vector<mpq_class>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i)) d[i][e.idx] = e.val.to_mpq();
    return d;
}

/// Textbook Gauss-Jordan; returns the RREF and writes the rank.
inline Dense rref(Dense a, std::size_t* rank_out = nullptr) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    if (rank_out) *rank_out = r;
    return a;
}

inline std::size_t rank(const cyclica::Matrix& m) {
    std::size_t r = 0;
    rref(to_dense(m), &r);
    return r;
}

/// Random small-integer matrix with the given density (percent of nonzeros).
inline cyclica::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     int density = 40, int range = 3) {
    cyclica::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (int(rng() % 100) < density) {
                long long v = (long long)(rng() % (2 * range + 1)) - range;
                m.set(i, j, cyclica::Rational(v));
            }
    return m;
}

}  // namespace oracle

#include "cyclica/complexes.hpp"
#include "cyclica/linalg.hpp"

namespace oracle {

/// Random complex in degrees 0..dims.size()-1 with d built from kernels so d² = 0.
inline cyclica::ChainComplex random_complex(std::mt19937_64& rng, const std::vector<std::size_t>& dims,
                                            int density = 50) {
    std::vector<cyclica::Matrix> d;
    cyclica::Matrix prev(0, dims[0]);
    for (std::size_t n = 1; n < dims.size(); ++n) {
        auto k = cyclica::kernel(prev);
        std::size_t r = rng() % (k.cols() + 1);
        auto dn = k * random_matrix(rng, k.cols(), dims[n], density);
        if (r == 0) dn = cyclica::Matrix(dims[n - 1], dims[n]);
        d.push_back(dn);
        prev = dn;
    }
    return cyclica::ChainComplex::from_boundaries(dims, d);
}

/// Homology dimension by dense elimination.
inline std::size_t homology_dim(const cyclica::ChainComplex& c, int n) {
    return c.dim(n) - oracle::rank(c.d(n)) - oracle::rank(c.d(n + 1));
}

}  // namespace oracle

#include "cyclica/algebra.hpp"
#include "cyclica/towers.hpp"

namespace oracle {

/// Random invertible integer matrix: unit upper triangular times unit lower triangular.
inline cyclica::Matrix random_invertible(std::mt19937_64& rng, std::size_t n, int range = 2) {
    cyclica::Matrix u = cyclica::Matrix::identity(n), l = cyclica::Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            u.set(i, j, cyclica::Rational((long long)(rng() % (2 * range + 1)) - range));
            l.set(j, i, cyclica::Rational((long long)(rng() % (2 * range + 1)) - range));
        }
    return u * l;
}

/// A random associative algebra: a product of small standard algebras in a
/// random basis. Associativity holds by construction and is rechecked on load.
inline cyclica::Algebra random_algebra(std::mt19937_64& rng, std::size_t dim) {
    using cyclica::Algebra;
    auto piece = [&](std::size_t k) -> Algebra {
        switch (k == 1 ? rng() % 2 : k == 3 ? rng() % 3 : rng() % 2) {
        case 0: return k == 1 ? Algebra::ground_field() : Algebra::truncated_polynomial(k);
        case 1: return Algebra::zero_multiplication(k);
        default: return Algebra::upper_triangular_2();
        }
    };
    Algebra a = Algebra::zero_algebra();
    std::size_t left = dim;
    while (left > 0) {
        std::size_t k = 1 + rng() % std::min<std::size_t>(left, 3);
        a = a.dim() == 0 ? piece(k) : Algebra::product(a, piece(k));
        left -= k;
    }
    return a.base_change(random_invertible(rng, dim), "random");
}

}  // namespace oracle

namespace oracle {

/// Random supercomplex: a random chain complex folded by parity, plus a
/// random 2-periodic piece to exercise genuinely ℤ/2-graded differentials.
inline cyclica::SuperComplex random_super(std::mt19937_64& rng, std::size_t max_dim = 3) {
    std::vector<std::size_t> dims;
    for (int k = 0; k < 3; ++k) dims.push_back(rng() % (max_dim + 1));
    auto c = cyclica::super_of_chain(random_complex(rng, dims));
    if (rng() % 2) {
        // ℚ even ⇄ ℚ odd with d_even = 1, d_odd = 0 (acyclic summand)
        cyclica::Matrix one(1, 1);
        one.set(0, 0, cyclica::Rational(1));
        c = cyclica::super_sum({c, cyclica::SuperComplex(1, 1, one, cyclica::Matrix(1, 1))});
    }
    return c;
}

/// Random even chain map X → Y: a random combination of a basis of the
/// even cycles of the super Hom complex.
inline cyclica::SuperMap random_super_map(std::mt19937_64& rng, const cyclica::SuperComplex& x,
                                          const cyclica::SuperComplex& y, int zero_percent = 10) {
    auto h = cyclica::hom_super(x, y);
    auto z = cyclica::kernel_vectors(h.d_even());
    cyclica::SparseVec v;
    if (int(rng() % 100) >= zero_percent)
        for (const auto& b : z) cyclica::axpy(v, cyclica::Rational((long long)(rng() % 5) - 2), b);
    std::size_t x0 = x.dim_even(), x1 = x.dim_odd(), y0 = y.dim_even(), y1 = y.dim_odd();
    cyclica::SuperMap f{cyclica::Matrix(y0, x0), cyclica::Matrix(y1, x1)};
    for (const auto& e : v) {
        if (e.idx < y0 * x0)
            f.even.set(e.idx / x0, e.idx % x0, e.val);
        else
            f.odd.set((e.idx - y0 * x0) / x1, (e.idx - y0 * x0) % x1, e.val);
    }
    return f;
}

/// Whether f is a quasi-isomorphism, by dense ranks of the cone differentials.
inline bool super_quasi_iso(const cyclica::SuperComplex& x, const cyclica::SuperComplex& y,
                            const cyclica::SuperMap& f) {
    auto c = cyclica::super_cone(x, y, f);
    std::size_t re = oracle::rank(c.d_even()), ro = oracle::rank(c.d_odd());
    return c.dim_even() == re + ro && c.dim_odd() == re + ro;
}

/// A random tower X_1 ← ... ← X_N with random chain maps as σ.
inline cyclica::Tower random_tower(std::mt19937_64& rng, std::size_t N, std::size_t max_dim = 3) {
    std::vector<cyclica::SuperComplex> levels;
    std::vector<cyclica::SuperMap> sigma;
    for (std::size_t n = 0; n < N; ++n) levels.push_back(random_super(rng, max_dim));
    for (std::size_t n = 1; n < N; ++n) sigma.push_back(random_super_map(rng, levels[n], levels[n - 1]));
    return cyclica::Tower(std::move(levels), std::move(sigma));
}

/// HC_n(ℚ) from the (b, B) bicomplex of the unnormalized Hochschild complex:
/// C_n = ℚ spanned by 1⊗...⊗1, b = Σ(-1)^i, B = (1 - t) s N with t = (-1)^n.
inline std::vector<std::size_t> cyclic_homology_of_ground_field(int top) {
    auto b = [](int n) { return n >= 1 && n % 2 == 0 ? 1 : 0; };      // C_n → C_{n-1}
    auto B = [](int n) { return n % 2 == 0 ? 2 * (n + 1) : 0; };      // C_n → C_{n+1}
    // Tot_n = ⊕_{p ≥ 0} C_{n-2p}; component p sits in degree n - 2p.
    auto D = [&](int n) {  // Tot_n → Tot_{n-1}
        int rows = (n - 1) / 2 + 1, cols = n / 2 + 1;
        Dense m(std::size_t(std::max(rows, 0)), std::vector<mpq_class>(std::size_t(cols)));
        for (int p = 0; p < cols; ++p) {
            int deg = n - 2 * p;
            if (deg >= 1 && p < rows) m[std::size_t(p)][std::size_t(p)] += b(deg);       // to C_{deg-1}
            if (p >= 1 && p - 1 < rows) m[std::size_t(p - 1)][std::size_t(p)] += B(deg);  // to C_{deg+1}
        }
        return m;
    };
    auto rk = [](Dense m) {
        std::size_t r = 0;
        if (!m.empty() && !m[0].empty()) rref(std::move(m), &r);
        return r;
    };
    std::vector<std::size_t> hc;
    for (int n = 0; n <= top; ++n) {
        std::size_t dim = std::size_t(n / 2 + 1);
        std::size_t out = n == 0 ? 0 : rk(D(n));
        hc.push_back(dim - out - rk(D(n + 1)));
    }
    return hc;
}

}  // namespace oracle
