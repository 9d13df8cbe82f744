#include "cyclica/towers.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace cyclica {

namespace {

Matrix keep_first(std::size_t k, std::size_t m) { return embed(Matrix::identity(k), k, m, 0, 0); }

SuperMap project_first(const SuperComplex& big, const SuperComplex& small) {
    return {keep_first(small.dim_even(), big.dim_even()), keep_first(small.dim_odd(), big.dim_odd())};
}

SuperMap block_diag(const SuperMap& a, const SuperMap& b) {
    return {direct_sum(a.even, b.even), direct_sum(a.odd, b.odd)};
}

/// Vectorized (row-major) unknown of shape rows × cols.
Matrix vec_rows(std::size_t n) { return Matrix::identity(n); }

SparseVec vectorize(const Matrix& m) {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i)) out.push_back({std::uint32_t(i * m.cols() + e.idx), e.val});
    return out;
}

Matrix unvectorize(const SparseVec& v, std::size_t off, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (const auto& e : v) {
        if (e.idx < off || e.idx >= off + rows * cols) continue;
        std::size_t k = e.idx - off;
        m.set(k / cols, k % cols, e.val);
    }
    return m;
}

}  // namespace

// ---------------------------------------------------------------- Tower

Tower::Tower(std::vector<SuperComplex> levels, std::vector<SuperMap> sigma)
    : levels_(std::move(levels)), sigma_(std::move(sigma)) {
    std::size_t expect = levels_.empty() ? 0 : levels_.size() - 1;
    if (sigma_.size() != expect) throw std::invalid_argument("tower: need one structure map per level above 1");
    for (std::size_t k = 0; k < sigma_.size(); ++k) check_super_map(levels_[k + 1], levels_[k], sigma_[k]);
}

Tower Tower::constant(const SuperComplex& x, std::size_t N, std::optional<SuperMap> s) {
    SuperMap m = s ? *s : super_identity(x);
    return Tower(std::vector<SuperComplex>(N, x), std::vector<SuperMap>(N ? N - 1 : 0, m));
}

Tower Tower::zero(std::size_t N) { return constant(SuperComplex::zero(), N); }

SuperMap Tower::sigma_power(std::size_t from, std::size_t to) const {
    if (from < to || to < 1 || from > size()) throw std::out_of_range("sigma_power: bad levels");
    SuperMap m = super_identity(level(from));
    for (std::size_t n = from; n > to; --n) m = compose(sigma(n), m);
    return m;
}

Tower Tower::truncate(std::size_t N) const {
    N = std::min(N, size());
    return Tower(std::vector<SuperComplex>(levels_.begin(), levels_.begin() + long(N)),
                 std::vector<SuperMap>(sigma_.begin(), sigma_.begin() + long(N ? N - 1 : 0)));
}

// ---------------------------------------------------------------- TowerMap

TowerMap::TowerMap(Tower src, Tower dst, std::vector<std::size_t> shift, std::vector<SuperMap> maps)
    : src_(std::make_shared<const Tower>(std::move(src))),
      dst_(std::make_shared<const Tower>(std::move(dst))),
      shift_(std::move(shift)),
      maps_(std::move(maps)) {
    if (shift_.size() != maps_.size()) throw std::invalid_argument("tower map: shift and maps differ in length");
    if (maps_.size() > dst_->size()) throw std::invalid_argument("tower map: more levels than the target");
    for (std::size_t n = 1; n <= maps_.size(); ++n) {
        std::size_t f = shift_[n - 1];
        if (f < 1 || f > src_->size()) throw std::invalid_argument("tower map: shift outside the source truncation");
        if (n > 1 && f < shift_[n - 2]) throw std::invalid_argument("tower map: shift must be nondecreasing");
        check_super_map(src_->level(f), dst_->level(n), maps_[n - 1]);
        if (n > 1) {
            SuperMap lhs = compose(maps_[n - 2], src_->sigma_power(f, shift_[n - 2]));
            SuperMap rhs = compose(dst_->sigma(n), maps_[n - 1]);
            if (lhs.even != rhs.even || lhs.odd != rhs.odd)
                throw InvariantError("tower map fails compatibility at level " + std::to_string(n));
        }
    }
}

TowerMap TowerMap::identity(const Tower& x) {
    std::vector<std::size_t> shift(x.size());
    std::vector<SuperMap> maps;
    for (std::size_t n = 1; n <= x.size(); ++n) {
        shift[n - 1] = n;
        maps.push_back(super_identity(x.level(n)));
    }
    return TowerMap(x, x, std::move(shift), std::move(maps));
}

TowerMap compose(const TowerMap& g, const TowerMap& f) {
    std::vector<std::size_t> shift;
    std::vector<SuperMap> maps;
    for (std::size_t n = 1; n <= g.size(); ++n) {
        std::size_t h = g.shift(n);
        if (h > f.size()) break;
        shift.push_back(f.shift(h));
        maps.push_back(compose(g.at(n), f.at(h)));
    }
    return TowerMap(f.src(), g.dst(), std::move(shift), std::move(maps));
}

// ---------------------------------------------------------------- fake products

Tower fake_product(const std::vector<SuperComplex>& seq) {
    std::vector<SuperComplex> levels;
    std::vector<SuperMap> sigma;
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        levels.push_back(super_sum(std::vector<SuperComplex>(seq.begin(), seq.begin() + long(n))));
        if (n > 1) sigma.push_back(project_first(levels[n - 1], levels[n - 2]));
    }
    return Tower(std::move(levels), std::move(sigma));
}

TowerMap iota(const Tower& a) {
    Tower prod = fake_product(a.levels());
    std::vector<std::size_t> shift;
    std::vector<SuperMap> maps;
    for (std::size_t n = 1; n <= a.size(); ++n) {
        Matrix e(0, a.level(n).dim_even()), o(0, a.level(n).dim_odd());
        for (std::size_t p = 1; p <= n; ++p) {
            SuperMap s = a.sigma_power(n, p);
            e = vstack(e, s.even);
            o = vstack(o, s.odd);
        }
        shift.push_back(n);
        maps.push_back({std::move(e), std::move(o)});
    }
    return TowerMap(a, std::move(prod), std::move(shift), std::move(maps));
}

// ---------------------------------------------------------------- property (P)

PropertyPReport has_property_P(const Tower& a) {
    PropertyPReport rep;
    std::size_t N = a.size();
    for (std::size_t k = 1; k + 2 <= N; ++k) {
        const SuperComplex& x = a.level(k + 1);  // domain of s_k
        const SuperComplex& y = a.level(k + 2);  // codomain
        SuperMap s2 = a.sigma_power(k + 2, k);
        const SuperMap& s1 = a.sigma(k + 1);
        std::size_t xe = x.dim_even(), xo = x.dim_odd(), ye = y.dim_even(), yo = y.dim_odd();
        std::size_t ne = ye * xe;  // unknowns of s_even come first, then s_odd
        // σ² s = σ in each parity; ∂ s = s ∂ in each parity.
        Matrix eq_se = kron(s2.even, vec_rows(xe));
        Matrix eq_so = kron(s2.odd, vec_rows(xo));
        Matrix c1_e = kron(y.d_even(), vec_rows(xe));
        Matrix c1_o = -kron(vec_rows(yo), x.d_even().transpose());
        Matrix c2_o = kron(y.d_odd(), vec_rows(xo));
        Matrix c2_e = -kron(vec_rows(ye), x.d_odd().transpose());
        Matrix sys = block({{eq_se, Matrix(eq_se.rows(), yo * xo)},
                            {Matrix(eq_so.rows(), ne), eq_so},
                            {c1_e, c1_o},
                            {c2_e, c2_o}});
        SparseVec rhs = vectorize(s1.even);
        for (const auto& e : vectorize(s1.odd)) rhs.push_back({std::uint32_t(e.idx + eq_se.rows()), e.val});
        auto sol = solve(sys, rhs);
        if (!sol) {
            rep.failed_at = k;
            rep.verdict = Verdict::inconclusive;
            return rep;
        }
        rep.witnesses.push_back({unvectorize(*sol, 0, ye, xe), unvectorize(*sol, ne, yo, xo)});
    }
    rep.verdict = Verdict::pass;
    return rep;
}

// ---------------------------------------------------------------- R construction

FibrantReplacement r_fibrant(const Tower& x) {
    std::size_t N = x.size();
    std::vector<SuperComplex> prods;  // prods[m-1] = ⊕_{p≤m} X_p
    for (std::size_t m = 1; m <= N; ++m)
        prods.push_back(super_sum(std::vector<SuperComplex>(x.levels().begin(), x.levels().begin() + long(m))));

    auto D = [&](std::size_t n, int parity) {
        // rows: ⊕_{p≤n} X_p, cols: ⊕_{p≤n+1} X_p
        std::vector<std::vector<Matrix>> grid(n, std::vector<Matrix>(n + 1));
        for (std::size_t p = 1; p <= n; ++p) {
            for (std::size_t q = 1; q <= n + 1; ++q) grid[p - 1][q - 1] = Matrix(x.level(p).dim(parity), x.level(q).dim(parity));
            grid[p - 1][p - 1] = Matrix::identity(x.level(p).dim(parity));
            grid[p - 1][p] = -x.sigma(p + 1).part(parity);
        }
        return block(grid);
    };

    std::vector<SuperComplex> levels;
    std::vector<SuperMap> sigma, rmaps;
    std::vector<std::size_t> shift;
    auto iota_x = iota(x);
    for (std::size_t n = 1; n + 1 <= N; ++n) {
        const SuperComplex& P = prods[n];
        const SuperComplex& Q = prods[n - 1];
        std::size_t p0 = P.dim_even(), p1 = P.dim_odd(), q0 = Q.dim_even(), q1 = Q.dim_odd();
        // even = P0 ⊕ Q1, odd = P1 ⊕ Q0; d(p, q) = (∂p, Dp - ∂q)
        Matrix de = block({{P.d_even(), Matrix(p1, q1)}, {D(n, 0), -Q.d_odd()}});
        Matrix dd = block({{P.d_odd(), Matrix(p0, q0)}, {D(n, 1), -Q.d_even()}});
        levels.emplace_back(p0 + q1, p1 + q0, std::move(de), std::move(dd));
        if (n > 1) {
            const SuperComplex& Pp = prods[n - 1];
            const SuperComplex& Qp = prods[n - 2];
            sigma.push_back({direct_sum(keep_first(Pp.dim_even(), p0), keep_first(Qp.dim_odd(), q1)),
                             direct_sum(keep_first(Pp.dim_odd(), p1), keep_first(Qp.dim_even(), q0))});
        }
        const SuperMap& i = iota_x.at(n + 1);
        rmaps.push_back({vstack(i.even, Matrix(q1, i.even.cols())), vstack(i.odd, Matrix(q0, i.odd.cols()))});
        shift.push_back(n + 1);
    }
    Tower rx(std::move(levels), std::move(sigma));
    TowerMap r(x, rx, std::move(shift), std::move(rmaps));
    return {std::move(rx), std::move(r)};
}

// ---------------------------------------------------------------- pro-triviality

Tower cone_tower(const TowerMap& f) {
    std::vector<SuperComplex> levels;
    std::vector<SuperMap> sigma;
    for (std::size_t n = 1; n <= f.size(); ++n) {
        levels.push_back(super_cone(f.src().level(f.shift(n)), f.dst().level(n), f.at(n)));
        if (n > 1) {
            // even = Y0 ⊕ X1, odd = Y1 ⊕ X0
            SuperMap sy = f.dst().sigma(n);
            SuperMap sx = f.src().sigma_power(f.shift(n), f.shift(n - 1));
            sigma.push_back(block_diag(sy, SuperMap{sx.odd, sx.even}));
        }
    }
    return Tower(std::move(levels), std::move(sigma));
}

ProTrivialityReport is_pro_contractible(const Tower& c, std::size_t window) {
    if (window < 1) throw std::invalid_argument("window must be at least 1");
    ProTrivialityReport rep;
    std::size_t N = c.size();
    rep.max_level = N;
    rep.window = window;
    if (N <= window) return rep;  // nothing can be claimed

    std::vector<std::array<Subquotient, 2>> h(N + 1);
    for (std::size_t n = 1; n <= N; ++n) h[n] = {c.level(n).homology(0), c.level(n).homology(1)};

    bool all = true, stable = true;
    for (std::size_t n = 1; n + window <= N; ++n) {
        LevelWitness lw;
        lw.level = n;
        lw.homology_dim = h[n][0].dim() + h[n][1].dim();
        SuperMap m = super_identity(c.level(n));
        for (std::size_t np = n; np <= N; ++np) {
            if (np > n) m = compose(m, c.sigma(np));
            SuperMap hm = super_homology_map(h[np].data(), h[n].data(), m);
            std::size_t r = rank(hm.even) + rank(hm.odd);
            lw.ranks.push_back(r);
            if (r == 0) {
                lw.witness = np;
                break;
            }
        }
        if (!lw.witness) {
            all = false;
            // ranks[k] belongs to level n + k; compare the window's tail.
            std::size_t first = N - window - n;
            for (std::size_t k = first; k < lw.ranks.size(); ++k)
                if (lw.ranks[k] != lw.ranks[first]) stable = false;
        }
        rep.levels.push_back(std::move(lw));
    }
    rep.verdict = all ? Verdict::pass : stable ? Verdict::fail : Verdict::inconclusive;
    return rep;
}

ProTrivialityReport pro_weq_report(const TowerMap& f, std::size_t window) {
    return is_pro_contractible(cone_tower(f), window);
}

bool is_pro_weq(const TowerMap& f, std::size_t window) {
    return pro_weq_report(f, window).verdict == Verdict::pass;
}

}  // namespace cyclica
