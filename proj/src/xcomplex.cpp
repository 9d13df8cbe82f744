#include "cyclica/xcomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclica {

namespace {

std::size_t parity_of(std::size_t i) { return i % 2; }

void add_block(Matrix& dst, const Matrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) dst.add_to(r0 + r, c0 + e.idx, e.val);
}

/// Source columns of summand i in M_i: all coordinates, or the top basis.
Matrix source_restrict(const Matrix& m, const XLevel& lvl, std::size_t i) {
    return i == lvl.n ? m.select_cols(lvl.top_basis) : m;
}

MixedMap identity_map(const MixedComplex& m) {
    MixedMap id;
    for (std::size_t i = 0; i <= m.max_degree(); ++i) id.f.push_back(Matrix::identity(m.dim(i)));
    return id;
}

}  // namespace

std::size_t XLevel::summand_dim(std::size_t i) const { return i < dims.size() ? dims[i] : 0; }

std::vector<std::uint32_t> XLevel::summand_indices(std::size_t i) const {
    std::vector<std::uint32_t> idx;
    for (std::size_t k = 0; k < summand_dim(i); ++k) idx.push_back(std::uint32_t(offset[i] + k));
    return idx;
}

Matrix XLevel::top_projection() const {
    std::size_t amb = top_image.ambient();
    std::vector<std::uint32_t> pos(amb, std::uint32_t(-1));
    for (std::size_t k = 0; k < top_basis.size(); ++k) pos[top_basis[k]] = std::uint32_t(k);
    std::vector<SparseVec> cols(amb);
    for (std::size_t c = 0; c < amb; ++c) {
        SparseVec r = top_image.reduce(unit_vec(std::uint32_t(c)));
        for (auto& e : r) e.idx = pos[e.idx];
        cols[c] = normalize(std::move(r));
    }
    return Matrix::from_columns(top_basis.size(), cols);
}

XLevel x_level(const MixedComplex& m, std::size_t n) {
    if (m.max_degree() < n + 1)
        throw std::invalid_argument("X^" + std::to_string(n) + " needs the mixed complex up to degree " +
                                    std::to_string(n + 1));
    XLevel l;
    l.n = n;
    l.top_image = column_space(m.b(n + 1));
    l.top_basis = l.top_image.non_pivots();

    std::size_t tot[2] = {0, 0};
    l.offset.assign(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        l.dims.push_back(i == n ? l.top_basis.size() : m.dim(i));
        l.offset[i] = tot[parity_of(i)];
        tot[parity_of(i)] += l.dims[i];
    }

    Matrix top_proj = l.top_projection();
    Matrix d[2] = {Matrix(tot[1], tot[0]), Matrix(tot[0], tot[1])};
    for (std::size_t i = 0; i <= n; ++i) {
        Matrix& dp = d[parity_of(i)];
        if (i >= 1) add_block(dp, source_restrict(m.b(i), l, i), l.offset[i - 1], l.offset[i]);
        if (i < n) {
            Matrix B = m.B(i);
            if (i + 1 == n) B = top_proj * B;
            add_block(dp, B, l.offset[i + 1], l.offset[i]);
        }
    }
    l.x = SuperComplex(tot[0], tot[1], std::move(d[0]), std::move(d[1]));
    return l;
}

SuperMap x_level_map(const XLevel& src, const XLevel& dst, const MixedMap& f) {
    if (src.n < dst.n) throw std::invalid_argument("x_level_map: source level below target level");
    if (f.f.size() <= dst.n) throw std::invalid_argument("x_level_map: mixed map too short");
    Matrix out[2] = {Matrix(dst.x.dim_even(), src.x.dim_even()), Matrix(dst.x.dim_odd(), src.x.dim_odd())};
    Matrix dst_top = dst.top_projection();
    for (std::size_t i = 0; i <= dst.n; ++i) {
        Matrix fi = source_restrict(f.f[i], src, i);
        if (i == dst.n) fi = dst_top * fi;
        add_block(out[parity_of(i)], fi, dst.offset[i], src.offset[i]);
    }
    return {std::move(out[0]), std::move(out[1])};
}

XTower x_tower(const MixedComplex& m, std::size_t N) {
    if (m.max_degree() < N + 1) throw std::invalid_argument("x_tower: mixed complex truncated below N+1");
    XTower t;
    std::vector<SuperComplex> levels;
    std::vector<SuperMap> sigma;
    MixedMap id = identity_map(m);
    for (std::size_t n = 1; n <= N; ++n) {
        t.levels.push_back(x_level(m, n));
        levels.push_back(t.levels.back().x);
        if (n > 1) sigma.push_back(x_level_map(t.levels[n - 1], t.levels[n - 2], id));
    }
    t.tower = Tower(std::move(levels), std::move(sigma));
    return t;
}

XTower x_diag(const MixedTower& mt, std::size_t N) {
    if (mt.levels.size() < N) throw std::invalid_argument("x_diag: fewer mixed levels than N");
    if (mt.maps.size() + 1 < N) throw std::invalid_argument("x_diag: missing tower maps");
    XTower t;
    std::vector<SuperComplex> levels;
    std::vector<SuperMap> sigma;
    for (std::size_t n = 1; n <= N; ++n) {
        t.levels.push_back(x_level(mt.levels[n - 1], n));
        levels.push_back(t.levels.back().x);
        if (n > 1) sigma.push_back(x_level_map(t.levels[n - 1], t.levels[n - 2], mt.maps[n - 2]));
    }
    t.tower = Tower(std::move(levels), std::move(sigma));
    return t;
}

TowerMap x_tower_map(const XTower& src, const XTower& dst, const MixedMap& f) {
    std::size_t N = std::min(src.levels.size(), dst.levels.size());
    std::vector<std::size_t> shift;
    std::vector<SuperMap> maps;
    for (std::size_t n = 1; n <= N; ++n) {
        shift.push_back(n);
        maps.push_back(x_level_map(src.levels[n - 1], dst.levels[n - 1], f));
    }
    return TowerMap(src.tower, dst.tower, std::move(shift), std::move(maps));
}

}  // namespace cyclica
