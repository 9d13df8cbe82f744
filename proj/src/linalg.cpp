#include "cyclica/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace cyclica {

namespace {

/// Scratch space for sparse elimination. Only touched slots are ever dirty,
/// so reuse across calls costs nothing beyond the first resize.
struct Scratch {
    std::vector<Rational> val;
    std::vector<char> queued;
    void ensure(std::size_t n) {
        if (val.size() < n) {
            val.resize(n);
            queued.resize(n, 0);
        }
    }
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

}  // namespace

SparseVec Echelon::reduce(const SparseVec& v) const { return reduce(v, nullptr); }

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* combo) const {
    SparseVec out;
    if (combo) combo->clear();
    if (v.empty()) return out;
    if (v.back().idx >= n_) throw std::out_of_range("vector exceeds echelon ambient dimension");
    if (rows_.empty()) return v;
    auto& s = scratch();
    s.ensure(n_);
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& e : v) {
        s.val[e.idx] = e.val;
        s.queued[e.idx] = 1;
        heap.push(e.idx);
    }
    std::vector<Entry> used;
    while (!heap.empty()) {
        std::uint32_t j = heap.top();
        heap.pop();
        s.queued[j] = 0;
        if (s.val[j].is_zero()) continue;
        auto r = pivot_row_[j];
        if (r < 0) {
            out.push_back({j, std::move(s.val[j])});
            s.val[j] = Rational();
            continue;
        }
        Rational c = std::move(s.val[j]);
        s.val[j] = Rational();
        const auto& row = rows_[std::size_t(r)];
        for (std::size_t k = 1; k < row.size(); ++k) {
            auto idx = row[k].idx;
            s.val[idx] -= c * row[k].val;
            if (!s.queued[idx]) {
                s.queued[idx] = 1;
                heap.push(idx);
            }
        }
        if (combo) used.push_back({std::uint32_t(r), std::move(c)});
    }
    if (combo) *combo = normalize(std::move(used));
    return out;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rational inv = r.front().val.inverse();
    if (!inv.is_one()) r = scaled(r, inv);
    pivot_row_[r.front().idx] = std::int32_t(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::uint32_t> Echelon::pivots() const {
    std::vector<std::uint32_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.front().idx);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<std::uint32_t> Echelon::non_pivots() const {
    std::vector<std::uint32_t> p;
    for (std::uint32_t c = 0; c < n_; ++c)
        if (pivot_row_[c] < 0) p.push_back(c);
    return p;
}

std::vector<SparseVec> Echelon::reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().idx > rows_[b].front().idx; });
    Echelon fin(n_);
    for (auto i : order) fin.insert(rows_[i]);
    std::vector<SparseVec> out = fin.rows_;
    std::reverse(out.begin(), out.end());
    return out;
}

RrefResult rref(const Matrix& m) {
    Echelon e(m.cols());
    for (const auto& r : m.row_data()) e.insert(r);
    RrefResult res;
    res.rank = e.rank();
    res.pivot_cols = e.pivots();
    auto rows = e.reduced_rows();
    rows.resize(m.rows());
    res.matrix = Matrix::from_rows(m.cols(), std::move(rows));
    return res;
}

std::size_t rank(const Matrix& m) {
    // Eliminate in whichever orientation has the shorter vectors.
    if (m.cols() <= m.rows()) {
        Echelon e(m.cols());
        for (const auto& r : m.row_data()) e.insert(r);
        return e.rank();
    }
    return column_space(m).rank();
}

std::vector<SparseVec> kernel_vectors(const LinMap& f) {
    Echelon e(f.cols());
    std::vector<std::size_t> order(f.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f.row(a).size() < f.row(b).size(); });
    for (auto i : order) e.insert(f.row(i));
    auto rows = e.reduced_rows();
    std::vector<std::int64_t> free_slot(f.cols(), -1);
    std::vector<std::vector<Entry>> raw;
    for (std::uint32_t c = 0; c < f.cols(); ++c) {
        if (!e.is_pivot(c)) {
            free_slot[c] = std::int64_t(raw.size());
            raw.push_back({{c, Rational(1)}});
        }
    }
    for (const auto& r : rows) {
        auto p = r.front().idx;
        for (std::size_t k = 1; k < r.size(); ++k)
            raw[std::size_t(free_slot[r[k].idx])].push_back({p, -r[k].val});
    }
    std::vector<SparseVec> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.push_back(normalize(std::move(v)));
    return out;
}

Matrix kernel(const LinMap& f) { return Matrix::from_columns(f.cols(), kernel_vectors(f)); }

Echelon column_space(const LinMap& f) {
    Echelon e(f.rows());
    for (const auto& c : f.columns()) e.insert(c);
    return e;
}

std::optional<SparseVec> solve(const LinMap& f, const SparseVec& y) {
    auto cols = f.columns();
    Subquotient q(f.rows(), cols, {});
    // Representatives are columns in order; recover their indices.
    std::vector<std::uint32_t> chosen;
    {
        Echelon e(f.rows());
        for (std::uint32_t j = 0; j < cols.size(); ++j)
            if (e.insert(cols[j])) chosen.push_back(j);
    }
    SparseVec c;
    try {
        c = q.coords(y);
    } catch (const InvariantError&) {
        return std::nullopt;
    }
    SparseVec x;
    for (const auto& e : c) x.push_back({chosen[e.idx], e.val});
    return normalize(std::move(x));
}

std::size_t homology_dim(const LinMap& d_in, const LinMap& d_out) {
    if (d_in.rows() != d_out.cols()) throw std::invalid_argument("homology_dim: shape mismatch");
    if (!(d_out * d_in).is_zero()) throw InvariantError("homology_dim: d_out∘d_in ≠ 0");
    return d_out.cols() - rank(d_out) - rank(d_in);
}

Subquotient::Subquotient(std::size_t ambient, const std::vector<SparseVec>& z_span,
                         const std::vector<SparseVec>& b_span)
    : n_(ambient), b_(ambient), h_(ambient) {
    for (const auto& v : b_span) b_.insert(v);
    for (const auto& z : z_span) {
        SparseVec r = b_.reduce(z);
        if (r.empty()) continue;
        SparseVec c;
        SparseVec rem = h_.reduce(r, &c);
        if (rem.empty()) continue;
        auto t = std::uint32_t(reps_.size());
        reps_.push_back(z);
        // rem = ẑ_t − Σ c_j row_j, with row_j = Σ combo_j[k] ẑ_k.
        SparseVec combo = unit_vec(t);
        for (const auto& e : c) axpy(combo, -e.val, h_combo_[e.idx]);
        Rational inv = rem.front().val.inverse();
        h_.insert(rem);
        h_combo_.push_back(scaled(combo, inv));
    }
    for (const auto& v : b_span)
        if (!h_.reduce(b_.reduce(v)).empty()) throw InvariantError("subquotient: B ⊄ Z");
}

SparseVec Subquotient::coords(const SparseVec& z) const {
    SparseVec c;
    SparseVec rem = h_.reduce(b_.reduce(z), &c);
    if (!rem.empty()) throw InvariantError("subquotient: vector not in Z");
    SparseVec out;
    for (const auto& e : c) axpy(out, e.val, h_combo_[e.idx]);
    return out;
}

bool Subquotient::is_zero_class(const SparseVec& z) const { return coords(z).empty(); }

Subquotient homology(const LinMap& d_in, const LinMap& d_out) {
    if (d_in.rows() != d_out.cols()) throw std::invalid_argument("homology: shape mismatch");
    if (!(d_out * d_in).is_zero()) throw InvariantError("homology: d_out∘d_in ≠ 0");
    return Subquotient(d_out.cols(), kernel_vectors(d_out), d_in.columns());
}

LinMap induced_map(const LinMap& f, const Subquotient& src, const Subquotient& dst) {
    if (f.cols() != src.ambient() || f.rows() != dst.ambient())
        throw std::invalid_argument("induced_map: shape mismatch");
    std::vector<SparseVec> cols;
    cols.reserve(src.dim());
    for (const auto& z : src.representatives()) cols.push_back(dst.coords(f.apply(z)));
    return Matrix::from_columns(dst.dim(), cols);
}

LinMap induced_map_on_homology(const LinMap& f, const LinMap& d_in, const LinMap& d_out,
                               const LinMap& d_in2, const LinMap& d_out2) {
    auto src = homology(d_in, d_out);
    auto dst = homology(d_in2, d_out2);
    for (const auto& b : d_in.columns())
        if (!dst.is_zero_class(f.apply(b))) throw InvariantError("induced_map_on_homology: not a chain map");
    try {
        return induced_map(f, src, dst);
    } catch (const InvariantError&) {
        throw InvariantError("induced_map_on_homology: not a chain map");
    }
}

}  // namespace cyclica
