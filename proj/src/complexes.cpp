#include "cyclica/complexes.hpp"

#include <algorithm>
#include <climits>

namespace cyclica {

namespace {

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

// ---------------------------------------------------------------- ChainComplex

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix> d, bool truncated)
    : lo_(lo), dims_(std::move(dims)), d_(std::move(d)), truncated_(truncated) {
    if (d_.size() != dims_.size()) throw std::invalid_argument("chain complex: need one differential per degree");
    for (std::size_t k = 0; k < dims_.size(); ++k)
        check_shape(d_[k], k == 0 ? 0 : dims_[k - 1], dims_[k], "chain complex differential");
    for (std::size_t k = 2; k < dims_.size(); ++k)
        if (!(d_[k - 1] * d_[k]).is_zero())
            throw InvariantError("chain complex: d∘d ≠ 0 at degree " + std::to_string(lo_ + int(k)));
}

ChainComplex ChainComplex::from_boundaries(std::vector<std::size_t> dims, const std::vector<Matrix>& d_from_1,
                                           bool truncated) {
    std::vector<Matrix> d;
    d.emplace_back(0, dims.empty() ? 0 : dims[0]);
    for (const auto& m : d_from_1) d.push_back(m);
    return ChainComplex(0, std::move(dims), std::move(d), truncated);
}

ChainComplex ChainComplex::concentrated(std::size_t dim, int degree) {
    return ChainComplex(degree, {dim}, {Matrix(0, dim)});
}

std::size_t ChainComplex::dim(int n) const {
    if (n < lo_ || n > max_degree()) return 0;
    return dims_[std::size_t(n - lo_)];
}

Matrix ChainComplex::d(int n) const {
    if (n > lo_ && n <= max_degree()) return d_[std::size_t(n - lo_)];
    return Matrix(dim(n - 1), dim(n));
}

Subquotient ChainComplex::homology(int n) const { return cyclica::homology(d(n + 1), d(n)); }

std::size_t ChainComplex::homology_dim(int n) const {
    std::size_t r_out = rank(d(n)), r_in = rank(d(n + 1));
    return dim(n) - r_out - r_in;
}

// ---------------------------------------------------------------- ChainMap

ChainMap::ChainMap(ChainComplex src, ChainComplex dst, int lo, std::vector<Matrix> maps)
    : src_(std::make_shared<const ChainComplex>(std::move(src))),
      dst_(std::make_shared<const ChainComplex>(std::move(dst))),
      lo_(lo),
      f_(std::move(maps)) {
    for (std::size_t k = 0; k < f_.size(); ++k) {
        int n = lo_ + int(k);
        check_shape(f_[k], dst_->dim(n), src_->dim(n), "chain map component");
    }
    int a = std::min(src_->min_degree(), dst_->min_degree());
    int b = std::max(src_->max_degree(), dst_->max_degree()) + 1;
    for (int n = a; n <= b; ++n)
        if (dst_->d(n) * at(n) != at(n - 1) * src_->d(n))
            throw InvariantError("not a chain map at degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::vector<Matrix> f;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) f.push_back(Matrix::identity(c.dim(n)));
    return ChainMap(c, c, c.min_degree(), std::move(f));
}

ChainMap ChainMap::zero(ChainComplex src, ChainComplex dst) {
    return ChainMap(std::move(src), std::move(dst), 0, {});
}

Matrix ChainMap::at(int n) const {
    int k = n - lo_;
    if (k >= 0 && k < int(f_.size())) return f_[std::size_t(k)];
    return Matrix(dst_->dim(n), src_->dim(n));
}

ChainComplex cone(const ChainMap& f) {
    const auto& A = f.src();
    const auto& B = f.dst();
    int lo = std::min(B.empty() ? INT_MAX : B.min_degree(), A.empty() ? INT_MAX : A.min_degree() + 1);
    int hi = std::max(B.empty() ? INT_MIN : B.max_degree(), A.empty() ? INT_MIN : A.max_degree() + 1);
    if (lo > hi) return ChainComplex();
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;
    for (int n = lo; n <= hi; ++n) {
        dims.push_back(B.dim(n) + A.dim(n - 1));
        Matrix dn = block({{B.d(n), f.at(n - 1)}, {Matrix(A.dim(n - 2), B.dim(n)), -A.d(n - 1)}});
        if (n == lo) dn = Matrix(0, dims.back());
        d.push_back(std::move(dn));
    }
    return ChainComplex(lo, std::move(dims), std::move(d), A.truncated() || B.truncated());
}

ChainMap cone_inclusion(const ChainMap& f) {
    ChainComplex c = cone(f);
    std::vector<Matrix> m;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        m.push_back(embed(Matrix::identity(f.dst().dim(n)), c.dim(n), f.dst().dim(n), 0, 0));
    int lo = c.min_degree();
    return ChainMap(f.dst(), c, lo, std::move(m));
}

ChainMap cone_projection(const ChainMap& f) {
    ChainComplex c = cone(f);
    const auto& A = f.src();
    // A[-1] in degree n is A_{n-1} with differential -d.
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        dims.push_back(A.dim(n - 1));
        d.push_back(n == c.min_degree() ? Matrix(0, A.dim(n - 1)) : -A.d(n - 1));
    }
    ChainComplex shifted(c.min_degree(), dims, std::move(d));
    std::vector<Matrix> m;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        m.push_back(embed(Matrix::identity(A.dim(n - 1)), A.dim(n - 1), c.dim(n), 0, f.dst().dim(n)));
    return ChainMap(c, shifted, c.min_degree(), std::move(m));
}

QuasiIsoReport quasi_iso_report(const ChainMap& f) {
    const auto& A = f.src();
    const auto& B = f.dst();
    ChainComplex c = cone(f);
    QuasiIsoReport rep;
    if (c.empty()) {
        rep.verdict = true;
        return rep;
    }
    // Cone degree k needs B_{k+1} and A_k in full.
    int top = c.max_degree();
    if (B.truncated()) top = std::min(top, B.max_degree() - 1);
    if (A.truncated()) top = std::min(top, A.max_degree());
    rep.first_degree = c.min_degree();
    rep.verdict = true;
    for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
        std::size_t h = c.homology_dim(k);
        if (k <= top) {
            rep.cone_homology.push_back(h);
            if (h != 0) rep.verdict = false;
        } else {
            rep.edge_degrees.push_back(k);
            rep.edge_homology.push_back(h);
        }
    }
    return rep;
}

bool is_quasi_iso(const ChainMap& f) { return quasi_iso_report(f).verdict; }

// ---------------------------------------------------------------- Hom complexes

namespace {

/// Component layout of Hom(A, B)_n: maps A_r → B_{r+n}, stacked by r.
struct HomLayout {
    int lo = 0, hi = -1, a_lo = 0, a_hi = -1;
    std::vector<std::vector<std::size_t>> offset;  // [n - lo][r - a_lo]
    std::vector<std::size_t> total;

    HomLayout(const ChainComplex& a, const ChainComplex& b) {
        if (a.empty() || b.empty()) return;
        a_lo = a.min_degree();
        a_hi = a.max_degree();
        lo = b.min_degree() - a_hi;
        hi = b.max_degree() - a_lo;
        for (int n = lo; n <= hi; ++n) {
            std::vector<std::size_t> off;
            std::size_t t = 0;
            for (int r = a_lo; r <= a_hi; ++r) {
                off.push_back(t);
                t += a.dim(r) * b.dim(r + n);
            }
            offset.push_back(std::move(off));
            total.push_back(t);
        }
    }
    [[nodiscard]] std::size_t dim(int n) const { return n < lo || n > hi ? 0 : total[std::size_t(n - lo)]; }
    [[nodiscard]] std::size_t off(int n, int r) const { return offset[std::size_t(n - lo)][std::size_t(r - a_lo)]; }
};

void add_block(Matrix& m, const Matrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < blk.rows(); ++i) {
        if (blk.row(i).empty()) continue;
        axpy(m.row_mut(r0 + i), Rational(1), shifted(blk.row(i), std::uint32_t(c0)));
    }
}

}  // namespace

ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b) {
    HomLayout L(a, b);
    if (L.lo > L.hi) return ChainComplex();
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;
    for (int n = L.lo; n <= L.hi; ++n) {
        dims.push_back(L.dim(n));
        Matrix D(L.dim(n - 1), L.dim(n));
        if (n > L.lo) {
            Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);  // -(-1)^n
            for (int r = L.a_lo; r <= L.a_hi; ++r) {
                std::size_t ar = a.dim(r), br = b.dim(r + n);
                if (ar == 0 || br == 0) continue;
                std::size_t src = L.off(n, r);
                // ∂f lands in component r of degree n-1.
                if (b.dim(r + n - 1) > 0)
                    add_block(D, kron(b.d(r + n), Matrix::identity(ar)), L.off(n - 1, r), src);
                // f∂ lands in component r+1 of degree n-1.
                if (r + 1 <= L.a_hi && a.dim(r + 1) > 0)
                    add_block(D, kron(Matrix::identity(br), a.d(r + 1).transpose()) * sign, L.off(n - 1, r + 1), src);
            }
        }
        d.push_back(std::move(D));
    }
    return ChainComplex(L.lo, std::move(dims), std::move(d));
}

// ---------------------------------------------------------------- SuperComplex

SuperComplex::SuperComplex(std::size_t dim_even, std::size_t dim_odd, Matrix d_even, Matrix d_odd)
    : de_(dim_even), do_(dim_odd), d_even_(std::move(d_even)), d_odd_(std::move(d_odd)) {
    check_shape(d_even_, do_, de_, "supercomplex d_even");
    check_shape(d_odd_, de_, do_, "supercomplex d_odd");
    if (!(d_odd_ * d_even_).is_zero() || !(d_even_ * d_odd_).is_zero())
        throw InvariantError("supercomplex: ∂² ≠ 0");
}

Subquotient SuperComplex::homology(int parity) const {
    // Cycles of parity p are the kernel of d(p); boundaries come from d(1-p).
    return cyclica::homology(d(1 - parity), d(parity));
}

std::size_t SuperComplex::homology_dim(int parity) const {
    return dim(parity) - rank(d(parity)) - rank(d(1 - parity));
}

SuperMap super_identity(const SuperComplex& x) {
    return {Matrix::identity(x.dim_even()), Matrix::identity(x.dim_odd())};
}

SuperMap super_zero(const SuperComplex& x, const SuperComplex& y) {
    return {Matrix(y.dim_even(), x.dim_even()), Matrix(y.dim_odd(), x.dim_odd())};
}

SuperMap compose(const SuperMap& g, const SuperMap& f) { return {g.even * f.even, g.odd * f.odd}; }

bool is_super_chain_map(const SuperComplex& x, const SuperComplex& y, const SuperMap& f) {
    if (f.even.rows() != y.dim_even() || f.even.cols() != x.dim_even()) return false;
    if (f.odd.rows() != y.dim_odd() || f.odd.cols() != x.dim_odd()) return false;
    return y.d_even() * f.even == f.odd * x.d_even() && y.d_odd() * f.odd == f.even * x.d_odd();
}

void check_super_map(const SuperComplex& x, const SuperComplex& y, const SuperMap& f) {
    if (!is_super_chain_map(x, y, f)) throw InvariantError("not a map of supercomplexes");
}

SuperComplex super_cone(const SuperComplex& p, const SuperComplex& q, const SuperMap& f) {
    check_super_map(p, q, f);
    std::size_t q0 = q.dim_even(), q1 = q.dim_odd(), p0 = p.dim_even(), p1 = p.dim_odd();
    // even = Q0 ⊕ P1, odd = Q1 ⊕ P0
    Matrix de = block({{q.d_even(), f.odd}, {Matrix(p0, q0), -p.d_odd()}});
    Matrix dd = block({{q.d_odd(), f.even}, {Matrix(p1, q1), -p.d_even()}});
    return SuperComplex(q0 + p1, q1 + p0, std::move(de), std::move(dd));
}

SuperMap super_homology_map(const Subquotient hx[2], const Subquotient hy[2], const SuperMap& f) {
    return {induced_map(f.even, hx[0], hy[0]), induced_map(f.odd, hx[1], hy[1])};
}

SuperMap super_homology_map(const SuperComplex& x, const SuperComplex& y, const SuperMap& f) {
    check_super_map(x, y, f);
    Subquotient hx[2] = {x.homology(0), x.homology(1)};
    Subquotient hy[2] = {y.homology(0), y.homology(1)};
    return super_homology_map(hx, hy, f);
}

SuperComplex super_sum(const std::vector<SuperComplex>& xs) {
    Matrix de, dd;
    std::size_t e = 0, o = 0;
    for (const auto& x : xs) {
        e += x.dim_even();
        o += x.dim_odd();
    }
    de = Matrix(o, e);
    dd = Matrix(e, o);
    std::size_t oe = 0, oo = 0;
    for (const auto& x : xs) {
        add_block(de, x.d_even(), oo, oe);
        add_block(dd, x.d_odd(), oe, oo);
        oe += x.dim_even();
        oo += x.dim_odd();
    }
    return SuperComplex(e, o, std::move(de), std::move(dd));
}

SuperComplex parity_shift(const SuperComplex& x) {
    return SuperComplex(x.dim_odd(), x.dim_even(), -x.d_odd(), -x.d_even());
}

SuperComplex super_of_chain(const ChainComplex& c) {
    if (c.empty()) return SuperComplex::zero();
    std::vector<std::size_t> off(std::size_t(c.max_degree() - c.min_degree() + 1));
    std::size_t tot[2] = {0, 0};
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        int p = ((n % 2) + 2) % 2;
        off[std::size_t(n - c.min_degree())] = tot[p];
        tot[p] += c.dim(n);
    }
    Matrix dpar[2] = {Matrix(tot[1], tot[0]), Matrix(tot[0], tot[1])};
    for (int n = c.min_degree() + 1; n <= c.max_degree(); ++n) {
        int p = ((n % 2) + 2) % 2;
        add_block(dpar[p], c.d(n), off[std::size_t(n - 1 - c.min_degree())], off[std::size_t(n - c.min_degree())]);
    }
    return SuperComplex(tot[0], tot[1], std::move(dpar[0]), std::move(dpar[1]));
}

SuperComplex hom_super(const SuperComplex& x, const SuperComplex& y) {
    std::size_t x0 = x.dim_even(), x1 = x.dim_odd(), y0 = y.dim_even(), y1 = y.dim_odd();
    auto I = [](std::size_t n) { return Matrix::identity(n); };
    Matrix dxe_t = x.d_even().transpose(), dxo_t = x.d_odd().transpose();
    // even = [Hom(X0,Y0), Hom(X1,Y1)], odd = [Hom(X0,Y1), Hom(X1,Y0)]
    Matrix d_even = block({{kron(y.d_even(), I(x0)), -kron(I(y1), dxe_t)},
                           {-kron(I(y0), dxo_t), kron(y.d_odd(), I(x1))}});
    Matrix d_odd = block({{kron(y.d_odd(), I(x0)), kron(I(y0), dxe_t)},
                          {kron(I(y1), dxo_t), kron(y.d_even(), I(x1))}});
    return SuperComplex(y0 * x0 + y1 * x1, y1 * x0 + y0 * x1, std::move(d_even), std::move(d_odd));
}

SuperMap hom_super_precompose(const SuperComplex& x, const SuperComplex& xp, const SuperComplex& y,
                              const SuperMap& h) {
    check_super_map(xp, x, h);
    std::size_t y0 = y.dim_even(), y1 = y.dim_odd();
    Matrix he = h.even.transpose(), ho = h.odd.transpose();
    auto I = [](std::size_t n) { return Matrix::identity(n); };
    return {direct_sum(kron(I(y0), he), kron(I(y1), ho)), direct_sum(kron(I(y1), he), kron(I(y0), ho))};
}

SuperMap hom_super_postcompose(const SuperComplex& x, const SuperComplex& y, const SuperComplex& yp,
                               const SuperMap& g) {
    check_super_map(y, yp, g);
    std::size_t x0 = x.dim_even(), x1 = x.dim_odd();
    auto I = [](std::size_t n) { return Matrix::identity(n); };
    return {direct_sum(kron(g.even, I(x0)), kron(g.odd, I(x1))), direct_sum(kron(g.odd, I(x0)), kron(g.even, I(x1)))};
}

// ---------------------------------------------------------------- MixedComplex

MixedComplex MixedComplex::unchecked(std::vector<std::size_t> dims, std::vector<Matrix> b, std::vector<Matrix> B) {
    MixedComplex m;
    if (dims.empty()) throw std::invalid_argument("mixed complex needs degree 0");
    std::size_t N = dims.size() - 1;
    if (b.size() != N + 1 || B.size() != N) throw std::invalid_argument("mixed complex: wrong number of maps");
    for (std::size_t n = 0; n <= N; ++n) check_shape(b[n], n == 0 ? 0 : dims[n - 1], dims[n], "mixed complex b");
    for (std::size_t n = 0; n < N; ++n) check_shape(B[n], dims[n + 1], dims[n], "mixed complex B");
    m.dims_ = std::move(dims);
    m.b_ = std::move(b);
    m.B_ = std::move(B);
    return m;
}

MixedComplex::MixedComplex(std::vector<std::size_t> dims, std::vector<Matrix> b, std::vector<Matrix> B) {
    *this = unchecked(std::move(dims), std::move(b), std::move(B));
    auto c = check_identities();
    if (!c.b_squared) throw InvariantError("mixed complex: b² ≠ 0");
    if (!c.B_squared) throw InvariantError("mixed complex: B² ≠ 0");
    if (!c.anticommute) throw InvariantError("mixed complex: bB + Bb ≠ 0");
}

MixedComplex MixedComplex::concentrated(std::size_t dim, std::size_t max_degree) {
    std::vector<std::size_t> dims(max_degree + 1, 0);
    dims[0] = dim;
    std::vector<Matrix> b, B;
    for (std::size_t n = 0; n <= max_degree; ++n) b.emplace_back(n == 0 ? 0 : dims[n - 1], dims[n]);
    for (std::size_t n = 0; n < max_degree; ++n) B.emplace_back(dims[n + 1], dims[n]);
    return MixedComplex(std::move(dims), std::move(b), std::move(B));
}

MixedComplex::IdentityCheck MixedComplex::check_identities() const {
    IdentityCheck c;
    std::size_t N = max_degree();
    for (std::size_t n = 2; n <= N; ++n)
        if (!(b_[n - 1] * b_[n]).is_zero()) c.b_squared = false;
    for (std::size_t n = 0; n + 2 <= N; ++n)
        if (!(B_[n + 1] * B_[n]).is_zero()) c.B_squared = false;
    for (std::size_t n = 0; n < N; ++n) {
        Matrix s = b_[n + 1] * B_[n];
        if (n >= 1) s += B_[n - 1] * b_[n];
        if (!s.is_zero()) c.anticommute = false;
    }
    return c;
}

ChainComplex MixedComplex::b_complex() const {
    return ChainComplex(0, dims_, b_, true);
}

MixedComplex MixedComplex::truncate(std::size_t n) const {
    if (n > max_degree()) throw std::invalid_argument("truncate beyond available degree");
    std::vector<std::size_t> dims(dims_.begin(), dims_.begin() + long(n) + 1);
    std::vector<Matrix> b(b_.begin(), b_.begin() + long(n) + 1);
    std::vector<Matrix> B(B_.begin(), B_.begin() + long(n));
    return unchecked(std::move(dims), std::move(b), std::move(B));
}

void check_mixed_map(const MixedComplex& m, const MixedComplex& mp, const MixedMap& f) {
    std::size_t N = std::min(m.max_degree(), mp.max_degree());
    if (f.f.size() < N + 1) throw std::invalid_argument("mixed map: missing components");
    for (std::size_t n = 0; n <= N; ++n) check_shape(f.f[n], mp.dim(n), m.dim(n), "mixed map component");
    for (std::size_t n = 1; n <= N; ++n)
        if (f.f[n - 1] * m.b(n) != mp.b(n) * f.f[n]) throw InvariantError("mixed map does not commute with b");
    for (std::size_t n = 0; n < N; ++n)
        if (f.f[n + 1] * m.B(n) != mp.B(n) * f.f[n]) throw InvariantError("mixed map does not commute with B");
}

// ---------------------------------------------------------------- S-complexes

Matrix SComplexLevelData::S_at(int n) const {
    int k = n - P.min_degree();
    if (k >= 0 && k < int(S.size())) return S[std::size_t(k)];
    return Matrix(P.dim(n - 2), P.dim(n));
}

SComplexLevelData bar_S(const MixedComplex& m) {
    std::size_t N = m.max_degree();
    auto off = [&](std::size_t n, std::size_t p) {
        std::size_t o = 0;
        for (std::size_t q = 0; q < p; ++q) o += m.dim(n - 2 * q);
        return o;
    };
    auto total = [&](std::size_t n) {
        std::size_t t = 0;
        for (std::size_t p = 0; 2 * p <= n; ++p) t += m.dim(n - 2 * p);
        return t;
    };
    std::vector<std::size_t> dims;
    std::vector<Matrix> d, S;
    for (std::size_t n = 0; n <= N; ++n) {
        dims.push_back(total(n));
        Matrix dn(n == 0 ? 0 : total(n - 1), total(n));
        Matrix sn(n < 2 ? 0 : total(n - 2), total(n));
        for (std::size_t p = 0; 2 * p <= n; ++p) {
            std::size_t deg = n - 2 * p;
            if (deg >= 1) add_block(dn, m.b(deg), off(n - 1, p), off(n, p));
            if (p >= 1) {
                add_block(dn, m.B(deg), off(n - 1, p - 1), off(n, p));
                add_block(sn, Matrix::identity(m.dim(deg)), off(n - 2, p - 1), off(n, p));
            }
        }
        d.push_back(std::move(dn));
        S.push_back(std::move(sn));
    }
    SComplexLevelData out{ChainComplex(0, std::move(dims), std::move(d), true), std::move(S)};
    for (int n = 3; n <= int(N); ++n)
        if (out.P.d(n - 2) * out.S_at(n) != out.S_at(n - 1) * out.P.d(n))
            throw InvariantError("bar construction: S does not commute with d");
    return out;
}

ChainComplex hom_S(const SComplexLevelData& p, const SComplexLevelData& q) {
    const auto& A = p.P;
    const auto& B = q.P;
    HomLayout L(A, B);
    if (L.lo > L.hi) return ChainComplex();
    ChainComplex H = hom_complex(A, B);
    // Kernel of [S, -] in each degree.
    std::vector<std::vector<SparseVec>> ker;
    for (int n = L.lo; n <= L.hi; ++n) {
        Matrix C(L.dim(n - 2), L.dim(n));
        for (int r = L.a_lo; r <= L.a_hi; ++r) {
            std::size_t ar = A.dim(r), br = B.dim(r + n);
            if (ar == 0 || br == 0) continue;
            std::size_t src = L.off(n, r);
            if (n - 2 >= L.lo && B.dim(r + n - 2) > 0)
                add_block(C, kron(q.S_at(r + n), Matrix::identity(ar)), L.off(n - 2, r), src);
            if (n - 2 >= L.lo && r + 2 <= L.a_hi && A.dim(r + 2) > 0)
                add_block(C, kron(Matrix::identity(br), p.S_at(r + 2).transpose()) * Rational(-1),
                          L.off(n - 2, r + 2), src);
        }
        ker.push_back(kernel_vectors(C));
    }
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;
    for (int n = L.lo; n <= L.hi; ++n) {
        const auto& kn = ker[std::size_t(n - L.lo)];
        dims.push_back(kn.size());
        if (n == L.lo) {
            d.emplace_back(0, kn.size());
            continue;
        }
        const auto& km = ker[std::size_t(n - 1 - L.lo)];
        Subquotient coords(L.dim(n - 1), km, {});
        Matrix Dn = H.d(n);
        std::vector<SparseVec> cols;
        for (const auto& v : kn) cols.push_back(coords.coords(Dn.apply(v)));
        d.push_back(Matrix::from_columns(km.size(), cols));
    }
    return ChainComplex(L.lo, std::move(dims), std::move(d));
}

}  // namespace cyclica
