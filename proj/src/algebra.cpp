#include "cyclica/algebra.hpp"

#include <algorithm>

namespace cyclica {

AssociativityError::AssociativityError(std::size_t i, std::size_t j, std::size_t k)
    : InvariantError("structure constants are not associative: (e" + std::to_string(i) + " e" +
                     std::to_string(j) + ") e" + std::to_string(k) + " ≠ e" + std::to_string(i) + " (e" +
                     std::to_string(j) + " e" + std::to_string(k) + ")"),
      triple{i, j, k} {}

Algebra::Algebra(std::string name, std::size_t dim, const std::vector<Rational>& c)
    : name_(std::move(name)), d_(dim), prod_(dim * dim) {
    if (c.size() != dim * dim * dim) throw std::invalid_argument("structure constants must have d^3 entries");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const auto& v = c[(i * dim + j) * dim + k];
                if (!v.is_zero()) prod_[i * dim + j].push_back({std::uint32_t(k), v});
            }
    check_associative();
}

Algebra Algebra::from_products(std::string name, std::size_t dim, std::vector<SparseVec> products) {
    if (products.size() != dim * dim) throw std::invalid_argument("need d^2 products");
    for (const auto& p : products)
        if (!p.empty() && p.back().idx >= dim) throw std::out_of_range("product outside algebra");
    Algebra a;
    a.name_ = std::move(name);
    a.d_ = dim;
    a.prod_ = std::move(products);
    a.check_associative();
    return a;
}

void Algebra::check_associative() const {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) {
            const auto& pij = product(i, j);
            for (std::size_t k = 0; k < d_; ++k) {
                SparseVec lhs, rhs;
                for (const auto& e : pij) axpy(lhs, e.val, product(e.idx, k));
                for (const auto& e : product(j, k)) axpy(rhs, e.val, product(i, e.idx));
                if (lhs != rhs) throw AssociativityError(i, j, k);
            }
        }
}

Algebra Algebra::zero_algebra() { return from_products("0", 0, {}); }

Algebra Algebra::ground_field() { return from_products("Q", 1, {unit_vec(0)}); }

Algebra Algebra::zero_multiplication(std::size_t dim) {
    return from_products("Q^" + std::to_string(dim) + "[zero mult]", dim, std::vector<SparseVec>(dim * dim));
}

Algebra Algebra::truncated_polynomial(std::size_t n) {
    std::vector<SparseVec> p(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) p[i * n + j] = unit_vec(std::uint32_t(i + j));
    return from_products("Q[x]/(x^" + std::to_string(n) + ")", n, std::move(p));
}

Algebra Algebra::upper_triangular_2() {
    // e11 = 0, e12 = 1, e22 = 2
    std::vector<SparseVec> p(9);
    p[0 * 3 + 0] = unit_vec(0);
    p[0 * 3 + 1] = unit_vec(1);
    p[1 * 3 + 2] = unit_vec(1);
    p[2 * 3 + 2] = unit_vec(2);
    return from_products("UT2", 3, std::move(p));
}

Algebra Algebra::product(const Algebra& a, const Algebra& b) {
    std::size_t d = a.dim() + b.dim();
    std::vector<SparseVec> p(d * d);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) p[i * d + j] = a.product(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            p[(a.dim() + i) * d + a.dim() + j] = shifted(b.product(i, j), std::uint32_t(a.dim()));
    return from_products(a.name() + "x" + b.name(), d, std::move(p));
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& a : x)
        for (const auto& b : y) axpy(out, a.val * b.val, product(a.idx, b.idx));
    return out;
}

Matrix Algebra::left_mult(const SparseVec& x) const {
    std::vector<SparseVec> cols(d_);
    for (std::size_t j = 0; j < d_; ++j) cols[j] = multiply(x, unit_vec(std::uint32_t(j)));
    return Matrix::from_columns(d_, cols);
}

Matrix Algebra::right_mult(const SparseVec& x) const {
    std::vector<SparseVec> cols(d_);
    for (std::size_t j = 0; j < d_; ++j) cols[j] = multiply(unit_vec(std::uint32_t(j)), x);
    return Matrix::from_columns(d_, cols);
}

Matrix Algebra::mult_matrix() const { return Matrix::from_columns(d_, prod_); }

std::vector<Rational> Algebra::structure_constants() const {
    std::vector<Rational> c(d_ * d_ * d_);
    for (std::size_t ij = 0; ij < d_ * d_; ++ij)
        for (const auto& e : prod_[ij]) c[ij * d_ + e.idx] = e.val;
    return c;
}

std::optional<SparseVec> Algebra::unit() const {
    if (d_ == 0) return SparseVec{};
    // Solve u e_j = e_j and e_j u = e_j for all j as one linear system in u.
    Matrix sys(2 * d_ * d_, d_);
    SparseVec rhs;
    for (std::size_t j = 0; j < d_; ++j) {
        for (std::size_t i = 0; i < d_; ++i) {
            for (const auto& e : product(i, j)) sys.add_to(j * d_ + e.idx, i, e.val);
            for (const auto& e : product(j, i)) sys.add_to(d_ * d_ + j * d_ + e.idx, i, e.val);
        }
        rhs.push_back({std::uint32_t(j * d_ + j), Rational(1)});
    }
    std::vector<Entry> raw = rhs;
    for (std::size_t j = 0; j < d_; ++j) raw.push_back({std::uint32_t(d_ * d_ + j * d_ + j), Rational(1)});
    return solve(sys, normalize(std::move(raw)));
}

bool Algebra::is_zero_multiplication() const {
    return std::all_of(prod_.begin(), prod_.end(), [](const SparseVec& p) { return p.empty(); });
}

Matrix inverse(const Matrix& p) {
    if (p.rows() != p.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = p.rows();
    auto r = rref(hstack(p, Matrix::identity(n)));
    if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] >= n)) throw InvariantError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : r.matrix.row(i))
            if (e.idx >= n) inv.row_mut(i).push_back({std::uint32_t(e.idx - n), e.val});
    return inv;
}

Algebra Algebra::base_change(const Matrix& p, std::string name) const {
    Matrix pinv = inverse(p);
    auto cols = p.columns();
    std::vector<SparseVec> prods(d_ * d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) prods[i * d_ + j] = pinv.apply(multiply(cols[i], cols[j]));
    return from_products(std::move(name), d_, std::move(prods));
}

Algebra Algebra::renamed(std::string name) const {
    Algebra a = *this;
    a.name_ = std::move(name);
    return a;
}

IdealInclusion::IdealInclusion(Algebra ambient, const std::vector<SparseVec>& basis)
    : ambient_(std::move(ambient)), ech_(ambient_.dim()) {
    for (const auto& v : basis)
        if (!ech_.insert(v)) throw InvariantError("ideal basis vectors are linearly dependent");
    basis_ = ech_.reduced_rows();
    complement_ = ech_.non_pivots();
    std::size_t d = ambient_.dim();
    for (const auto& k : basis_)
        for (std::size_t j = 0; j < d; ++j) {
            auto e = unit_vec(std::uint32_t(j));
            if (!ech_.contains(ambient_.multiply(e, k)) || !ech_.contains(ambient_.multiply(k, e)))
                throw InvariantError("subspace is not a two-sided ideal");
        }
}

IdealInclusion IdealInclusion::span(Algebra ambient, const std::vector<SparseVec>& vectors) {
    Echelon e(ambient.dim());
    for (const auto& v : vectors) e.insert(v);
    return IdealInclusion(std::move(ambient), e.reduced_rows());
}

IdealInclusion IdealInclusion::whole(const Algebra& a) {
    std::vector<SparseVec> b;
    for (std::size_t i = 0; i < a.dim(); ++i) b.push_back(unit_vec(std::uint32_t(i)));
    return IdealInclusion(a, b);
}

IdealInclusion IdealInclusion::zero(const Algebra& a) { return IdealInclusion(a, {}); }

Matrix IdealInclusion::inclusion() const { return Matrix::from_columns(ambient_.dim(), basis_); }

Matrix IdealInclusion::adapted_basis() const {
    std::vector<SparseVec> cols = basis_;
    for (auto c : complement_) cols.push_back(unit_vec(c));
    return Matrix::from_columns(ambient_.dim(), cols);
}

Matrix IdealInclusion::adapted_coordinates() const {
    // With reduced echelon rows, the K-coordinate of y along row r is y at
    // that row's pivot; the remainder is read off the complement coordinates.
    std::size_t d = ambient_.dim(), k = basis_.size();
    Matrix m(d, d);
    for (std::size_t r = 0; r < k; ++r) m.set(r, basis_[r].front().idx, Rational(1));
    for (std::size_t a = 0; a < complement_.size(); ++a) {
        auto c = complement_[a];
        m.set(k + a, c, Rational(1));
        for (std::size_t r = 0; r < k; ++r) {
            Rational v = coeff(basis_[r], c);
            if (!v.is_zero()) m.add_to(k + a, basis_[r].front().idx, -v);
        }
    }
    return m;
}

Algebra IdealInclusion::as_algebra(std::string name) const {
    std::size_t k = basis_.size();
    std::vector<SparseVec> prods(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto p = ambient_.multiply(basis_[i], basis_[j]);
            SparseVec c;
            for (std::size_t r = 0; r < k; ++r) {
                Rational v = coeff(p, basis_[r].front().idx);
                if (!v.is_zero()) c.push_back({std::uint32_t(r), v});
            }
            prods[i * k + j] = std::move(c);
        }
    if (name.empty()) name = "ideal of " + ambient_.name();
    return Algebra::from_products(std::move(name), k, std::move(prods));
}

Algebra IdealInclusion::adapted_algebra() const {
    auto p = adapted_basis();
    auto q = adapted_coordinates();
    auto cols = p.columns();
    std::size_t d = ambient_.dim();
    std::vector<SparseVec> prods(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prods[i * d + j] = q.apply(ambient_.multiply(cols[i], cols[j]));
    return Algebra::from_products(ambient_.name(), d, std::move(prods));
}

Algebra unitalize(const Algebra& a) {
    std::size_t d = a.dim(), n = d + 1;
    std::vector<SparseVec> p(n * n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) p[i * n + j] = a.product(i, j);
        p[i * n + d] = unit_vec(std::uint32_t(i));
        p[d * n + i] = unit_vec(std::uint32_t(i));
    }
    p[d * n + d] = unit_vec(std::uint32_t(d));
    return Algebra::from_products(a.name() + "~", n, std::move(p));
}

IdealInclusion power(const IdealInclusion& k, std::size_t n) {
    if (n == 0) throw std::invalid_argument("power: n must be at least 1");
    const auto& a = k.ambient();
    IdealInclusion cur = k;
    for (std::size_t step = 1; step < n; ++step) {
        std::vector<SparseVec> prods;
        for (const auto& x : k.basis())
            for (const auto& y : cur.basis()) prods.push_back(a.multiply(x, y));
        cur = IdealInclusion::span(a, prods);
        if (cur.dim() == 0) break;
    }
    return cur;
}

std::pair<Algebra, LinMap> quotient_algebra(const IdealInclusion& k) {
    const auto& a = k.ambient();
    const auto& comp = k.complement();
    std::size_t q = comp.size();
    auto coords = k.adapted_coordinates();
    std::size_t off = k.dim();
    auto project = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& e : coords.apply(v))
            if (e.idx >= off) out.push_back({std::uint32_t(e.idx - off), e.val});
        return out;
    };
    std::vector<SparseVec> pcols(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) pcols[j] = project(unit_vec(std::uint32_t(j)));
    LinMap pi = Matrix::from_columns(q, pcols);
    std::vector<SparseVec> prods(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) prods[i * q + j] = project(a.product(comp[i], comp[j]));
    Algebra quo = Algebra::from_products(a.name() + "/I", q, std::move(prods));
    if (!is_algebra_map(pi, a, quo)) throw InvariantError("quotient projection is not multiplicative");
    return {std::move(quo), std::move(pi)};
}

LinMap tensor_swap(std::size_t dim_v, std::size_t dim_w) {
    Matrix t(dim_v * dim_w, dim_v * dim_w);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_w; ++j) t.set(j * dim_v + i, i * dim_w + j, Rational(1));
    return t;
}

bool is_algebra_map(const LinMap& f, const Algebra& a, const Algebra& b) {
    if (f.cols() != a.dim() || f.rows() != b.dim()) return false;
    auto cols = f.columns();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (f.apply(a.product(i, j)) != b.multiply(cols[i], cols[j])) return false;
    return true;
}

}  // namespace cyclica
