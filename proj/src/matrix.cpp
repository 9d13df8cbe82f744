#include "cyclica/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclica {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].idx < x[j].idx)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].idx < y[i].idx) {
            out.push_back({x[j].idx, a * x[j].val});
            ++j;
        } else {
            Rational v = std::move(y[i].val);
            v += a * x[j].val;
            if (!v.is_zero()) out.push_back({x[j].idx, std::move(v)});
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
    SparseVec out;
    if (a.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back({e.idx, e.val * a});
    return out;
}

SparseVec unit_vec(std::uint32_t i) { return SparseVec{{i, Rational(1)}}; }

Rational coeff(const SparseVec& v, std::uint32_t i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const Entry& e, std::uint32_t k) { return e.idx < k; });
    if (it != v.end() && it->idx == i) return it->val;
    return Rational(0);
}

SparseVec normalize(std::vector<Entry> raw) {
    std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
    SparseVec out;
    out.reserve(raw.size());
    for (auto& e : raw) {
        if (!out.empty() && out.back().idx == e.idx) {
            out.back().val += e.val;
        } else {
            if (!out.empty() && out.back().val.is_zero()) out.pop_back();
            out.push_back(std::move(e));
        }
    }
    if (!out.empty() && out.back().val.is_zero()) out.pop_back();
    return out;
}

SparseVec shifted(const SparseVec& v, std::uint32_t offset) {
    SparseVec out = v;
    for (auto& e : out) e.idx += offset;
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({std::uint32_t(i), Rational(1)});
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged dense matrix");
        for (std::size_t j = 0; j < c; ++j)
            if (!rows[i][j].is_zero()) m.data_[i].push_back({std::uint32_t(j), rows[i][j]});
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t dim, const std::vector<SparseVec>& cols) {
    Matrix t(cols.size(), dim);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!cols[j].empty() && cols[j].back().idx >= dim)
            throw std::out_of_range("column vector exceeds dimension");
        t.data_[j] = cols[j];
    }
    return t.transpose();
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].empty() && rows[i].back().idx >= cols)
            throw std::out_of_range("row vector exceeds dimension");
        m.data_[i] = std::move(rows[i]);
    }
    return m;
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

Rational Matrix::at(std::size_t i, std::size_t j) const { return coeff(data_.at(i), std::uint32_t(j)); }

void Matrix::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), std::uint32_t(j),
                               [](const Entry& e, std::uint32_t k) { return e.idx < k; });
    if (it != r.end() && it->idx == j) {
        if (v.is_zero())
            r.erase(it);
        else
            it->val = v;
    } else if (!v.is_zero()) {
        r.insert(it, Entry{std::uint32_t(j), v});
    }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Rational& v) {
    if (v.is_zero()) return;
    set(i, j, at(i, j) + v);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    std::vector<std::size_t> counts(cols_, 0);
    for (const auto& r : data_)
        for (const auto& e : r) ++counts[e.idx];
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j].reserve(counts[j]);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : data_[i]) t.data_[e.idx].push_back({std::uint32_t(i), e.val});
    return t;
}

std::vector<SparseVec> Matrix::columns() const { return transpose().data_; }

SparseVec Matrix::apply(const SparseVec& x) const {
    if (!x.empty() && x.back().idx >= cols_) throw std::out_of_range("vector exceeds matrix domain");
    SparseVec y;
    if (x.empty()) return y;
    // Scatter x densely by position so each row dot product is a single pass.
    std::vector<std::int32_t> pos(cols_, -1);
    for (std::size_t k = 0; k < x.size(); ++k) pos[x[k].idx] = std::int32_t(k);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (const auto& e : data_[i]) {
            auto p = pos[e.idx];
            if (p >= 0) s += e.val * x[std::size_t(p)].val;
        }
        if (!s.is_zero()) y.push_back({std::uint32_t(i), std::move(s)});
    }
    return y;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : data_[i]) d[i][e.idx] = e.val;
    return d;
}

Matrix Matrix::select_rows(const std::vector<std::uint32_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) m.data_[i] = data_.at(idx[i]);
    return m;
}

Matrix Matrix::select_cols(const std::vector<std::uint32_t>& idx) const {
    std::vector<std::int64_t> where(cols_, -1);
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw std::out_of_range("column selection");
        where[idx[j]] = std::int64_t(j);
    }
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<Entry> raw;
        for (const auto& e : data_[i])
            if (where[e.idx] >= 0) raw.push_back({std::uint32_t(where[e.idx]), e.val});
        m.data_[i] = normalize(std::move(raw));
    }
    return m;
}

Matrix Matrix::submatrix(const std::vector<std::uint32_t>& rows,
                         const std::vector<std::uint32_t>& cols) const {
    return select_rows(rows).select_cols(cols);
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t i = 0; i < rows_; ++i) axpy(data_[i], Rational(1), o.data_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t i = 0; i < rows_; ++i) axpy(data_[i], Rational(-1), o.data_[i]);
    return *this;
}

Matrix& Matrix::operator*=(const Rational& a) {
    for (auto& r : data_) r = scaled(r, a);
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix c(a.rows_, b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<char> touched(b.cols_, 0);
    std::vector<std::uint32_t> list;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        list.clear();
        for (const auto& e : a.data_[i]) {
            for (const auto& f : b.data_[e.idx]) {
                if (!touched[f.idx]) {
                    touched[f.idx] = 1;
                    list.push_back(f.idx);
                }
                acc[f.idx] += e.val * f.val;
            }
        }
        std::sort(list.begin(), list.end());
        auto& row = c.data_[i];
        for (auto k : list) {
            if (!acc[k].is_zero()) row.push_back({k, std::move(acc[k])});
            acc[k] = Rational();
            touched[k] = 0;
        }
    }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto& x = a.data_[i];
        const auto& y = b.data_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].idx != y[k].idx || x[k].val != y[k].val) return false;
    }
    return true;
}

std::string Matrix::debug_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "\n";
    auto d = to_dense();
    for (const auto& r : d) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j].str();
        os << "\n";
    }
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.rows(); ++k) {
            auto& row = m.row_mut(i * b.rows() + k);
            for (const auto& e : a.row(i))
                for (const auto& f : b.row(k))
                    row.push_back({std::uint32_t(e.idx * b.cols() + f.idx), e.val * f.val});
        }
    return m;
}

Matrix embed(const Matrix& m, std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0) {
    if (r0 + m.rows() > rows || c0 + m.cols() > cols) throw std::out_of_range("embed out of range");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < m.rows(); ++i) out.row_mut(r0 + i) = shifted(m.row(i), std::uint32_t(c0));
    return out;
}

Matrix block(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty()) return Matrix();
    std::size_t nr = grid.size(), nc = grid[0].size();
    std::vector<std::size_t> h(nr, 0), w(nc, 0);
    for (std::size_t i = 0; i < nr; ++i) {
        if (grid[i].size() != nc) throw std::invalid_argument("ragged block grid");
        for (std::size_t j = 0; j < nc; ++j) {
            h[i] = std::max(h[i], grid[i][j].rows());
            w[j] = std::max(w[j], grid[i][j].cols());
        }
    }
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            const auto& g = grid[i][j];
            if ((g.rows() != h[i] || g.cols() != w[j]) && !(g.rows() == 0 && g.cols() == 0) &&
                !g.is_zero())
                throw std::invalid_argument("block shape mismatch");
        }
    std::size_t R = 0, C = 0;
    for (auto x : h) R += x;
    for (auto x : w) C += x;
    Matrix out(R, C);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t k = 0; k < h[i]; ++k) {
            auto& row = out.row_mut(r0 + k);
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < nc; ++j) {
                const auto& g = grid[i][j];
                if (k < g.rows())
                    for (const auto& e : g.row(k)) row.push_back({std::uint32_t(c0 + e.idx), e.val});
                c0 += w[j];
            }
        }
        r0 += h[i];
    }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    return block({{a, Matrix(a.rows(), b.cols())}, {Matrix(b.rows(), a.cols()), b}});
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto& row = out.row_mut(i);
        row = a.row(i);
        for (const auto& e : b.row(i)) row.push_back({std::uint32_t(a.cols() + e.idx), e.val});
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.row_mut(i) = a.row(i);
    for (std::size_t i = 0; i < b.rows(); ++i) out.row_mut(a.rows() + i) = b.row(i);
    return out;
}

}  // namespace cyclica
