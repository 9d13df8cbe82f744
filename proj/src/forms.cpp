#include "cyclica/forms.hpp"

#include <algorithm>
#include <limits>

namespace cyclica {

std::size_t ipow(std::size_t d, std::size_t n) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (d != 0 && r > std::numeric_limits<std::uint32_t>::max() / d)
            throw std::overflow_error("tensor power too large for index type");
        r *= d;
    }
    return r;
}

std::size_t omega_dim(std::size_t d, std::size_t n) { return n == 0 ? d : (d + 1) * ipow(d, n); }

namespace {

/// Digits of a word of length len in base d, most significant first.
void decode(std::size_t idx, std::size_t d, std::size_t len, std::vector<std::uint32_t>& out) {
    out.assign(len, 0);
    for (std::size_t j = len; j-- > 0;) {
        out[j] = std::uint32_t(idx % d);
        idx /= d;
    }
}

std::size_t encode(const std::vector<std::uint32_t>& s, std::size_t d, std::size_t from = 0) {
    std::size_t r = 0;
    for (std::size_t j = from; j < s.size(); ++j) r = r * d + s[j];
    return r;
}

/// Basis tensor of Ω^n as (a0, a1, ..., an).
std::vector<std::uint32_t> omega_tensor(std::size_t idx, std::size_t d, std::size_t n) {
    std::vector<std::uint32_t> w;
    if (n == 0) return {std::uint32_t(idx)};
    std::size_t dn = ipow(d, n);
    decode(idx % dn, d, n, w);
    w.insert(w.begin(), std::uint32_t(idx / dn));
    return w;
}

std::size_t omega_index(const std::vector<std::uint32_t>& t, std::size_t d) {
    if (t.size() == 1) return t[0];
    return encode(t, d);  // a0 is the leading digit, possibly equal to d
}

/// Image of a pure tensor under a tensor product of maps given by columns.
/// first: columns for the leading factor (target base d0 for the leading
/// digit is irrelevant since it is most significant); rest: columns for the
/// remaining factors, target base dt.
SparseVec tensor_image(const std::vector<std::uint32_t>& t, const std::vector<SparseVec>& first,
                       const std::vector<SparseVec>& rest, std::size_t dt) {
    std::vector<Entry> cur;
    for (const auto& e : first[t[0]]) cur.push_back(e);
    for (std::size_t j = 1; j < t.size() && !cur.empty(); ++j) {
        std::vector<Entry> nxt;
        const auto& col = rest[t[j]];
        nxt.reserve(cur.size() * col.size());
        for (const auto& a : cur)
            for (const auto& b : col) nxt.push_back({std::uint32_t(a.idx * dt + b.idx), a.val * b.val});
        cur = std::move(nxt);
    }
    return normalize(std::move(cur));
}

Matrix build_b(const Algebra& a, std::size_t n) {
    std::size_t d = a.dim();
    std::size_t unit = d;
    std::vector<SparseVec> cols(omega_dim(d, n));
    std::vector<Entry> raw;
    std::vector<std::uint32_t> s;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        auto t = omega_tensor(idx, d, n);
        raw.clear();
        auto push_product = [&](const SparseVec& prod, std::size_t pos, const Rational& sign) {
            // Replace factors pos, pos+1 by their product (as a single factor).
            for (const auto& e : prod) {
                s.clear();
                for (std::size_t j = 0; j < t.size(); ++j) {
                    if (j == pos) {
                        s.push_back(e.idx);
                    } else if (j != pos + 1) {
                        s.push_back(t[j]);
                    }
                }
                raw.push_back({std::uint32_t(omega_index(s, d)), sign * e.val});
            }
        };
        // μ_0: ã0 · a1
        {
            SparseVec prod = t[0] == unit ? unit_vec(t[1]) : a.product(t[0], t[1]);
            push_product(prod, 0, Rational(1));
        }
        for (std::size_t i = 1; i < n; ++i)
            push_product(a.product(t[i], t[i + 1]), i, Rational(i % 2 == 0 ? 1 : -1));
        // μ_n: a_n · ã0 moved to the front
        {
            SparseVec prod = t[0] == unit ? unit_vec(t[n]) : a.product(t[n], t[0]);
            Rational sign(n % 2 == 0 ? 1 : -1);
            for (const auto& e : prod) {
                s.clear();
                s.push_back(e.idx);
                for (std::size_t j = 1; j < n; ++j) s.push_back(t[j]);
                raw.push_back({std::uint32_t(omega_index(s, d)), sign * e.val});
            }
        }
        cols[idx] = normalize(raw);
    }
    return Matrix::from_columns(omega_dim(d, n - 1), cols);
}

Matrix build_B(const Algebra& a, std::size_t n) {
    std::size_t d = a.dim();
    std::size_t rows = omega_dim(d, n + 1);
    std::size_t base = d * ipow(d, n + 1);  // index of 1 ⊗ (word)
    std::vector<SparseVec> cols(omega_dim(d, n));
    std::vector<std::uint32_t> s(n + 1);
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        auto t = omega_tensor(idx, d, n);
        if (n > 0 && t[0] == d) continue;
        std::vector<Entry> raw;
        for (std::size_t i = 0; i <= n; ++i) {
            // t^i(a0..an) = (a_{n-i+1}, ..., a_n, a_0, ..., a_{n-i})
            for (std::size_t j = 0; j <= n; ++j) s[j] = t[(j + n + 1 - i) % (n + 1)];
            Rational sign((n * i) % 2 == 0 ? 1 : -1);
            raw.push_back({std::uint32_t(base + encode(s, d)), sign});
        }
        cols[idx] = normalize(std::move(raw));
    }
    return Matrix::from_columns(rows, cols);
}

Matrix build_bprime(const Algebra& a, std::size_t n) {
    std::size_t d = a.dim();
    if (n <= 1) return Matrix(0, ipow(d, n));
    std::vector<SparseVec> cols(ipow(d, n));
    std::vector<std::uint32_t> t, s;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        decode(idx, d, n, t);
        std::vector<Entry> raw;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Rational sign(j % 2 == 0 ? 1 : -1);
            for (const auto& e : a.product(t[j], t[j + 1])) {
                s.clear();
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j)
                        s.push_back(e.idx);
                    else if (k != j + 1)
                        s.push_back(t[k]);
                }
                raw.push_back({std::uint32_t(encode(s, d)), sign * e.val});
            }
        }
        cols[idx] = normalize(std::move(raw));
    }
    return Matrix::from_columns(ipow(d, n - 1), cols);
}

std::vector<std::uint32_t> iota_range(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::uint32_t(i);
    return v;
}

std::uint32_t position(const std::vector<std::uint32_t>& sorted, std::uint32_t x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) throw InvariantError("index not in relative basis");
    return std::uint32_t(it - sorted.begin());
}

/// Restriction of m to the given domain/codomain index sets; the image of
/// the domain must lie in the codomain subset.
Matrix restrict_to(const Matrix& m, const std::vector<std::uint32_t>& rows, const std::vector<std::uint32_t>& cols) {
    Matrix sub_cols = m.select_cols(cols);
    Matrix r = sub_cols.select_rows(rows);
    if (r.nnz() != sub_cols.nnz()) throw InvariantError("relative subspace is not preserved");
    return r;
}

}  // namespace

FormsComplex omega_unchecked(const Algebra& a, std::size_t N) {
    if (N < 1) throw std::invalid_argument("omega: N must be at least 1");
    std::size_t d = a.dim();
    std::vector<std::size_t> dims;
    std::vector<Matrix> b, B;
    for (std::size_t n = 0; n <= N; ++n) dims.push_back(omega_dim(d, n));
    b.emplace_back(0, dims[0]);
    for (std::size_t n = 1; n <= N; ++n) b.push_back(build_b(a, n));
    for (std::size_t n = 0; n < N; ++n) B.push_back(build_B(a, n));
    return FormsComplex{a, MixedComplex::unchecked(std::move(dims), std::move(b), std::move(B))};
}

FormsComplex omega(const Algebra& a, std::size_t N) {
    auto f = omega_unchecked(a, N);
    auto c = f.mixed.check_identities();
    if (!c.all()) throw InvariantError("ΩA fails the mixed complex identities");
    return f;
}

ChainComplex cyclic_sub(const FormsComplex& f) {
    std::size_t d = f.d(), N = f.max_degree();
    std::vector<std::size_t> dims;
    std::vector<Matrix> dd;
    for (std::size_t n = 0; n <= N; ++n) {
        dims.push_back(ipow(d, n + 1));
        if (n == 0) {
            dd.emplace_back(0, d);
        } else {
            dd.push_back(f.mixed.b(n).submatrix(iota_range(ipow(d, n)), iota_range(ipow(d, n + 1))));
        }
    }
    return ChainComplex(0, std::move(dims), std::move(dd), true);
}

ChainComplex bar_quotient(const FormsComplex& f) {
    std::size_t d = f.d(), N = f.max_degree();
    std::vector<std::size_t> dims{0};
    std::vector<Matrix> dd{Matrix(0, 0)};
    for (std::size_t n = 1; n <= N; ++n) {
        dims.push_back(ipow(d, n));
        dd.push_back(n == 1 ? Matrix(0, d) : build_bprime(f.algebra, n));
    }
    return ChainComplex(0, std::move(dims), std::move(dd), true);
}

std::vector<Matrix> cyclic_inclusion(const FormsComplex& f) {
    std::size_t d = f.d();
    std::vector<Matrix> out;
    for (std::size_t n = 0; n <= f.max_degree(); ++n) {
        std::size_t c = ipow(d, n + 1);
        out.push_back(embed(Matrix::identity(c), omega_dim(d, n), c, 0, 0));
    }
    return out;
}

std::vector<Matrix> bar_projection(const FormsComplex& f) {
    std::size_t d = f.d();
    std::vector<Matrix> out;
    out.emplace_back(0, d);
    for (std::size_t n = 1; n <= f.max_degree(); ++n) {
        std::size_t q = ipow(d, n);
        out.push_back(embed(Matrix::identity(q), q, omega_dim(d, n), 0, d * q));
    }
    return out;
}

MixedMap omega_map(const LinMap& f, const Algebra& a, const Algebra& b, std::size_t N) {
    std::size_t d = a.dim(), e = b.dim();
    if (f.cols() != d || f.rows() != e) throw std::invalid_argument("omega_map: shape mismatch");
    auto cols = f.columns();
    auto tilde = cols;
    tilde.push_back(unit_vec(std::uint32_t(e)));
    MixedMap out;
    out.f.push_back(f);
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<SparseVec> img(omega_dim(d, n));
        for (std::size_t idx = 0; idx < img.size(); ++idx)
            img[idx] = tensor_image(omega_tensor(idx, d, n), tilde, cols, e);
        out.f.push_back(Matrix::from_columns(omega_dim(e, n), img));
    }
    return out;
}

std::vector<Matrix> cyclic_map(const LinMap& f, std::size_t N) {
    std::size_t d = f.cols(), e = f.rows();
    auto cols = f.columns();
    std::vector<Matrix> out;
    std::vector<std::uint32_t> t;
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<SparseVec> img(ipow(d, n + 1));
        for (std::size_t idx = 0; idx < img.size(); ++idx) {
            decode(idx, d, n + 1, t);
            img[idx] = tensor_image(t, cols, cols, e);
        }
        out.push_back(Matrix::from_columns(ipow(e, n + 1), img));
    }
    return out;
}

std::vector<Matrix> bar_map(const LinMap& f, std::size_t N) {
    std::size_t d = f.cols(), e = f.rows();
    auto cols = f.columns();
    std::vector<Matrix> out;
    out.emplace_back(0, 0);
    std::vector<std::uint32_t> t;
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<SparseVec> img(ipow(d, n));
        for (std::size_t idx = 0; idx < img.size(); ++idx) {
            decode(idx, d, n, t);
            img[idx] = tensor_image(t, cols, cols, e);
        }
        out.push_back(Matrix::from_columns(ipow(e, n), img));
    }
    return out;
}

RelativeFormsComplex relative_forms(const IdealInclusion& k, std::size_t N) {
    RelativeFormsComplex r;
    r.ideal = k;
    r.adapted = k.adapted_algebra();
    std::size_t d = r.adapted.dim(), kd = k.dim();
    FormsComplex F = omega(r.adapted, N);
    ChainComplex C = cyclic_sub(F);
    ChainComplex Cb = bar_quotient(F);
    auto in_k = [&](std::uint32_t a) { return a < kd; };

    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<std::uint32_t> om, cc, cb;
        for (std::size_t idx = 0; idx < omega_dim(d, n); ++idx) {
            auto t = omega_tensor(idx, d, n);
            bool hit = std::any_of(t.begin(), t.end(), in_k);
            if (hit) {
                om.push_back(std::uint32_t(idx));
                if (n == 0 || t[0] != d) cc.push_back(std::uint32_t(idx));
            }
        }
        std::vector<std::uint32_t> w;
        if (n >= 1)
            for (std::size_t idx = 0; idx < ipow(d, n); ++idx) {
                decode(idx, d, n, w);
                if (std::any_of(w.begin(), w.end(), in_k)) cb.push_back(std::uint32_t(idx));
            }
        r.omega_index.push_back(std::move(om));
        r.c_index.push_back(std::move(cc));
        r.cbar_index.push_back(std::move(cb));
    }

    std::vector<std::size_t> odims, cdims, bdims;
    std::vector<Matrix> ob, oB, cd, bd;
    for (std::size_t n = 0; n <= N; ++n) {
        odims.push_back(r.omega_index[n].size());
        cdims.push_back(r.c_index[n].size());
        bdims.push_back(r.cbar_index[n].size());
        if (n == 0) {
            ob.emplace_back(0, odims[0]);
            cd.emplace_back(0, cdims[0]);
            bd.emplace_back(0, bdims[0]);
        } else {
            ob.push_back(restrict_to(F.mixed.b(n), r.omega_index[n - 1], r.omega_index[n]));
            cd.push_back(restrict_to(C.d(int(n)), r.c_index[n - 1], r.c_index[n]));
            bd.push_back(restrict_to(Cb.d(int(n)), r.cbar_index[n - 1], r.cbar_index[n]));
        }
    }
    for (std::size_t n = 0; n < N; ++n) oB.push_back(restrict_to(F.mixed.B(n), r.omega_index[n + 1], r.omega_index[n]));
    r.omega_rel = MixedComplex(std::move(odims), std::move(ob), std::move(oB));
    r.c_rel = ChainComplex(0, std::move(cdims), std::move(cd), true);
    r.cbar_rel = ChainComplex(0, std::move(bdims), std::move(bd), true);

    Matrix P = k.adapted_basis();
    auto om = omega_map(P, r.adapted, k.ambient(), N);
    auto cm = cyclic_map(P, N);
    auto bm = bar_map(P, N);
    for (std::size_t n = 0; n <= N; ++n) {
        r.omega_inclusion.push_back(om.f[n].select_cols(r.omega_index[n]));
        r.c_inclusion.push_back(cm[n].select_cols(r.c_index[n]));
        r.cbar_inclusion.push_back(bm[n].select_cols(r.cbar_index[n]));
    }
    return r;
}

MixedMap ideal_to_relative(const RelativeFormsComplex& r) {
    std::size_t d = r.adapted.dim(), kd = r.ideal.dim();
    std::size_t N = r.omega_rel.max_degree();
    MixedMap out;
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t src_dim = omega_dim(kd, n);
        Matrix m(r.omega_index[n].size(), src_dim);
        for (std::size_t idx = 0; idx < src_dim; ++idx) {
            auto t = omega_tensor(idx, kd, n);
            if (n > 0 && t[0] == kd) t[0] = std::uint32_t(d);
            m.set(position(r.omega_index[n], std::uint32_t(omega_index(t, d))), idx, Rational(1));
        }
        out.f.push_back(std::move(m));
    }
    return out;
}

std::vector<Matrix> ideal_to_relative_cyclic(const RelativeFormsComplex& r) {
    std::size_t d = r.adapted.dim(), kd = r.ideal.dim();
    std::vector<Matrix> out;
    std::vector<std::uint32_t> t;
    for (std::size_t n = 0; n < r.c_index.size(); ++n) {
        std::size_t src_dim = ipow(kd, n + 1);
        Matrix m(r.c_index[n].size(), src_dim);
        for (std::size_t idx = 0; idx < src_dim; ++idx) {
            decode(idx, kd, n + 1, t);
            m.set(position(r.c_index[n], std::uint32_t(encode(t, d))), idx, Rational(1));
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Matrix> ideal_to_relative_bar(const RelativeFormsComplex& r) {
    std::size_t d = r.adapted.dim(), kd = r.ideal.dim();
    std::vector<Matrix> out;
    std::vector<std::uint32_t> t;
    out.emplace_back(0, 0);
    for (std::size_t n = 1; n < r.cbar_index.size(); ++n) {
        std::size_t src_dim = ipow(kd, n);
        Matrix m(r.cbar_index[n].size(), src_dim);
        for (std::size_t idx = 0; idx < src_dim; ++idx) {
            decode(idx, kd, n, t);
            m.set(position(r.cbar_index[n], std::uint32_t(encode(t, d))), idx, Rational(1));
        }
        out.push_back(std::move(m));
    }
    return out;
}

ExactnessCheck check_short_exact(const Matrix& i, const Matrix& p) {
    ExactnessCheck c;
    if (i.rows() != p.cols()) throw std::invalid_argument("check_short_exact: shape mismatch");
    c.injective = rank(i) == i.cols();
    c.surjective = rank(p) == p.rows();
    c.composite_zero = (p * i).is_zero();
    c.dims_add_up = i.cols() + p.rows() == i.rows();
    return c;
}

}  // namespace cyclica
