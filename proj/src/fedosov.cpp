#include "cyclica/fedosov.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "cyclica/forms.hpp"

namespace cyclica {

namespace {

using Word = std::vector<std::uint32_t>;

std::vector<FormTerm> collect(std::map<Word, Rational>& acc) {
    std::vector<FormTerm> out;
    for (auto& [w, c] : acc)
        if (!c.is_zero()) out.push_back({w, c});
    return out;
}

/// d(a0; a1..ak) = (1; a0, a1..ak), zero when a0 is the unit.
std::optional<Word> d_word(const Word& u, std::uint32_t unit) {
    if (u[0] == unit) return std::nullopt;
    Word w{unit};
    w.insert(w.end(), u.begin(), u.end());
    return w;
}

void check_cap(std::size_t dim, std::size_t cap, const std::string& what) {
    if (dim > cap)
        throw DimensionCapError(what + " has dimension " + std::to_string(dim) + ", above the cap " + std::to_string(cap));
}

}  // namespace

std::vector<FormTerm> form_product(const Algebra& a, const Word& u, const Word& v, std::size_t max_degree) {
    std::size_t n = u.size() - 1, m = v.size() - 1;
    if (n + m > max_degree) return {};
    const std::uint32_t unit = std::uint32_t(a.dim());
    std::map<Word, Rational> acc;
    if (v[0] == unit) {
        Word w = u;
        w.insert(w.end(), v.begin() + 1, v.end());
        acc[w] += Rational(1);
        return collect(acc);
    }
    // u · v0 = (-1)^n b'(u0, u1, ..., un, v0), then append v1..vm.
    Word x = u;
    x.push_back(v[0]);
    for (std::size_t j = 0; j <= n; ++j) {
        Rational sign((n + j) % 2 == 0 ? 1 : -1);
        SparseVec prod = (j == 0 && x[0] == unit) ? unit_vec(x[1]) : a.product(x[j], x[j + 1]);
        for (const auto& e : prod) {
            Word w(x.begin(), x.begin() + long(j));
            w.push_back(e.idx);
            w.insert(w.end(), x.begin() + long(j) + 2, x.end());
            w.insert(w.end(), v.begin() + 1, v.end());
            acc[w] += sign * e.val;
        }
    }
    return collect(acc);
}

std::vector<FormTerm> fedosov_product(const Algebra& a, const Word& u, const Word& v, std::size_t max_degree) {
    const std::uint32_t unit = std::uint32_t(a.dim());
    std::map<Word, Rational> acc;
    for (auto& t : form_product(a, u, v, max_degree)) acc[t.word] += t.coeff;
    auto du = d_word(u, unit), dv = d_word(v, unit);
    if (du && dv)
        for (auto& t : form_product(a, *du, *dv, max_degree)) acc[t.word] -= t.coeff;
    return collect(acc);
}

// ---------------------------------------------------------------- 𝒯_n A

std::size_t fedosov_dim(std::size_t d, std::size_t n) {
    std::size_t s = 0;
    for (std::size_t p = 0; p <= n; ++p) s += omega_dim(d, 2 * p);
    return s;
}

std::uint32_t FedosovLevel::index_of(const Word& word) const {
    std::size_t k = word.size() - 1;
    if (k % 2 != 0 || k > 2 * level) throw std::out_of_range("form degree outside the level");
    std::size_t d = base.dim();
    std::size_t idx = 0;
    for (auto c : word) idx = idx * d + c;  // leading letter may equal d
    if (k == 0 && word[0] >= d) throw std::out_of_range("degree-zero forms live in A");
    return std::uint32_t(block_offset[k / 2] + idx);
}

Word FedosovLevel::word_of(std::size_t idx) const {
    std::size_t p = 0;
    while (p + 1 < block_offset.size() && block_offset[p + 1] <= idx) ++p;
    std::size_t r = idx - block_offset[p], d = base.dim(), k = 2 * p;
    Word w(k + 1);
    for (std::size_t j = k; j > 0; --j) {
        w[j] = std::uint32_t(r % d);
        r /= d;
    }
    w[0] = std::uint32_t(r);
    return w;
}

Matrix FedosovLevel::projection(std::size_t m) const {
    if (m > level) throw std::invalid_argument("projection to a higher level");
    std::size_t rows = fedosov_dim(base.dim(), m);
    return embed(Matrix::identity(rows), rows, dim(), 0, 0);
}

FedosovLevel t_algebra(const Algebra& a, std::size_t n, std::size_t cap) {
    std::size_t d = a.dim(), total = fedosov_dim(d, n);
    check_cap(total, cap, "T_" + std::to_string(n) + "(" + a.name() + ")");
    FedosovLevel t;
    t.base = a;
    t.level = n;
    for (std::size_t p = 0, off = 0; p <= n; ++p) {
        t.block_offset.push_back(off);
        off += omega_dim(d, 2 * p);
    }
    // A placeholder algebra is not needed: index_of/word_of only use base, level and offsets.
    std::vector<Word> words(total);
    for (std::size_t i = 0; i < total; ++i) words[i] = t.word_of(i);
    std::vector<SparseVec> prods(total * total);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            std::vector<Entry> raw;
            for (const auto& term : fedosov_product(a, words[i], words[j], 2 * n))
                raw.push_back({t.index_of(term.word), term.coeff});
            prods[i * total + j] = normalize(std::move(raw));
        }
    t.algebra = Algebra::from_products("T_" + std::to_string(n) + "(" + a.name() + ")", total, std::move(prods));
    return t;
}

// ---------------------------------------------------------------- Ω²T

std::uint32_t OmegaTwo::index(std::size_t t0, std::size_t t1, std::size_t t2) const {
    std::size_t n = t->dim();
    return std::uint32_t((t0 * n + t1) * n + t2);
}

SparseVec OmegaTwo::tensor(const SparseVec& x0, const SparseVec& x1, const SparseVec& x2) const {
    std::vector<Entry> raw;
    for (const auto& a : x0)
        for (const auto& b : x1)
            for (const auto& c : x2) raw.push_back({index(a.idx, b.idx, c.idx), a.val * b.val * c.val});
    return normalize(std::move(raw));
}

SparseVec OmegaTwo::d_cup_d(const SparseVec& x, const SparseVec& y) const {
    return tensor(unit_vec(std::uint32_t(t->dim())), x, y);
}

namespace {

struct Triple {
    std::size_t t0, t1, t2;
};

Triple decode3(std::size_t idx, std::size_t n) { return {idx / (n * n), (idx / n) % n, idx % n}; }

/// Product in T̃ of a basis element t0 (unit when t0 = dim) with a vector.
SparseVec tilde_times(const Algebra& t, std::size_t t0, const SparseVec& y) {
    if (t0 == t.dim()) return y;
    return t.multiply(unit_vec(std::uint32_t(t0)), y);
}

}  // namespace

SparseVec OmegaTwo::left_mult(const SparseVec& x, const SparseVec& w) const {
    const Algebra& T = t->algebra;
    std::size_t n = T.dim();
    std::vector<Entry> raw;
    for (const auto& e : w) {
        auto [t0, t1, t2] = decode3(e.idx, n);
        SparseVec x0 = t0 == n ? x : T.multiply(x, unit_vec(std::uint32_t(t0)));
        for (const auto& f : x0) raw.push_back({index(f.idx, t1, t2), e.val * f.val});
    }
    return normalize(std::move(raw));
}

SparseVec OmegaTwo::right_mult(const SparseVec& w, const SparseVec& y) const {
    const Algebra& T = t->algebra;
    std::size_t n = T.dim();
    std::vector<Entry> raw;
    auto push = [&](const SparseVec& a, const SparseVec& b, const SparseVec& c, const Rational& s) {
        for (const auto& e : tensor(a, b, c)) raw.push_back({e.idx, s * e.val});
    };
    for (const auto& e : w) {
        auto [t0, t1, t2] = decode3(e.idx, n);
        SparseVec u0 = unit_vec(std::uint32_t(t0)), u1 = unit_vec(std::uint32_t(t1)), u2 = unit_vec(std::uint32_t(t2));
        // (t0 dt1 dt2) y = t0t1 dt2 dy - t0 d(t1t2) dy + t0 dt1 d(t2 y)
        push(tilde_times(T, t0, u1), u2, y, e.val);
        push(u0, T.multiply(u1, u2), y, -e.val);
        push(u0, u1, T.multiply(u2, y), e.val);
    }
    return normalize(std::move(raw));
}

// ---------------------------------------------------------------- φ

FundamentalCochain fundamental_cochain_to(const Algebra& a, std::size_t n, std::size_t m, std::size_t cap) {
    if (m > n) throw std::invalid_argument("fundamental cochain: target level above source level");
    FundamentalCochain f;
    f.source = t_algebra(a, n, cap);
    f.target = t_algebra(a, m, cap);
    const FedosovLevel& T = f.target;
    const std::uint32_t U = std::uint32_t(a.dim());
    const std::size_t tdim = T.dim();
    const std::size_t max_deg = 2 * m;
    OmegaTwo om{&f.target};

    // Forms of A as elements of T (terms above degree 2m dropped); `tilde`
    // allows the unit word (1) of degree 0, sent to index dim T.
    auto to_t = [&](const std::vector<FormTerm>& terms, bool tilde) {
        std::vector<Entry> raw;
        for (const auto& term : terms) {
            if (term.word.size() - 1 > max_deg) continue;
            if (term.word.size() == 1 && term.word[0] == U) {
                if (!tilde) throw InvariantError("unit where a non-unital element was expected");
                raw.push_back({std::uint32_t(tdim), term.coeff});
            } else {
                raw.push_back({T.index_of(term.word), term.coeff});
            }
        }
        return normalize(std::move(raw));
    };
    auto word_t = [&](const Word& w, bool tilde = false) { return to_t({FormTerm{w, Rational(1)}}, tilde); };

    std::vector<SparseVec> cols(f.source.dim());
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        Word w = f.source.word_of(idx);
        std::size_t k = (w.size() - 1) / 2;
        if (k == 0) continue;  // φ(a) = δa δ(1) = 0
        std::uint32_t a0 = w[0];
        auto x = [&](std::size_t i) { return w[2 * i - 1]; };
        auto y = [&](std::size_t i) { return w[2 * i]; };
        auto prefix = [&](std::size_t i) {  // a ω_1 .. ω_{i-1}
            return Word(w.begin(), w.begin() + long(2 * (i - 1) + 1));
        };
        auto tail = [&](std::size_t i) {  // ω_{i+1} .. ω_k
            Word t{U};
            t.insert(t.end(), w.begin() + long(2 * i + 1), w.end());
            return t;
        };
        auto ytail = [&](std::size_t i) {  // y_i ω_{i+1} .. ω_k
            Word t{y(i)};
            t.insert(t.end(), w.begin() + long(2 * i + 1), w.end());
            return t;
        };
        std::vector<Entry> raw;
        auto add = [&](const SparseVec& v, int sign) {
            for (const auto& e : v) raw.push_back({e.idx, sign > 0 ? e.val : -e.val});
        };
        SparseVec unit_t = unit_vec(std::uint32_t(tdim));

        if (a0 != U) add(om.tensor(unit_t, word_t({a0}), word_t(tail(0))), +1);
        for (std::size_t i = 1; i <= k; ++i) {
            SparseVec pre = word_t(prefix(i), true);
            if (pre.empty()) continue;  // prefix already above the target level
            // - a ω_1..ω_{i-1} δx_i δ(y_i ω_{i+1}..ω_k)
            add(om.tensor(pre, word_t({x(i)}), word_t(ytail(i))), -1);
            if (i == k) continue;  // remaining terms carry δ(1) = 0
            SparseVec tl = word_t(tail(i));
            add(om.tensor(pre, word_t({U, x(i), y(i)}), tl), +1);
            add(om.tensor(pre, to_t(fedosov_product(a, {x(i)}, {y(i)}, max_deg), false), tl), +1);
            add(om.tensor(to_t(fedosov_product(a, prefix(i), {x(i)}, max_deg), false), word_t({y(i)}), tl), -1);
        }
        cols[idx] = normalize(std::move(raw));
    }
    f.phi = Matrix::from_columns(om.dim(), cols);
    return f;
}

FundamentalCochain fundamental_cochain(const Algebra& a, std::size_t n, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("fundamental cochain needs level at least 1");
    return fundamental_cochain_to(a, n, n - 1, cap);
}

CochainIdentityReport check_cochain_identities(const FundamentalCochain& f, std::optional<std::size_t> level) {
    CochainIdentityReport rep;
    std::size_t L = level.value_or(f.source.level == 0 ? 0 : (f.source.level - 1) / 2);
    L = std::min(L, f.target.level);
    rep.level = L;
    FedosovLevel low = L == f.target.level ? f.target : t_algebra(f.source.base, L, f.target.dim());
    OmegaTwo om{&low};
    // Ω²(𝒯_m) → Ω²(𝒯_L): drop every basis tensor with a factor above level L.
    std::size_t tm = f.target.dim(), tl = low.dim();
    auto cut = [&](const SparseVec& v) {
        std::vector<Entry> raw;
        for (const auto& e : v) {
            std::size_t t0 = e.idx / (tm * tm), t1 = (e.idx / tm) % tm, t2 = e.idx % tm;
            if (t0 == tm) t0 = tl;
            else if (t0 >= tl) continue;
            if (t1 >= tl || t2 >= tl) continue;
            raw.push_back({om.index(t0, t1, t2), e.val});
        }
        return normalize(std::move(raw));
    };
    Matrix proj = f.source.projection(L);
    std::size_t n = f.source.dim();
    std::vector<SparseVec> sig(n), phi(n);
    auto cols = f.phi.columns();
    for (std::size_t i = 0; i < n; ++i) {
        sig[i] = proj.apply(unit_vec(std::uint32_t(i)));
        phi[i] = cut(cols[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++rep.pairs;
            SparseVec phi_xy;
            for (const auto& e : f.source.algebra.product(i, j)) axpy(phi_xy, e.val, phi[e.idx]);
            SparseVec xphi = om.left_mult(sig[i], phi[j]);
            SparseVec phiy = om.right_mult(phi[i], sig[j]);
            SparseVec dd = om.d_cup_d(sig[i], sig[j]);
            SparseVec cob = phi_xy;  // φ(x∘y) - xφ(y) - φ(x)y
            axpy(cob, Rational(-1), xphi);
            axpy(cob, Rational(-1), phiy);
            if (cob != dd) ++rep.coboundary_failures;
            SparseVec lit = xphi;  // xφ(y) - φ(x∘y) + φ(x)y
            axpy(lit, Rational(-1), phi_xy);
            axpy(lit, Rational(1), phiy);
            if (lit != dd) ++rep.literal_sign_failures;
            SparseVec coc = xphi;
            axpy(coc, Rational(1), phiy);
            axpy(coc, Rational(1), dd);
            if (coc != phi_xy) ++rep.cocycle_failures;
        }
    return rep;
}

// ---------------------------------------------------------------- towers of algebras and ideals

AlgebraTower AlgebraTower::constant(const Algebra& a, std::size_t N) {
    AlgebraTower t;
    t.levels.assign(N, a);
    t.sigma.assign(N ? N - 1 : 0, Matrix::identity(a.dim()));
    return t;
}

void AlgebraTower::validate() const {
    if (sigma.size() + 1 != levels.size() && !levels.empty()) throw std::invalid_argument("algebra tower: σ count");
    for (std::size_t k = 0; k < sigma.size(); ++k)
        if (!is_algebra_map(sigma[k], levels[k + 1], levels[k]))
            throw InvariantError("algebra tower: σ_" + std::to_string(k + 2) + " is not multiplicative");
}

AlgebraTower fedosov_tower(const Algebra& a, std::size_t N, std::size_t cap) {
    AlgebraTower t;
    std::vector<FedosovLevel> lv;
    for (std::size_t n = 1; n <= N; ++n) {
        lv.push_back(t_algebra(a, n, cap));
        t.levels.push_back(lv.back().algebra);
        if (n > 1) t.sigma.push_back(lv.back().projection(n - 1));
    }
    t.validate();
    return t;
}

void IdealTower::validate() const {
    if (ideals.size() != base.size()) throw std::invalid_argument("ideal tower: one ideal per level");
    for (std::size_t n = 2; n <= ideals.size(); ++n)
        for (const auto& v : ideals[n - 1].basis())
            if (!ideals[n - 2].contains(base.sigma[n - 2].apply(v)))
                throw InvariantError("ideal tower: σ(K_" + std::to_string(n) + ") ⊄ K_" + std::to_string(n - 1));
}

IdealTower k_infinity(const IdealTower& k) {
    IdealTower out;
    out.base = k.base;
    for (std::size_t n = 1; n <= k.size(); ++n) out.ideals.push_back(power(k.ideals[n - 1], n));
    out.validate();
    return out;
}

IdealTower induced_ideal_tower(const IdealInclusion& i, std::size_t N, std::size_t cap) {
    const Algebra& a = i.ambient();
    auto [q, pi] = quotient_algebra(i);
    IdealTower out;
    out.base = fedosov_tower(a, N, cap);
    auto om = omega_map(pi, a, q, 2 * N);
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<Matrix> blocks;
        for (std::size_t p = 0; p <= n; ++p) blocks.push_back(om.f[2 * p]);
        Matrix map = blocks[0];
        for (std::size_t p = 1; p <= n; ++p) map = direct_sum(map, blocks[p]);
        out.ideals.push_back(IdealInclusion::span(out.base.levels[n - 1], kernel_vectors(map)));
    }
    out.validate();
    return out;
}

}  // namespace cyclica
