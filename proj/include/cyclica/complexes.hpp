#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclica/linalg.hpp"

namespace cyclica {

/// Bounded chain complex C_lo ... C_hi with d_n: C_n → C_{n-1}. A complex
/// marked truncated stands for an unbounded-above one cut at hi, so its
/// top homology is not fully determined.
class ChainComplex {
public:
    ChainComplex() = default;
    /// d[k] is the differential out of degree lo + k (d[0] must have zero rows).
    ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix> d, bool truncated = false);
    /// Complex in degrees 0..N from d_1..d_N.
    static ChainComplex from_boundaries(std::vector<std::size_t> dims, const std::vector<Matrix>& d_from_1,
                                        bool truncated = false);
    /// ℚ^dim concentrated in one degree.
    static ChainComplex concentrated(std::size_t dim, int degree = 0);

    [[nodiscard]] int min_degree() const { return lo_; }
    [[nodiscard]] int max_degree() const { return lo_ + int(dims_.size()) - 1; }
    [[nodiscard]] bool empty() const { return dims_.empty(); }
    [[nodiscard]] bool truncated() const { return truncated_; }
    [[nodiscard]] std::size_t dim(int n) const;
    /// d_n: C_n → C_{n-1}; a zero matrix of the right shape outside the stored range.
    [[nodiscard]] Matrix d(int n) const;
    [[nodiscard]] std::size_t homology_dim(int n) const;
    [[nodiscard]] Subquotient homology(int n) const;
    /// Highest degree whose homology does not depend on data beyond the truncation.
    [[nodiscard]] int top_defined_degree() const { return truncated_ ? max_degree() - 1 : max_degree(); }

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;
    bool truncated_ = false;
};

/// Degreewise maps f_n: A_n → B_n commuting with d; checked at construction.
class ChainMap {
public:
    ChainMap() = default;
    /// maps[k] is f at degree lo + k; missing degrees are zero.
    ChainMap(ChainComplex src, ChainComplex dst, int lo, std::vector<Matrix> maps);
    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(ChainComplex src, ChainComplex dst);

    [[nodiscard]] const ChainComplex& src() const { return *src_; }
    [[nodiscard]] const ChainComplex& dst() const { return *dst_; }
    [[nodiscard]] Matrix at(int n) const;

private:
    std::shared_ptr<const ChainComplex> src_, dst_;
    int lo_ = 0;
    std::vector<Matrix> f_;
};

/// C_n = B_n ⊕ A_{n-1} with d(b, a) = (d b + f a, -d a).
ChainComplex cone(const ChainMap& f);
/// The inclusion B → cone(f).
ChainMap cone_inclusion(const ChainMap& f);
/// The projection cone(f) → A[-1], written in the degrees of the cone.
ChainMap cone_projection(const ChainMap& f);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct QuasiIsoReport {
    bool verdict = false;               // over fully-defined degrees
    int first_degree = 0;
    std::vector<std::size_t> cone_homology;  // degrees first_degree..top_defined
    std::vector<int> edge_degrees;      // cone degrees whose homology is cut by truncation
    std::vector<std::size_t> edge_homology;
};

/// Quasi-isomorphism test via acyclicity of the cone in fully-defined degrees.
QuasiIsoReport quasi_iso_report(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

/// Hom complex: degree n holds the maps A_r → B_{r+n}; the differential is
/// f ↦ ∂f - (-1)^n f∂. Component matrices are vectorized row-major.
ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b);

/// Z/2-graded complex with odd square-zero differential.
class SuperComplex {
public:
    SuperComplex() = default;
    SuperComplex(std::size_t dim_even, std::size_t dim_odd, Matrix d_even, Matrix d_odd);
    static SuperComplex zero() { return SuperComplex(0, 0, Matrix(0, 0), Matrix(0, 0)); }

    [[nodiscard]] std::size_t dim_even() const { return de_; }
    [[nodiscard]] std::size_t dim_odd() const { return do_; }
    [[nodiscard]] std::size_t dim(int parity) const { return parity == 0 ? de_ : do_; }
    [[nodiscard]] std::size_t total_dim() const { return de_ + do_; }
    /// even → odd
    [[nodiscard]] const Matrix& d_even() const { return d_even_; }
    /// odd → even
    [[nodiscard]] const Matrix& d_odd() const { return d_odd_; }
    /// Differential out of the given parity.
    [[nodiscard]] const Matrix& d(int parity) const { return parity == 0 ? d_even_ : d_odd_; }
    [[nodiscard]] Subquotient homology(int parity) const;
    [[nodiscard]] std::size_t homology_dim(int parity) const;

private:
    std::size_t de_ = 0, do_ = 0;
    Matrix d_even_, d_odd_;
};

/// Parity-preserving map of supercomplexes.
struct SuperMap {
    Matrix even, odd;
    [[nodiscard]] const Matrix& part(int parity) const { return parity == 0 ? even : odd; }
};

SuperMap super_identity(const SuperComplex& x);
SuperMap super_zero(const SuperComplex& x, const SuperComplex& y);
SuperMap compose(const SuperMap& g, const SuperMap& f);
bool is_super_chain_map(const SuperComplex& x, const SuperComplex& y, const SuperMap& f);
/// Throws InvariantError unless f is a chain map of supercomplexes.
void check_super_map(const SuperComplex& x, const SuperComplex& y, const SuperMap& f);
/// cone(f: P → Q) = Q ⊕ ΠP with differential [[∂_Q, f], [0, -∂_P]].
SuperComplex super_cone(const SuperComplex& p, const SuperComplex& q, const SuperMap& f);
/// Induced map on homology, one matrix per parity.
SuperMap super_homology_map(const SuperComplex& x, const SuperComplex& y, const SuperMap& f);
/// Same, with precomputed homology bases of source and target.
SuperMap super_homology_map(const Subquotient hx[2], const Subquotient hy[2], const SuperMap& f);
/// Direct sum of supercomplexes (even parts then odd parts, each in order).
SuperComplex super_sum(const std::vector<SuperComplex>& xs);
/// Parity shift ΠX.
SuperComplex parity_shift(const SuperComplex& x);

/// Totalization by parity; degrees sorted ascending inside each parity.
SuperComplex super_of_chain(const ChainComplex& c);
/// Z/2-graded Hom(X, Y): even = Hom(X0,Y0) ⊕ Hom(X1,Y1), odd = Hom(X0,Y1) ⊕ Hom(X1,Y0);
/// differential f ↦ ∂f - (-1)^{|f|} f∂. Components vectorized row-major.
SuperComplex hom_super(const SuperComplex& x, const SuperComplex& y);
/// Precomposition with h: X' → X as a map hom_super(X, Y) → hom_super(X', Y).
SuperMap hom_super_precompose(const SuperComplex& x, const SuperComplex& xp, const SuperComplex& y,
                              const SuperMap& h);
/// Postcomposition with g: Y → Y' as a map hom_super(X, Y) → hom_super(X, Y').
SuperMap hom_super_postcompose(const SuperComplex& x, const SuperComplex& y, const SuperComplex& yp,
                               const SuperMap& g);

/// Mixed complex truncated at degree N: b_n: M_n → M_{n-1} for 1 ≤ n ≤ N and
/// B_n: M_n → M_{n+1} for 0 ≤ n ≤ N-1. The identities b² = 0, B² = 0 and
/// bB + Bb = 0 are checked wherever all constituent maps exist.
class MixedComplex {
public:
    MixedComplex() = default;
    /// b[n] for n = 0..N (b[0] has zero rows), B[n] for n = 0..N-1.
    MixedComplex(std::vector<std::size_t> dims, std::vector<Matrix> b, std::vector<Matrix> B);
    /// Same, skipping the identity checks (callers verifying them separately).
    static MixedComplex unchecked(std::vector<std::size_t> dims, std::vector<Matrix> b, std::vector<Matrix> B);
    static MixedComplex concentrated(std::size_t dim, std::size_t max_degree);

    [[nodiscard]] std::size_t max_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
    [[nodiscard]] std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    /// b_n: M_n → M_{n-1}; n in 1..N.
    [[nodiscard]] const Matrix& b(std::size_t n) const { return b_.at(n); }
    /// B_n: M_n → M_{n+1}; n in 0..N-1.
    [[nodiscard]] const Matrix& B(std::size_t n) const { return B_.at(n); }
    /// The b-column as a truncated chain complex.
    [[nodiscard]] ChainComplex b_complex() const;
    /// Restriction to degrees 0..n.
    [[nodiscard]] MixedComplex truncate(std::size_t n) const;

    struct IdentityCheck {
        bool b_squared = true, B_squared = true, anticommute = true;
        [[nodiscard]] bool all() const { return b_squared && B_squared && anticommute; }
    };
    [[nodiscard]] IdentityCheck check_identities() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<Matrix> b_, B_;
};

/// Degreewise maps commuting with b and B (checked).
struct MixedMap {
    std::vector<Matrix> f;  // f[n]: M_n → M'_n
};
void check_mixed_map(const MixedComplex& m, const MixedComplex& mp, const MixedMap& f);

/// Chain complex with periodicity operator S_n: P_n → P_{n-2} commuting with d.
struct SComplexLevelData {
    ChainComplex P;
    std::vector<Matrix> S;  // S[n - P.min_degree()]
    [[nodiscard]] Matrix S_at(int n) const;
};

/// Bar construction: degree n is ⊕_{p≥0} M_{n-2p} (summand p = 0 first);
/// differential b on each summand plus B from summand p to summand p-1;
/// S kills summand 0 and moves summand p to summand p-1.
SComplexLevelData bar_S(const MixedComplex& m);
/// Degreewise kernel of f ↦ S f - f S inside hom_complex(P, Q).
ChainComplex hom_S(const SComplexLevelData& p, const SComplexLevelData& q);

}  // namespace cyclica
