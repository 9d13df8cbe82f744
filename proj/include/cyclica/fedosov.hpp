#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclica/algebra.hpp"

namespace cyclica {

/// Raised when a construction would exceed the configured dimension cap.
struct DimensionCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultFedosovCap = 200;

/// 𝒯_n A = Ω^0 A ⊕ Ω^2 A ⊕ ... ⊕ Ω^{2n} A with the Fedosov product
/// ω∘η = ωη - dω dη, forms of degree above 2n discarded. Basis: the blocks
/// in order of degree, each in the Ω basis of forms.hpp.
struct FedosovLevel {
    Algebra base;
    std::size_t level = 0;
    Algebra algebra;
    std::vector<std::size_t> block_offset;  // block_offset[p]: first index of Ω^{2p}

    [[nodiscard]] std::size_t dim() const { return algebra.dim(); }
    /// Index of a form (a0; a1..ak) of even degree k ≤ 2·level; a0 = base.dim() is the unit.
    [[nodiscard]] std::uint32_t index_of(const std::vector<std::uint32_t>& word) const;
    /// The form behind a basis index.
    [[nodiscard]] std::vector<std::uint32_t> word_of(std::size_t idx) const;
    /// 𝒯_n A → 𝒯_m A for m ≤ n, dropping the blocks above 2m.
    [[nodiscard]] Matrix projection(std::size_t m) const;
};

/// dim 𝒯_n A for dim A = d.
std::size_t fedosov_dim(std::size_t d, std::size_t n);

/// Throws DimensionCapError when dim 𝒯_n A exceeds cap. Associativity is verified.
FedosovLevel t_algebra(const Algebra& a, std::size_t n, std::size_t cap = kDefaultFedosovCap);

/// Products of forms in ΩA, exposed for tests: the Leibniz product, d, and
/// the Fedosov product, on words (a0; a1..ak). Terms of degree above
/// max_degree are dropped.
struct FormTerm {
    std::vector<std::uint32_t> word;
    Rational coeff;
};
std::vector<FormTerm> form_product(const Algebra& a, const std::vector<std::uint32_t>& u,
                                   const std::vector<std::uint32_t>& v, std::size_t max_degree);
std::vector<FormTerm> fedosov_product(const Algebra& a, const std::vector<std::uint32_t>& u,
                                      const std::vector<std::uint32_t>& v, std::size_t max_degree);

/// Ω²T for T = 𝒯_m A: basis (t0, t1, t2) with t0 ∈ T̃ (t0 = dim T is the unit),
/// index t0·t² + t1·t + t2.
struct OmegaTwo {
    const FedosovLevel* t = nullptr;
    [[nodiscard]] std::size_t dim() const { return (t->dim() + 1) * t->dim() * t->dim(); }
    [[nodiscard]] std::uint32_t index(std::size_t t0, std::size_t t1, std::size_t t2) const;
    /// x · (t0 dt1 dt2) = (x t0) dt1 dt2.
    [[nodiscard]] SparseVec left_mult(const SparseVec& x, const SparseVec& w) const;
    /// (t0 dt1 dt2) · y via the Leibniz rule.
    [[nodiscard]] SparseVec right_mult(const SparseVec& w, const SparseVec& y) const;
    /// dx dy = 1 dx dy.
    [[nodiscard]] SparseVec d_cup_d(const SparseVec& x, const SparseVec& y) const;
    /// x0 dx1 dx2 for x0 ∈ T̃ (index dim T is the unit) and x1, x2 ∈ T, trilinear.
    [[nodiscard]] SparseVec tensor(const SparseVec& x0, const SparseVec& x1, const SparseVec& x2) const;
};

/// φ: 𝒯_n A → Ω²(𝒯_m A) from the five-term formula, reading a basis tensor of
/// Ω^{2k} as a ω_1..ω_k with ω_i = dx_i dy_i. Output level m defaults to n-1.
struct FundamentalCochain {
    FedosovLevel source;  // 𝒯_n A
    FedosovLevel target;  // 𝒯_m A
    Matrix phi;           // dim Ω²(𝒯_m A) × dim 𝒯_n A
    [[nodiscard]] OmegaTwo omega_two() const { return OmegaTwo{&target}; }
};
/// Same with an explicit output level m ≤ n.
FundamentalCochain fundamental_cochain_to(const Algebra& a, std::size_t n, std::size_t m, std::size_t cap = kDefaultFedosovCap);
FundamentalCochain fundamental_cochain(const Algebra& a, std::size_t n, std::size_t cap = kDefaultFedosovCap);

struct CochainIdentityReport {
    std::size_t level = 0;  // 𝒯-level of Ω²𝒯 where the identities were compared
    std::size_t pairs = 0;
    std::size_t coboundary_failures = 0;    // bφ(x,y) = φ(x∘y) - xφ(y) - φ(x)y ≠ dx dy
    std::size_t cocycle_failures = 0;       // φ(x∘y) ≠ φ(x)y + xφ(y) + dx dy
    std::size_t literal_sign_failures = 0;  // xφ(y) - φ(x∘y) + φ(x)y ≠ dx dy
    [[nodiscard]] bool coboundary_ok() const { return coboundary_failures == 0; }
    [[nodiscard]] bool cocycle_ok() const { return cocycle_failures == 0; }
};
/// Checks the identities on all pairs of basis elements of 𝒯_n, after
/// projecting values to Ω²(𝒯_L). Terms dropped by truncating products at
/// level n only vanish there for L ≤ (n-1)/2, the default.
CochainIdentityReport check_cochain_identities(const FundamentalCochain& f,
                                               std::optional<std::size_t> level = std::nullopt);

/// Inverse system of algebras A_1 ← A_2 ← ... with algebra maps σ_n: A_n → A_{n-1}.
struct AlgebraTower {
    std::vector<Algebra> levels;  // levels[n-1] = A_n
    std::vector<LinMap> sigma;    // sigma[n-2] = σ_n
    [[nodiscard]] std::size_t size() const { return levels.size(); }
    static AlgebraTower constant(const Algebra& a, std::size_t N);
    /// Throws InvariantError unless every σ is an algebra map.
    void validate() const;
};

/// Levels 𝒯_1 A .. 𝒯_N A with the projections.
AlgebraTower fedosov_tower(const Algebra& a, std::size_t N, std::size_t cap = kDefaultFedosovCap);

/// Ideals K_n ⊴ A_n with σ(K_n) ⊆ K_{n-1}.
struct IdealTower {
    AlgebraTower base;
    std::vector<IdealInclusion> ideals;
    [[nodiscard]] std::size_t size() const { return ideals.size(); }
    /// Throws InvariantError unless the ideals are compatible with σ.
    void validate() const;
};

/// Level n is the n-th power of K_n.
IdealTower k_infinity(const IdealTower& k);

/// Kernel tower of 𝒯_n A → 𝒯_n(A/I), n = 1..N.
IdealTower induced_ideal_tower(const IdealInclusion& i, std::size_t N, std::size_t cap = kDefaultFedosovCap);

}  // namespace cyclica
