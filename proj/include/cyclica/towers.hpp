#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cyclica/complexes.hpp"

namespace cyclica {

/// Truncated inverse system X_1 ← X_2 ← ... ← X_N of supercomplexes.
/// Levels are numbered from 1.
class Tower {
public:
    Tower() = default;
    /// sigma[k] is σ_{k+2}: X_{k+2} → X_{k+1}; every σ is checked to be a chain map.
    Tower(std::vector<SuperComplex> levels, std::vector<SuperMap> sigma);
    /// X ← X ← ... with a fixed self-map (identity when omitted).
    static Tower constant(const SuperComplex& x, std::size_t N, std::optional<SuperMap> s = std::nullopt);
    static Tower zero(std::size_t N);

    [[nodiscard]] std::size_t size() const { return levels_.size(); }
    [[nodiscard]] const SuperComplex& level(std::size_t n) const { return levels_.at(n - 1); }
    [[nodiscard]] const std::vector<SuperComplex>& levels() const { return levels_; }
    /// σ_n: X_n → X_{n-1} for 2 ≤ n ≤ N.
    [[nodiscard]] const SuperMap& sigma(std::size_t n) const { return sigma_.at(n - 2); }
    /// The composite X_from → X_to (from ≥ to).
    [[nodiscard]] SuperMap sigma_power(std::size_t from, std::size_t to) const;
    [[nodiscard]] Tower truncate(std::size_t N) const;

private:
    std::vector<SuperComplex> levels_;
    std::vector<SuperMap> sigma_;
};

/// Level representative of a pro-map X → Y: g_n: X_{f(n)} → Y_n for
/// n = 1..size() with f nondecreasing and g_{n-1} σ^{f(n)-f(n-1)} = σ g_n.
class TowerMap {
public:
    TowerMap() = default;
    /// shift[n-1] = f(n), maps[n-1] = g_n; validated.
    TowerMap(Tower src, Tower dst, std::vector<std::size_t> shift, std::vector<SuperMap> maps);
    static TowerMap identity(const Tower& x);

    [[nodiscard]] const Tower& src() const { return *src_; }
    [[nodiscard]] const Tower& dst() const { return *dst_; }
    [[nodiscard]] std::size_t size() const { return maps_.size(); }
    [[nodiscard]] std::size_t shift(std::size_t n) const { return shift_.at(n - 1); }
    [[nodiscard]] const std::vector<std::size_t>& shifts() const { return shift_; }
    [[nodiscard]] const SuperMap& at(std::size_t n) const { return maps_.at(n - 1); }

private:
    std::shared_ptr<const Tower> src_, dst_;
    std::vector<std::size_t> shift_;
    std::vector<SuperMap> maps_;
};

/// (g∘f)_n = g_n ∘ f_{h(n)} with shift f∘h, on the levels where it is represented.
TowerMap compose(const TowerMap& g, const TowerMap& f);

/// Level n = A_1 ⊕ ... ⊕ A_n with the projections as structure maps.
Tower fake_product(const std::vector<SuperComplex>& seq);
/// The canonical A → fake_product(A.levels()); component p of ι_n is σ^{n-p}.
TowerMap iota(const Tower& a);

struct PropertyPReport {
    Verdict verdict = Verdict::inconclusive;
    /// s_k: A_{k+1} → A_{k+2} with σ² s_k = σ, for k = 1..N-2.
    std::vector<SuperMap> witnesses;
    std::optional<std::size_t> failed_at;  // k with no solution
};
/// Witness search for property (P) with n_k = k+1. A level with no solution
/// makes the verdict inconclusive since other choices of n_k are not searched.
PropertyPReport has_property_P(const Tower& a);

struct FibrantReplacement {
    Tower rx;
    TowerMap r;  // X → RX with shift n ↦ n+1
};
/// RX_n is the fiber of D: ⊕_{p≤n+1} X_p → ⊕_{p≤n} X_p, (Dx)_p = x_p - σ x_{p+1};
/// r_n: X_{n+1} → RX_n is ι_{n+1} into the first summand. Levels 1..N-1.
FibrantReplacement r_fibrant(const Tower& x);

/// Levelwise mapping cones of a tower map.
Tower cone_tower(const TowerMap& f);

struct LevelWitness {
    std::size_t level = 0;
    std::size_t homology_dim = 0;
    /// Least n' ≥ level with H(C_{n'}) → H(C_level) zero.
    std::optional<std::size_t> witness;
    /// Ranks of H(C_{n'}) → H(C_level) for n' = level, level+1, ... up to the witness or N.
    std::vector<std::size_t> ranks;
};

struct ProTrivialityReport {
    Verdict verdict = Verdict::inconclusive;
    std::size_t max_level = 0, window = 0;
    std::vector<LevelWitness> levels;  // levels 1..N-window
};

/// Every homology class at level n ≤ N - w must die in some higher level.
/// A level without witness gives fail when its persistent rank is constant
/// over the last w+1 levels, inconclusive otherwise.
ProTrivialityReport is_pro_contractible(const Tower& c, std::size_t window = 2);
ProTrivialityReport pro_weq_report(const TowerMap& f, std::size_t window = 2);
bool is_pro_weq(const TowerMap& f, std::size_t window = 2);

}  // namespace cyclica
