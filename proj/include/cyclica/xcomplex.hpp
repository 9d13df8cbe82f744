#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclica/complexes.hpp"
#include "cyclica/towers.hpp"

namespace cyclica {

/// X^n(M) = M_n/bM_{n+1} ⊕ M_{n-1} ⊕ ... ⊕ M_0 graded by degree parity,
/// with differential induced by b + B. Within each parity the summands are
/// stored by increasing degree. The top quotient uses the non-pivot
/// coordinates of the echelon form of bM_{n+1} as basis.
struct XLevel {
    std::size_t n = 0;
    SuperComplex x;
    std::vector<std::size_t> dims;        // dims[i]: dimension of summand i
    std::vector<std::size_t> offset;      // offset[i]: start of summand i in its parity block
    std::vector<std::uint32_t> top_basis; // coordinates of M_n spanning the quotient
    Echelon top_image;                    // bM_{n+1} inside M_n

    [[nodiscard]] std::size_t summand_dim(std::size_t i) const;
    /// M_n → M_n/bM_{n+1} in the top basis.
    [[nodiscard]] Matrix top_projection() const;
    /// Positions of summand i inside its parity block.
    [[nodiscard]] std::vector<std::uint32_t> summand_indices(std::size_t i) const;
};

/// Requires M truncated at degree ≥ n+1; throws std::invalid_argument otherwise.
XLevel x_level(const MixedComplex& m, std::size_t n);

/// The map X^{src.n}(M) → X^{dst.n}(M') induced by a mixed map f (src.n ≥ dst.n):
/// f on summands below dst.n, f followed by the quotient on summand dst.n, zero above.
SuperMap x_level_map(const XLevel& src, const XLevel& dst, const MixedMap& f);

struct XTower {
    Tower tower;
    std::vector<XLevel> levels;  // levels[n-1] = X^n
};

/// Levels X^1..X^N of a mixed complex truncated at ≥ N+1, with the canonical surjections.
XTower x_tower(const MixedComplex& m, std::size_t N);

/// Inverse system of mixed complexes M^1 ← M^2 ← ... (maps[k]: M^{k+2} → M^{k+1}).
struct MixedTower {
    std::vector<MixedComplex> levels;
    std::vector<MixedMap> maps;
};

/// Level n is X^n(M^n), σ the composite of the tower map with the X-level projection.
XTower x_diag(const MixedTower& mt, std::size_t N);

/// Levelwise X^n(f) between the X towers of M and M' (shift n ↦ n).
TowerMap x_tower_map(const XTower& src, const XTower& dst, const MixedMap& f);

}  // namespace cyclica
