#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclica/algebra.hpp"
#include "cyclica/complexes.hpp"
#include "cyclica/towers.hpp"

namespace cyclica {

/// H^p of Hom(X_m, Y_n) over the grid of source level m and target level n.
///
/// Over ℚ the cohomology of Hom(X, Y) is Hom(H X, H Y), so every grid entry
/// and every comparison map is computed from homology of the levels and the
/// homology maps of σ. An entry (n, p) is stabilized in m when all composite
/// colim maps between source levels in the top window N-w..N have the same
/// rank; that rank is its value. Likewise the overall value per parity needs
/// equal ranks of all composites with m < m' and n' < n inside the window.
struct HPReport {
    std::size_t N = 0, window = 0;
    std::vector<std::vector<std::array<std::size_t, 2>>> grid;   // grid[m-1][n-1][p]
    std::vector<std::array<std::optional<std::size_t>, 2>> stabilized;  // per target level n
    std::array<std::optional<std::size_t>, 2> overall;
    [[nodiscard]] Verdict verdict() const {
        return overall[0] && overall[1] ? Verdict::pass : Verdict::inconclusive;
    }
};

/// For towers needing a fibrant target apply r_fibrant to dst first; X towers
/// of constant algebras are fibrant already. Uses min(src.size(), dst.size())
/// levels; fewer than window + 2 leaves everything unstable.
HPReport hp_grid(const Tower& src, const Tower& dst, std::size_t window = 2);
/// X^1..X^N of ΩA against those of ΩB.
HPReport hp_grid(const Algebra& a, const Algebra& b, std::size_t N, std::size_t window = 2);

/// The pro-homology of a tower as an essentially constant system: per parity
/// the common rank of all homology maps H(X_m) → H(X_n), N-w ≤ n < m ≤ N.
struct StableHomology {
    std::array<std::optional<std::size_t>, 2> dim;
    [[nodiscard]] bool stable() const { return dim[0] && dim[1]; }
};
StableHomology stable_homology(const Tower& t, std::size_t window = 2);

struct NonNilpotentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A nilpotent ideal F with filtration F^r: the associated graded algebra
/// in a basis adapted to the filtration, with the weight of each basis vector.
struct GradedAlgebra {
    Algebra algebra;
    std::vector<std::size_t> weight;
    std::size_t nilpotency = 0;  // least r with F^r = 0
};
GradedAlgebra associated_graded(const IdealInclusion& f);

struct GoodwillieReport {
    Verdict verdict = Verdict::inconclusive;
    std::size_t nilpotency = 0;
    ProTrivialityReport map_cone;         // cone of X(ΩA) → X(Ω(A/F))
    ProTrivialityReport graded_positive;  // positive-weight part of X(Ω gr A)
};
/// Throws NonNilpotentError unless some power of f vanishes.
GoodwillieReport verify_goodwillie(const IdealInclusion& f, std::size_t N, std::size_t window = 2);

/// The three conditions for K to be H-unital: (i) C^bar K acyclic in degrees
/// 1..N-1 (tensoring with V = ℚ), (ii) C(K) → C(K:A) and (iii)
/// C^bar(K) → C^bar(K:A) quasi-isomorphisms, for every given ambient A.
struct HUnitalReport {
    std::size_t N = 0;
    bool cond_i = false;
    std::vector<std::size_t> bar_homology;  // degrees 1..N-1
    std::vector<bool> cond_ii, cond_iii;     // one per embedding
    [[nodiscard]] bool ii() const;
    [[nodiscard]] bool iii() const;
    /// All three conditions give the same answer.
    [[nodiscard]] bool consistent() const { return cond_i == ii() && cond_i == iii(); }
    [[nodiscard]] Verdict verdict() const { return consistent() ? (cond_i ? Verdict::pass : Verdict::fail) : Verdict::fail; }
};
HUnitalReport check_h_unital(const Algebra& k, const std::vector<IdealInclusion>& embeddings, std::size_t N);

/// HP⁰(A/I,B) → HP⁰(A,B) → HP⁰(I,B) → HP¹(A/I,B) → HP¹(A,B) → HP¹(I,B) → HP⁰(A/I,B)
/// on the stable pro-homology. Node k receives map k-1 and emits map k.
struct RankCheck {
    std::string name;
    std::size_t lhs = 0, rhs = 0;
    [[nodiscard]] bool ok() const { return lhs == rhs; }
};
struct SixTermReport {
    std::array<std::size_t, 6> dims{};
    std::array<std::size_t, 6> map_rank{};
    std::vector<RankCheck> checks;  // per node: composite rank = 0, rank in + rank out = dim
    std::array<bool, 6> node_pass{};
    bool connecting_defined = false;  // stable H(ΩI) → H(ker) invertible
    [[nodiscard]] bool pass() const;
    static const std::array<std::string, 6>& labels();
};

struct ExcisionReport {
    Verdict verdict = Verdict::inconclusive;
    ProTrivialityReport direct;  // cone of X(ΩI) → X(Ω(I:A))
    bool stabilized = false;     // every tower entering the six-term sequence
    SixTermReport six_term;
};
ExcisionReport verify_excision(const IdealInclusion& i, const Algebra& b, std::size_t N, std::size_t window = 2);

}  // namespace cyclica
