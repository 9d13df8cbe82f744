#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclica/algebra.hpp"
#include "cyclica/complexes.hpp"

namespace cyclica {

/// Noncommutative forms Ω^0 = A, Ω^n = Ã ⊗ A^{⊗n}, truncated at degree N.
///
/// Basis of Ω^n (n ≥ 1): tensors (a0, a1, ..., an) with a0 ∈ 0..d, where
/// a0 = d is the unit of Ã, and a_j ∈ 0..d-1; index a0·d^n + Σ a_j d^{n-j}.
/// The first d^{n+1} indices span C_n = A^{⊗n+1}; the last d^n span 1 ⊗ A^{⊗n}.
///
/// b = Σ_{i=0}^{n} (-1)^i μ_i where μ_i multiplies factors i and i+1 and μ_n
/// multiplies a_n into ã0 from the left. B(a0 ⊗ ... ⊗ an) =
/// Σ_i (-1)^{ni} 1 ⊗ t^i(a0 ⊗ ... ⊗ an) with t moving the last factor to the
/// front; B vanishes on 1 ⊗ A^{⊗n}.
struct FormsComplex {
    Algebra algebra;
    MixedComplex mixed;

    [[nodiscard]] std::size_t d() const { return algebra.dim(); }
    [[nodiscard]] std::size_t max_degree() const { return mixed.max_degree(); }
};

/// d^n, throwing on overflow of the index type.
std::size_t ipow(std::size_t d, std::size_t n);
std::size_t omega_dim(std::size_t d, std::size_t n);

FormsComplex omega(const Algebra& a, std::size_t N);
/// Same without the identity checks (the caller inspects check_identities()).
FormsComplex omega_unchecked(const Algebra& a, std::size_t N);

/// C(A): degree n is A^{⊗n+1} with b restricted.
ChainComplex cyclic_sub(const FormsComplex& f);
/// C^bar(A): degree n ≥ 1 is A^{⊗n}, degree 0 is zero; differential
/// b'(a1⊗...⊗an) = Σ_{j=1}^{n-1} (-1)^{j-1} a1⊗...⊗a_j a_{j+1}⊗...⊗an.
/// The cokernel of C(A) → ΩA is C^bar(A)[-1], whose differential is -b'.
ChainComplex bar_quotient(const FormsComplex& f);
/// Degreewise maps of C(A) ↣ ΩA and ΩA ↠ C^bar(A)[-1].
std::vector<Matrix> cyclic_inclusion(const FormsComplex& f);
std::vector<Matrix> bar_projection(const FormsComplex& f);

/// Ω(f) for an algebra map f: A → B, degrees 0..N; f̃ = f ⊕ 1 on the Ã factor.
MixedMap omega_map(const LinMap& f, const Algebra& a, const Algebra& b, std::size_t N);
/// f^{⊗(n+1)} on C_n and f^{⊗n} on C^bar_n.
std::vector<Matrix> cyclic_map(const LinMap& f, std::size_t N);
std::vector<Matrix> bar_map(const LinMap& f, std::size_t N);

/// Relative complexes for an ideal K ⊴ A in the basis adapted to A = K ⊕ complement.
/// Ω^n(K:A) = C_n(K:A) ⊕ C_{n-1}(K:A) is spanned by the monomials with at
/// least one non-unit factor in K; these form a sub mixed complex of ΩA.
struct RelativeFormsComplex {
    IdealInclusion ideal;
    Algebra adapted;          // A in the adapted basis; K = first ideal.dim() coordinates
    MixedComplex omega_rel;   // Ω(K:A)
    ChainComplex c_rel;       // C(K:A)
    ChainComplex cbar_rel;    // C^bar(K:A)
    std::vector<std::vector<std::uint32_t>> omega_index;  // Ω^n(K:A) basis → Ω^n(A') index
    std::vector<std::vector<std::uint32_t>> c_index;      // C_n(K:A) basis → C_n(A') index
    std::vector<std::vector<std::uint32_t>> cbar_index;   // C^bar_n(K:A) basis → C^bar_n(A') index
    std::vector<Matrix> omega_inclusion;  // into Ω^n A, original basis
    std::vector<Matrix> c_inclusion;      // into C_n A, original basis
    std::vector<Matrix> cbar_inclusion;   // into C^bar_n A, original basis
};

RelativeFormsComplex relative_forms(const IdealInclusion& k, std::size_t N);

/// ΩK → Ω(K:A) with K in its own basis (that of as_algebra()).
MixedMap ideal_to_relative(const RelativeFormsComplex& r);
/// C(K) → C(K:A) and C^bar(K) → C^bar(K:A).
std::vector<Matrix> ideal_to_relative_cyclic(const RelativeFormsComplex& r);
std::vector<Matrix> ideal_to_relative_bar(const RelativeFormsComplex& r);

/// Short exactness of 0 → U --i--> V --p--> W → 0 by rank bookkeeping.
struct ExactnessCheck {
    bool injective = false, surjective = false, composite_zero = false, dims_add_up = false;
    [[nodiscard]] bool all() const { return injective && surjective && composite_zero && dims_add_up; }
};
ExactnessCheck check_short_exact(const Matrix& i, const Matrix& p);

}  // namespace cyclica
