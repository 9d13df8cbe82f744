#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclica/linalg.hpp"

namespace cyclica {

/// Rejected structure constants, with a witness triple (i, j, k) where
/// (e_i e_j) e_k ≠ e_i (e_j e_k).
struct AssociativityError : InvariantError {
    AssociativityError(std::size_t i, std::size_t j, std::size_t k);
    std::array<std::size_t, 3> triple;
};

/// Finite-dimensional associative ℚ-algebra given by structure constants.
/// Not assumed unital.
class Algebra {
public:
    Algebra() = default;
    /// c[(i*d + j)*d + k] is the coefficient of e_k in e_i e_j.
    Algebra(std::string name, std::size_t dim, const std::vector<Rational>& c);
    /// products[i*d + j] = e_i e_j.
    static Algebra from_products(std::string name, std::size_t dim, std::vector<SparseVec> products);
    static Algebra zero_algebra();
    /// ℚ with the field multiplication.
    static Algebra ground_field();
    /// ℚ^dim with zero multiplication.
    static Algebra zero_multiplication(std::size_t dim);
    /// ℚ[x]/(x^n) in the monomial basis 1, x, ..., x^{n-1}.
    static Algebra truncated_polynomial(std::size_t n);
    /// Upper-triangular 2×2 matrices in the basis e11, e12, e22.
    static Algebra upper_triangular_2();
    static Algebra product(const Algebra& a, const Algebra& b);

    [[nodiscard]] std::size_t dim() const { return d_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const SparseVec& product(std::size_t i, std::size_t j) const { return prod_[i * d_ + j]; }
    [[nodiscard]] Rational c(std::size_t i, std::size_t j, std::size_t k) const {
        return coeff(product(i, j), std::uint32_t(k));
    }
    [[nodiscard]] SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    /// Matrix of y ↦ x y.
    [[nodiscard]] Matrix left_mult(const SparseVec& x) const;
    /// Matrix of y ↦ y x.
    [[nodiscard]] Matrix right_mult(const SparseVec& x) const;
    /// μ: A⊗A → A with basis e_i⊗e_j at index i*d + j.
    [[nodiscard]] Matrix mult_matrix() const;
    [[nodiscard]] std::vector<Rational> structure_constants() const;
    [[nodiscard]] std::optional<SparseVec> unit() const;
    [[nodiscard]] bool is_zero_multiplication() const;
    /// The same algebra in the basis given by the columns of an invertible p.
    [[nodiscard]] Algebra base_change(const Matrix& p, std::string name) const;
    [[nodiscard]] Algebra renamed(std::string name) const;

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.d_ == b.d_ && a.prod_ == b.prod_; }

private:
    void check_associative() const;

    std::string name_;
    std::size_t d_ = 0;
    std::vector<SparseVec> prod_;
};

/// Inverse of a square matrix; throws InvariantError when singular.
Matrix inverse(const Matrix& p);

/// An ideal K ⊴ A with its canonical (reduced echelon) basis and the
/// complementary coordinate directions, so A = K ⊕ span(e_c : c ∈ complement).
class IdealInclusion {
public:
    IdealInclusion() = default;
    /// The vectors must be independent; the ideal property is verified.
    IdealInclusion(Algebra ambient, const std::vector<SparseVec>& basis);
    /// Ideal spanned by arbitrary (possibly dependent) vectors.
    static IdealInclusion span(Algebra ambient, const std::vector<SparseVec>& vectors);
    static IdealInclusion whole(const Algebra& a);
    static IdealInclusion zero(const Algebra& a);

    [[nodiscard]] const Algebra& ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] std::size_t codim() const { return complement_.size(); }
    /// Reduced echelon basis vectors of K.
    [[nodiscard]] const std::vector<SparseVec>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::uint32_t>& complement() const { return complement_; }
    [[nodiscard]] bool contains(const SparseVec& v) const { return ech_.contains(v); }
    /// d × k matrix whose columns are the basis of K.
    [[nodiscard]] Matrix inclusion() const;
    /// d × d matrix with columns (basis of K, complement unit vectors).
    [[nodiscard]] Matrix adapted_basis() const;
    /// Inverse of adapted_basis, computed without elimination.
    [[nodiscard]] Matrix adapted_coordinates() const;
    /// K as an algebra in its own basis.
    [[nodiscard]] Algebra as_algebra(std::string name = "") const;
    /// Ambient algebra in the adapted basis: K occupies the first dim() coordinates.
    [[nodiscard]] Algebra adapted_algebra() const;

private:
    Algebra ambient_;
    std::vector<SparseVec> basis_;
    std::vector<std::uint32_t> complement_;
    Echelon ech_;
};

Algebra unitalize(const Algebra& a);
/// K^n: span of all n-fold products of elements of K.
IdealInclusion power(const IdealInclusion& k, std::size_t n);
/// A/K on the complement coordinates, and the projection A → A/K.
std::pair<Algebra, LinMap> quotient_algebra(const IdealInclusion& k);
/// Flip V⊗W → W⊗V; basis v_i⊗w_j sits at index i*dim_w + j.
LinMap tensor_swap(std::size_t dim_v, std::size_t dim_w);
/// Whether f: A → B is multiplicative on basis pairs.
bool is_algebra_map(const LinMap& f, const Algebra& a, const Algebra& b);

}  // namespace cyclica
