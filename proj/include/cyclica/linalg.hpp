#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclica/matrix.hpp"

namespace cyclica {

/// Raised when an operation requires d∘d = 0 or a chain-map condition that fails.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incrementally built row-echelon basis of a subspace of ℚ^n. Every stored
/// row has leading coefficient 1 and no entries in earlier pivot columns.
/// The pivot set depends only on the span, never on insertion order.
class Echelon {
public:
    Echelon() = default;
    explicit Echelon(std::size_t ambient) : n_(ambient), pivot_row_(ambient, -1) {}

    /// Adds v to the span; returns true when v was independent.
    bool insert(const SparseVec& v);
    /// Normal form of v modulo the span: no entries in pivot columns.
    [[nodiscard]] SparseVec reduce(const SparseVec& v) const;
    /// As reduce, also returning the coefficients c with v - remainder = Σ c_r row_r.
    [[nodiscard]] SparseVec reduce(const SparseVec& v, SparseVec* combo) const;
    [[nodiscard]] bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t ambient() const { return n_; }
    /// Pivot columns in increasing order.
    [[nodiscard]] std::vector<std::uint32_t> pivots() const;
    [[nodiscard]] std::vector<std::uint32_t> non_pivots() const;
    [[nodiscard]] bool is_pivot(std::uint32_t c) const { return pivot_row_[c] >= 0; }
    /// Back-substitutes so that rows are fully reduced; rows come out sorted by pivot.
    [[nodiscard]] std::vector<SparseVec> reduced_rows() const;
    [[nodiscard]] const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::size_t n_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<std::int32_t> pivot_row_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivot_cols;
};

/// Reduced row-echelon form with the first-nonzero-column pivot rule.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Kernel basis as columns; one column per free variable, in column order.
Matrix kernel(const LinMap& f);
std::vector<SparseVec> kernel_vectors(const LinMap& f);
/// Echelon basis of the column space.
Echelon column_space(const LinMap& f);
/// Some x with f x = y, or nullopt.
std::optional<SparseVec> solve(const LinMap& f, const SparseVec& y);
/// dim ker(d_out) - rank(d_in); throws InvariantError unless d_out∘d_in = 0.
std::size_t homology_dim(const LinMap& d_in, const LinMap& d_out);

/// Subquotient Z/B of ℚ^n with a deterministic basis: Z and B are given by
/// spanning vectors, B ⊆ Z. Basis classes are the Z generators that are
/// independent modulo B, in the order given.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(std::size_t ambient, const std::vector<SparseVec>& z_span,
                const std::vector<SparseVec>& b_span);

    [[nodiscard]] std::size_t dim() const { return reps_.size(); }
    [[nodiscard]] std::size_t ambient() const { return n_; }
    /// Representatives of the basis classes.
    [[nodiscard]] const std::vector<SparseVec>& representatives() const { return reps_; }
    /// Coordinates of the class of z; throws InvariantError when z ∉ Z.
    [[nodiscard]] SparseVec coords(const SparseVec& z) const;
    [[nodiscard]] bool is_zero_class(const SparseVec& z) const;
    [[nodiscard]] const Echelon& boundaries() const { return b_; }

private:
    std::size_t n_ = 0;
    Echelon b_;
    Echelon h_;                      // echelon of reduced representatives
    std::vector<SparseVec> h_combo_; // row r of h_ as a combination of basis classes
    std::vector<SparseVec> reps_;
};

/// Homology of C_in --d_in--> C --d_out--> C_out at the middle term.
Subquotient homology(const LinMap& d_in, const LinMap& d_out);

/// Matrix of the map induced by f between two subquotients; f must send
/// Z to Z' and B to B' (checked).
LinMap induced_map(const LinMap& f, const Subquotient& src, const Subquotient& dst);

/// Homology map at one degree of a chain map f: (C, d_in, d_out) → (C', d_in', d_out').
LinMap induced_map_on_homology(const LinMap& f, const LinMap& d_in, const LinMap& d_out,
                               const LinMap& d_in2, const LinMap& d_out2);

}  // namespace cyclica
