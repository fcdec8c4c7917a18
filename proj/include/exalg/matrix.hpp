#pragma once

#include <optional>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

// Dense matrix with exact rational entries. When used with a prime field the
// entries are reduced mod p at computation time (throws if a denominator is
// divisible by p). Dimensions here are tiny (hundreds at most), so no sparse
// representation and no fraction-free tricks; plain Gaussian elimination with
// deterministic pivoting: first non-zero entry in column order.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

std::size_t rank(const Matrix& m, const FieldSpec& f);

// Basis of { v : m v = 0 }. For each free column (ascending) one vector with
// that coordinate set to 1 and pivot coordinates back-substituted; this makes
// the output canonical. Over F_p the entries are returned as integer
// residues in [0, p).
std::vector<std::vector<Rat>> nullspace_basis(const Matrix& m,
                                              const FieldSpec& f);

// One solution of m x = b with all free variables set to zero, or nullopt if
// the system is inconsistent.
std::optional<std::vector<Rat>> solve(const Matrix& m,
                                      const std::vector<Rat>& b,
                                      const FieldSpec& f);

// Incremental row space with exact reduction; used to pick coset
// representatives deterministically.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols, const FieldSpec& f)
        : cols_(cols), field_(f) {}

    // Reduces v against the current rows. Returns the residue (empty if v is
    // in the span).
    std::vector<Rat> reduce(std::vector<Rat> v) const;

    // Reduce-and-insert: returns true if v enlarged the space.
    bool insert(std::vector<Rat> v);

    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t cols_;
    FieldSpec field_;
    std::vector<std::vector<Rat>> rows_;   // reduced, leading entry 1
    std::vector<std::size_t> lead_;        // pivot column of each row
};

}  // namespace exalg
