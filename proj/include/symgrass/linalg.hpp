#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "symgrass/gf.hpp"

namespace symgrass {

/// Dense row-major matrix over a small finite field.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);
    Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(const Field& field, std::size_t n);
    /// Rows given as integer encodings; all rows must have the same length.
    static Matrix from_rows(const Field& field, const std::vector<std::vector<int>>& rows);

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    const std::vector<Elem>& entries() const { return a_; }

    Matrix transpose() const;
    /// Rows [first, first+count) as a new matrix.
    Matrix slice_rows(std::size_t first, std::size_t count) const;
    /// This matrix with `other`'s rows appended (same column count).
    Matrix stack(const Matrix& other) const;
    void append_row(std::span<const Elem> values);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> a_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; dispatches to the packed path for GF(2).
RrefResult rref(const Matrix& m);
RrefResult rref_generic(const Matrix& m);
/// GF(2) only: rows packed into 64-bit words, elimination by XOR.
RrefResult rref_gf2_packed(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Throws std::domain_error when `m` is singular or not square.
Matrix inverse(const Matrix& m);

/// A subspace of V(d, q), stored as its unique RREF basis.
class Subspace {
public:
    /// Row space of `rows` (need not be independent).
    static Subspace span(const Matrix& rows);
    /// Wraps a basis already in RREF with full row rank. Not checked.
    static Subspace from_rref(Matrix basis);
    static Subspace zero(const Field& field, std::size_t ambient_dim);
    static Subspace full(const Field& field, std::size_t ambient_dim);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    /// Number of projective points, (q^dim - 1)/(q - 1).
    std::uint64_t projective_size() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

/// {x : m x = 0}.
Subspace kernel(const Matrix& m);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Incrementally maintained echelon basis of a growing set of vectors.
class EchelonBasis {
public:
    EchelonBasis(const Field& field, std::size_t dim);
    /// Returns true if `v` was independent of the vectors inserted so far.
    bool insert(std::span<const Elem> v);
    std::size_t rank() const { return rows_.size(); }
    Subspace subspace() const;

private:
    const Field* field_;
    std::size_t dim_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivot_row_;  // column -> row index, -1 if none
    std::vector<Elem> scratch_;
};

/// Strictly increasing pivot column sets of size k in {0..d-1}, lexicographic.
void for_each_pivot_pattern(std::size_t d, std::size_t k,
                            const std::function<void(std::span<const std::size_t>)>& visit);

/// Visits every k-subspace of V(d, q) once, as its RREF basis (a k x d matrix).
/// The matrix passed to `visit` is a reused buffer. Returns the count.
std::uint64_t for_each_subspace(std::size_t d, std::size_t k, const Field& field,
                                const std::function<void(const Matrix&)>& visit);
std::vector<Subspace> enumerate_subspaces(std::size_t d, std::size_t k, const Field& field);

/// Visits each projective point of PG(d-1, q) once, normalized so its first
/// nonzero coordinate is 1.
std::uint64_t for_each_projective_point(std::size_t d, const Field& field,
                                        const std::function<void(std::span<const Elem>)>& visit);
std::vector<std::vector<Elem>> enumerate_projective_points(std::size_t d, const Field& field);

/// Scales `v` in place so its first nonzero entry is 1. Returns false for zero.
bool normalize_projective(std::span<Elem> v, const Field& field);

/// Text format: "rows cols q" then one row per line of decimal encodings.
void write_matrix(std::ostream& out, const Matrix& m);
/// Throws std::runtime_error on malformed input.
Matrix read_matrix(std::istream& in);

}  // namespace symgrass
