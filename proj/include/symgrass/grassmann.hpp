#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "symgrass/forms.hpp"
#include "symgrass/linalg.hpp"

namespace symgrass {

/// Lexicographic order of the k-subsets of {0..d-1}, which indexes Plücker
/// coordinates. Subsets are stored as bitmasks.
class PluckerIndex {
public:
    PluckerIndex(std::size_t d, std::size_t k);

    std::size_t ambient_dim() const { return d_; }
    std::size_t k() const { return k_; }
    std::size_t size() const { return masks_.size(); }
    std::uint32_t mask(std::size_t i) const { return masks_[i]; }
    /// Column indices of subset i, increasing.
    std::vector<std::size_t> subset(std::size_t i) const;
    /// Position of `mask` in the order, or size() if it is not a k-subset.
    std::size_t index_of(std::uint32_t mask) const;

    /// k x k minors of `basis` (k x d) in index order, written into `out`.
    /// Not normalized.
    void minors(const Matrix& basis, std::span<Elem> out) const;

private:
    std::size_t d_;
    std::size_t k_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::vector<std::uint32_t>> by_size_;  // masks of each size 1..k
    std::vector<std::uint32_t> position_;              // mask -> index
};

/// Normalized Plücker coordinates of a k-subspace (first nonzero entry is 1).
struct PluckerPoint {
    std::vector<Elem> coords;
    friend auto operator<=>(const PluckerPoint&, const PluckerPoint&) = default;
};

/// Plücker point of the row space of `basis` (k x d, full row rank; any basis).
/// Throws std::invalid_argument if the rows are dependent.
PluckerPoint plucker(const Matrix& basis);
PluckerPoint plucker(const Subspace& s);

/// Visits each k-subspace totally isotropic for `sigma` once, as its RREF basis.
/// Rows are filled one at a time; each new row solves the linear conditions
/// sigma(row_j, row) = 0 against the rows above it, so only isotropic frames
/// are ever built. The matrix passed to `visit` is a reused buffer.
std::uint64_t for_each_isotropic(const AlternatingForm& sigma, std::size_t k,
                                 const std::function<void(const Matrix&)>& visit);
/// Restricted to one pivot pattern; the union over all patterns is the full set.
std::uint64_t for_each_isotropic_with_pivots(const AlternatingForm& sigma,
                                             std::span<const std::size_t> pivots,
                                             const std::function<void(const Matrix&)>& visit);
/// Isotropic k-subspaces for the standard symplectic form on V(2n, q).
std::vector<Subspace> enumerate_isotropic(std::size_t n, std::size_t k, const Field& field);
std::uint64_t count_isotropic(std::size_t n, std::size_t k, const Field& field);

/// A line of the symplectic Grassmannian of k-spaces: all k-spaces X with
/// lower <= X <= upper. `upper` is absent when k = n, in which case the
/// members are the k-spaces through `lower` inside lower^perp.
struct GrassmannLine {
    Subspace lower;
    std::optional<Subspace> upper;

    /// The q+1 member k-subspaces.
    std::vector<Subspace> members(const AlternatingForm& sigma) const;
};

/// All lines through the isotropic k-space X.
std::vector<GrassmannLine> grassmann_lines_through(const AlternatingForm& sigma, std::size_t k,
                                                   const Subspace& x);
/// Visits every line of the symplectic Grassmannian of k-spaces once.
std::uint64_t for_each_grassmann_line(const AlternatingForm& sigma, std::size_t k,
                                      const std::function<void(const GrassmannLine&)>& visit);

/// Plücker coordinates of every isotropic k-space of the standard form, one
/// row per point in enumeration order.
Matrix plucker_point_matrix(std::size_t n, std::size_t k, const Field& field);

/// Header "n k q N", then one point per line.
void write_point_list(std::ostream& out, std::size_t n, std::size_t k, const Matrix& points);

}  // namespace symgrass
