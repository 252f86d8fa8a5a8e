#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "symgrass/linalg.hpp"

namespace symgrass {

/// Alternating bilinear form on V(2n, q), given by its Gram matrix G with
/// f(x, y) = x^T G y. G is skew-symmetric with zero diagonal; its rank is even.
class AlternatingForm {
public:
    /// Throws std::invalid_argument if `gram` is not a 2n x 2n alternating matrix.
    explicit AlternatingForm(Matrix gram);

    /// [[0, I_n], [-I_n, 0]].
    static AlternatingForm standard(std::size_t n, const Field& field);
    static AlternatingForm zero(std::size_t n, const Field& field);

    const Field& field() const { return gram_.field(); }
    std::size_t n() const { return gram_.rows() / 2; }
    std::size_t dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    std::size_t rank() const { return rank_; }
    bool is_nondegenerate() const { return rank_ == dim(); }

    Elem operator()(std::span<const Elem> x, std::span<const Elem> y) const;
    /// Row vector x^T G.
    std::vector<Elem> covector(std::span<const Elem> x) const;

    /// this - lambda * other
    AlternatingForm minus_scaled(Elem lambda, const AlternatingForm& other) const;
    /// True if this == lambda * other for some lambda in GF(q).
    bool is_multiple_of(const AlternatingForm& other) const;

    friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
        return a.gram_ == b.gram_;
    }

private:
    Matrix gram_;
    std::size_t rank_;
};

AlternatingForm standard_symplectic(std::size_t n, const Field& field);

Subspace radical(const AlternatingForm& f);
/// {x : f(x, y) = 0 for all y in s}.
Subspace perp(const AlternatingForm& f, const Subspace& s);
bool is_totally_isotropic(const AlternatingForm& f, const Matrix& rows);
bool is_totally_isotropic(const AlternatingForm& f, const Subspace& s);

struct Eigenspace {
    Elem eigenvalue;
    Subspace space;
};

/// Eigenspaces of M^{-1} S for sigma = M, theta = S, found by sweeping every
/// lambda in GF(q).
struct EigenDecomposition {
    std::vector<Eigenspace> pairs;
    bool diagonalizable;

    std::size_t total_dim() const;
    /// Projective points lying in some eigenspace.
    std::uint64_t eigenvector_points() const;
};

/// Throws std::domain_error when sigma is degenerate.
EigenDecomposition eigen_analysis(const AlternatingForm& sigma, const AlternatingForm& theta);

/// Points p with p^{perp sigma} inside p^{perp theta}, counted as the points on
/// the eigenspaces of M^{-1} S.
std::uint64_t count_N1(const AlternatingForm& sigma, const AlternatingForm& theta);
/// Same count by testing the inclusion of perps at every projective point.
std::uint64_t count_N1_direct(const AlternatingForm& sigma, const AlternatingForm& theta);
/// Whether p^{perp sigma} is contained in p^{perp theta}.
bool perp_contained(const AlternatingForm& sigma, const AlternatingForm& theta,
                    std::span<const Elem> p);

/// Lines (2-subspaces) totally isotropic for both forms, by enumerating the
/// sigma-isotropic lines. Requires n >= 2.
std::uint64_t count_common_isotropic_lines(const AlternatingForm& sigma,
                                           const AlternatingForm& theta);

/// Rank-2 form theta with theta(e_1, e_{n+1}) = sigma(e_1, e_{n+1}) and
/// Rad theta = <e_1, e_{n+1}>^{perp sigma}. Requires n >= 2 and sigma standard
/// on the pair (e_1, e_{n+1}) being non-isotropic.
AlternatingForm worst_case_theta(const AlternatingForm& sigma);

/// Uniform over all alternating forms on V(2n, q).
AlternatingForm random_alternating_form(std::size_t n, const Field& field, std::mt19937_64& rng);
/// Uniform over alternating forms that are not a multiple of sigma.
AlternatingForm random_theta(const AlternatingForm& sigma, std::mt19937_64& rng);

/// Every alternating form on V(2n, q), in lexicographic order of the strictly
/// upper-triangular entries. There are q^{n(2n-1)} of them.
void for_each_alternating_form(std::size_t n, const Field& field,
                               const std::function<void(const AlternatingForm&)>& visit);

}  // namespace symgrass
