#pragma once

// Closed-form parameters of symplectic Grassmann codes W(n,k) over GF(q).
// Everything here is exact integer arithmetic in 128 bits; every operation is
// overflow-checked and every division is asserted exact.

#include <cstdint>
#include <optional>
#include <string>

#include "symgrass/weight_enumerator.hpp"

namespace symgrass::formulas {

using Int = __int128;

std::string to_string(Int v);
/// Narrows to uint64_t; throws std::overflow_error when out of range.
std::uint64_t to_u64(Int v);

Int ipow(Int base, unsigned exp);
Int binomial(int m, int k);
/// Number of k-subspaces of an m-dimensional space over GF(q).
Int gaussian_binomial(int m, int k, int q);

/// Number of totally isotropic k-subspaces of V(2n,q): prod_{i<k} (q^{2n-2i}-1)/(q^{i+1}-1).
Int length(int n, int k, int q);
/// C(2n,k) - C(2n,k-2).
Int dimension(int n, int k);

/// Minimum distance of W(n,2): q^{4n-5} - q^{2n-3}. Requires n >= 2.
Int dmin_line(int n, int q);
/// Minimum distance of W(3,3): q^6 - q^4.
Int dmin_lagrangian3(int q);

/// Weight enumerator of W(2,2) from its three-weight table.
WeightEnumerator w22_table(int q);
/// Weight enumerator of W(3,3) from its four-weight table.
WeightEnumerator w33_table(int q);

/// Largest number of points p with p^perp(sigma) inside p^perp(theta):
/// (q^{2n-2}-1)/(q-1) + (q^2-1)/(q-1).
Int n1_max(int n, int q);
/// Lines isotropic for sigma and for the extremal theta.
Int eta_max(int n, int q);
/// eta predicted from N1 by (q+1) eta = q^{2n-3} N1 + (q^{2n}-1)(q^{2n-3}-1)/(q-1)^2.
/// Throws std::domain_error if the right-hand side is not divisible by q+1.
Int eta_from_n1(int n, int q, Int n1);

/// Lower bound on d_min(W(n,2)) from the second higher weight of the line
/// Grassmann code.
struct GrassmannBound {
    Int value;        ///< floor(numerator / denominator)
    Int numerator;    ///< q^{4n-2} - 2q^{4n-3} + q^{4n-5} + q^{2n-1} - q^{2n-2}
    Int denominator;  ///< (q-1)(q^2-1)
    bool integral;
    /// Same bound via N - [2n,2]_q + q^{4n-5}(q+1).
    Int via_gaussian;
};
GrassmannBound grassmann_bound_line(int n, int q);

/// Upper bound q^{n(n+1)/2} on d_min(W(n,n)).
Int pz_upper(int n, int q);

struct CodeParams {
    int n;
    int k;
    int q;
    Int N;
    Int K;
    /// Present only where a closed form is proved: k == 2, or n == k == 3.
    std::optional<Int> d_min;
};

/// Throws std::invalid_argument unless 1 <= k <= n and q is a supported field order.
CodeParams code_params(int n, int k, int q);
void validate_nkq(int n, int k, int q);

}  // namespace symgrass::formulas
