#include "symgrass/formulas.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "symgrass/gf.hpp"

namespace symgrass::formulas {

namespace {

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit overflow in formula");
    return r;
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit overflow in formula");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit overflow in formula");
    return r;
}

Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("non-integral quotient " + to_string(a) + " / " + to_string(b));
    return a / b;
}

Int half(Int a) { return exact_div(a, 2); }

void require_line_n(int n, int q) {
    if (n < 2) throw std::invalid_argument("line codes need n >= 2");
    if (q < 2) throw std::invalid_argument("q must be at least 2");
}

}  // namespace

std::string to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    // Work on the negative side to cover the minimum value.
    Int x = neg ? v : -v;
    while (x != 0) {
        s.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::uint64_t to_u64(Int v) {
    if (v < 0 || v > static_cast<Int>(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("value " + to_string(v) + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

Int ipow(Int base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Int binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = exact_div(checked_mul(r, m - k + i), i);
    return r;
}

Int gaussian_binomial(int m, int k, int q) {
    if (k < 0 || m < 0 || k > m) throw std::invalid_argument("gaussian_binomial needs 0 <= k <= m");
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num = checked_mul(num, ipow(q, static_cast<unsigned>(m - i)) - 1);
        den = checked_mul(den, ipow(q, static_cast<unsigned>(i + 1)) - 1);
    }
    return exact_div(num, den);
}

void validate_nkq(int n, int k, int q) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("need 1 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    if (!Field::is_supported_order(q))
        throw std::invalid_argument("q=" + std::to_string(q) + " is not a prime power <= 16");
}

Int length(int n, int k, int q) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("length needs 1 <= k <= n");
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num = checked_mul(num, ipow(q, static_cast<unsigned>(2 * n - 2 * i)) - 1);
        den = checked_mul(den, ipow(q, static_cast<unsigned>(i + 1)) - 1);
    }
    return exact_div(num, den);
}

Int dimension(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("dimension needs 1 <= k <= n");
    return binomial(2 * n, k) - binomial(2 * n, k - 2);
}

Int dmin_line(int n, int q) {
    require_line_n(n, q);
    return ipow(q, static_cast<unsigned>(4 * n - 5)) - ipow(q, static_cast<unsigned>(2 * n - 3));
}

Int dmin_lagrangian3(int q) { return ipow(q, 6) - ipow(q, 4); }

namespace {
void add_row(WeightEnumerator& we, Int weight, Int count) {
    we.distribution[to_u64(weight)] += to_u64(count);
}
}  // namespace

WeightEnumerator w22_table(int q) {
    const Int Q = q;
    WeightEnumerator we;
    add_row(we, 0, 1);
    add_row(we, Q * Q * Q - Q, half(Q * Q * (Q * Q + 1) * (Q - 1)));
    add_row(we, Q * Q * Q, ipow(Q, 4) - 1);
    add_row(we, Q * Q * Q + Q, half(Q * Q * (Q * Q - 1) * (Q - 1)));
    return we;
}

WeightEnumerator w33_table(int q) {
    const Int Q = q;
    const Int q2 = Q * Q, q3 = ipow(Q, 3), q4 = ipow(Q, 4), q6 = ipow(Q, 6);
    WeightEnumerator we;
    add_row(we, 0, 1);
    add_row(we, q6 - q4, half(checked_mul(q2 * (q2 + 1) * (q2 + Q + 1), (q3 + 1) * (Q - 1))));
    add_row(we, q6,
            checked_mul((Q + 1) * (Q + 1) * (q2 - Q + 1) * (q2 + 1), (q6 - q3 + 1) * (Q - 1)));
    add_row(we, q6 + q3, checked_mul(ipow(Q, 9), (q4 - 1) * (Q - 1)));
    add_row(we, q6 + q4, half(checked_mul(q2 * (Q + 1), (q6 - 1) * (Q - 1))));
    return we;
}

Int n1_max(int n, int q) {
    require_line_n(n, q);
    return exact_div(ipow(q, static_cast<unsigned>(2 * n - 2)) - 1, q - 1) +
           exact_div(Int(q) * q - 1, q - 1);
}

Int eta_max(int n, int q) {
    require_line_n(n, q);
    auto P = [q](int e) { return ipow(q, static_cast<unsigned>(e)); };
    Int num = P(4 * n - 3) + P(4 * n - 4) - P(4 * n - 5) - P(2 * n - 1) - 2 * P(2 * n - 2) +
              P(2 * n - 3) + 1;
    return exact_div(num, Int(q - 1) * (Int(q) * q - 1));
}

Int eta_from_n1(int n, int q, Int n1) {
    require_line_n(n, q);
    auto P = [q](int e) { return ipow(q, static_cast<unsigned>(e)); };
    Int rhs = checked_add(checked_mul(P(2 * n - 3), n1),
                          exact_div(checked_mul(P(2 * n) - 1, P(2 * n - 3) - 1), Int(q - 1) * (q - 1)));
    if (rhs % (q + 1) != 0)
        throw std::domain_error("line count identity has no integral solution for N1=" + to_string(n1));
    return rhs / (q + 1);
}

GrassmannBound grassmann_bound_line(int n, int q) {
    require_line_n(n, q);
    auto P = [q](int e) { return ipow(q, static_cast<unsigned>(e)); };
    GrassmannBound b{};
    b.numerator = checked_add(checked_sub(P(4 * n - 2), checked_mul(2, P(4 * n - 3))),
                              P(4 * n - 5) + P(2 * n - 1) - P(2 * n - 2));
    b.denominator = Int(q - 1) * (Int(q) * q - 1);
    b.integral = b.numerator % b.denominator == 0;
    // Both parts are non-negative for q >= 2, so truncation is the floor.
    b.value = b.numerator / b.denominator;
    b.via_gaussian = length(n, 2, q) - gaussian_binomial(2 * n, 2, q) +
                     checked_mul(P(4 * n - 5), q + 1);
    return b;
}

Int pz_upper(int n, int q) {
    if (n < 1) throw std::invalid_argument("pz_upper needs n >= 1");
    return ipow(q, static_cast<unsigned>(n * (n + 1) / 2));
}

CodeParams code_params(int n, int k, int q) {
    validate_nkq(n, k, q);
    CodeParams p{n, k, q, length(n, k, q), dimension(n, k), std::nullopt};
    if (k == 2)
        p.d_min = dmin_line(n, q);
    else if (n == 3 && k == 3)
        p.d_min = dmin_lagrangian3(q);
    return p;
}

}  // namespace symgrass::formulas
