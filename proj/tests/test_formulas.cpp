#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "symgrass/formulas.hpp"

using namespace symgrass;
using namespace symgrass::formulas;

TEST_CASE("length") {
    CHECK(length(2, 2, 2) == 15);
    CHECK(length(3, 3, 2) == 135);
    CHECK(length(3, 2, 3) == 3640);
    for (int q : {2, 3, 4, 5})
        for (int n = 1; n <= 5; ++n) CHECK(length(n, 1, q) == (ipow(q, 2 * n) - 1) / (q - 1));
    CHECK_THROWS_AS(length(2, 3, 2), std::invalid_argument);
}

TEST_CASE("dimension") {
    CHECK(dimension(3, 3) == 14);
    CHECK(dimension(2, 2) == 5);
    for (int n = 1; n <= 8; ++n) CHECK(dimension(n, 1) == 2 * n);
    for (int n = 2; n <= 8; ++n) CHECK(dimension(n, 2) == 2 * n * n - n - 1);
}

TEST_CASE("minimum distance of line codes") {
    CHECK(dmin_line(2, 2) == 6);
    CHECK(dmin_line(3, 2) == 120);
    CHECK(dmin_line(3, 3) == 2160);
    CHECK(dmin_lagrangian3(2) == 48);
    CHECK_THROWS_AS(dmin_line(1, 2), std::invalid_argument);
}

TEST_CASE("weight tables") {
    CHECK(w22_table(2).distribution == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {6, 10}, {8, 15}, {10, 6}});
    CHECK(w33_table(2).distribution ==
          std::map<std::uint64_t, std::uint64_t>{{0, 1}, {48, 630}, {64, 7695}, {72, 7680}, {80, 378}});
    std::vector<std::uint64_t> w;
    for (auto [wt, c] : w33_table(3).distribution)
        if (wt) w.push_back(wt);
    CHECK(w == std::vector<std::uint64_t>{648, 729, 756, 810});
    for (int q : {2, 3, 4, 5}) {
        CHECK(w22_table(q).total() == to_u64(ipow(q, 5)));
        CHECK(w33_table(q).total() == to_u64(ipow(q, 14)));
        CHECK(*w22_table(q).min_nonzero_weight() == to_u64(dmin_line(2, q)));
        CHECK(*w33_table(q).min_nonzero_weight() == to_u64(dmin_lagrangian3(q)));
    }
}

TEST_CASE("N1 and eta displays") {
    CHECK(n1_max(2, 2) == 6);
    CHECK(eta_max(2, 2) == 9);
    CHECK(n1_max(2, 3) == 8);
    CHECK(length(3, 2, 2) - eta_max(3, 2) == 120);
    for (int n = 2; n <= 6; ++n)
        for (int q : {2, 3, 4, 5}) {
            CAPTURE(n);
            CAPTURE(q);
            CHECK(length(n, 2, q) - eta_max(n, q) == dmin_line(n, q));
            CHECK(eta_from_n1(n, q, n1_max(n, q)) == eta_max(n, q));
        }
}

TEST_CASE("Grassmann lower bound") {
    auto b = grassmann_bound_line(2, 2);
    CHECK(b.value == 4);
    CHECK(b.numerator == 12);
    CHECK(b.denominator == 3);
    CHECK(b.integral);
    CHECK(b.value <= dmin_line(2, 2));
    CHECK(grassmann_bound_line(3, 2).value <= 120);
    for (int n = 2; n <= 6; ++n)
        for (int q : {2, 3, 4, 5, 7}) {
            auto g = grassmann_bound_line(n, q);
            CHECK(g.integral);
            CHECK(g.value == g.via_gaussian);
            CHECK(g.value <= dmin_line(n, q));
        }
}

TEST_CASE("PZ upper bound") {
    for (int q : {2, 3, 4, 5}) {
        CHECK(pz_upper(2, q) == ipow(q, 3));
        CHECK(pz_upper(2, q) > ipow(q, 3) - q);
        CHECK(pz_upper(1, q) == q);
        CHECK(dmin_lagrangian3(q) <= pz_upper(3, q));
    }
    CHECK(pz_upper(3, 2) == 64);
}

TEST_CASE("Gaussian binomials") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    for (int m = 0; m < 6; ++m) CHECK(gaussian_binomial(m, 0, 3) == 1);
    // Pascal-type recurrence [m,k] = [m-1,k-1] + q^k [m-1,k].
    for (int q : {2, 3, 5})
        for (int m = 1; m <= 8; ++m)
            for (int k = 1; k < m; ++k)
                CHECK(gaussian_binomial(m, k, q) ==
                      gaussian_binomial(m - 1, k - 1, q) + ipow(q, k) * gaussian_binomial(m - 1, k, q));
}

TEST_CASE("code parameters and the Singleton bound") {
    auto p = code_params(3, 3, 2);
    CHECK(p.N == 135);
    CHECK(p.K == 14);
    CHECK(p.d_min == Int(48));
    CHECK(code_params(2, 2, 3).d_min == Int(24));
    CHECK(code_params(2, 2, 3).N == 40);
    CHECK_FALSE(code_params(4, 3, 2).d_min.has_value());
    for (int q : {2, 3, 4, 5})
        for (int n = 2; n <= 5; ++n) {
            auto c = code_params(n, 2, q);
            CHECK(*c.d_min <= c.N - c.K + 1);
            CHECK(c.N >= c.K);
        }
    CHECK_THROWS_AS(code_params(2, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(code_params(0, 0, 2), std::invalid_argument);
}

TEST_CASE("overflow is detected") {
    CHECK_THROWS_AS(ipow(16, 40), std::overflow_error);
    CHECK_THROWS_AS(to_u64(ipow(2, 70)), std::overflow_error);
    CHECK(to_string(ipow(2, 100)) == "1267650600228229401496703205376");
    CHECK(to_string(Int(-42)) == "-42");
}
