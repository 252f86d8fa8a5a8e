#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symgrass/formulas.hpp"
#include "symgrass/forms.hpp"
#include "symgrass/grassmann.hpp"

using namespace symgrass;

namespace {

// Lines isotropic for both forms, by counting pairs of distinct projective
// points that are orthogonal under both; each line carries C(q+1, 2) pairs.
std::uint64_t eta_by_point_pairs(const AlternatingForm& sigma, const AlternatingForm& theta) {
    auto pts = enumerate_projective_points(sigma.dim(), sigma.field());
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (sigma(pts[i], pts[j]) == 0 && theta(pts[i], pts[j]) == 0) ++pairs;
    const std::uint64_t q = static_cast<std::uint64_t>(sigma.field().q());
    REQUIRE(pairs % ((q + 1) * q / 2) == 0);
    return pairs / ((q + 1) * q / 2);
}

Subspace point_span(const Field& f, std::initializer_list<std::vector<int>> rows) {
    return Subspace::span(Matrix::from_rows(f, rows));
}

// A random non-degenerate form, to exercise statements that hold for every sigma.
AlternatingForm random_symplectic(std::size_t n, const Field& f, std::mt19937_64& rng) {
    while (true) {
        auto s = random_alternating_form(n, f, rng);
        if (s.is_nondegenerate()) return s;
    }
}

}  // namespace

TEST_CASE("standard symplectic form") {
    auto s = standard_symplectic(1, Field::get(2));
    CHECK(s.gram() == Matrix::from_rows(Field::get(2), {{0, 1}, {1, 0}}));

    auto s23 = standard_symplectic(2, Field::get(3));
    CHECK(s23.rank() == 4);
    CHECK(radical(s23).dim() == 0);

    const auto& f2 = Field::get(2);
    auto s32 = standard_symplectic(3, f2);
    auto e = [&](std::size_t i) {
        std::vector<Elem> v(6, 0);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            bool partner = j == (i + 3) % 6;
            CHECK((s32(e(i), e(j)) != 0) == partner);
        }
    CHECK_THROWS_AS(standard_symplectic(0, f2), std::invalid_argument);
}

TEST_CASE("alternating form validation") {
    const auto& f = Field::get(3);
    CHECK_THROWS_AS(AlternatingForm(Matrix::from_rows(f, {{1, 0}, {0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(AlternatingForm(Matrix::from_rows(f, {{0, 1}, {1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(AlternatingForm(Matrix(f, 3, 3)), std::invalid_argument);
    CHECK_NOTHROW(AlternatingForm(Matrix::from_rows(f, {{0, 1}, {2, 0}})));
}

TEST_CASE("every constructed form has even rank") {
    std::mt19937_64 rng(17);
    for (int q : {2, 3, 4, 5})
        for (int t = 0; t < 50; ++t) {
            auto theta = random_alternating_form(1 + t % 4, Field::get(q), rng);
            CHECK(theta.rank() % 2 == 0);
        }
}

TEST_CASE("radical and perp") {
    const auto& f2 = Field::get(2);
    auto sigma = standard_symplectic(2, f2);
    CHECK(radical(sigma).dim() == 0);
    CHECK(radical(AlternatingForm::zero(2, f2)) == Subspace::full(f2, 4));
    CHECK(perp(sigma, Subspace::full(f2, 4)).dim() == 0);
    CHECK(perp(sigma, Subspace::zero(f2, 4)) == Subspace::full(f2, 4));

    // span{e_1}: exhaustive check of the 16 vectors.
    auto e1 = point_span(f2, {{1, 0, 0, 0}});
    auto p = perp(sigma, e1);
    std::set<oracle::Vec> expected;
    for (const auto& v : oracle::all_vectors(4, 2))
        if (sigma(std::vector<Elem>{1, 0, 0, 0}, v) == 0) expected.insert(v);
    std::vector<oracle::Vec> gens;
    for (std::size_t r = 0; r < p.dim(); ++r) gens.emplace_back(p.basis().row(r).begin(), p.basis().row(r).end());
    CHECK(oracle::span_set(f2, gens, 4) == expected);
    CHECK(p == point_span(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));

    std::mt19937_64 rng(1);
    for (int q : {3, 4}) {
        auto s = standard_symplectic(3, Field::get(q));
        for (int t = 0; t < 20; ++t) {
            auto theta = random_alternating_form(3, Field::get(q), rng);
            CHECK(radical(theta).dim() % 2 == 0);
            auto sub = kernel(theta.gram());
            CHECK(perp(s, sub).dim() == 6 - sub.dim());
        }
    }
}

TEST_CASE("total isotropy") {
    const auto& f = Field::get(3);
    auto sigma = standard_symplectic(3, f);
    std::mt19937_64 rng(2);
    for (const auto& p : enumerate_projective_points(6, f)) {
        Matrix m(f, 1, 6, p);
        CHECK(is_totally_isotropic(sigma, Subspace::span(m)));
        CHECK(is_totally_isotropic(random_alternating_form(3, f, rng), Subspace::span(m)));
    }
    CHECK_FALSE(is_totally_isotropic(sigma, point_span(f, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}})));
    CHECK(is_totally_isotropic(sigma, point_span(f, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}})));
}

TEST_CASE("eigen analysis examples") {
    for (int q : {2, 3, 5}) {
        const auto& f = Field::get(q);
        auto sigma = standard_symplectic(2, f);
        auto same = eigen_analysis(sigma, sigma);
        REQUIRE(same.pairs.size() == 1);
        CHECK(same.pairs[0].eigenvalue == 1);
        CHECK(same.pairs[0].space.dim() == 4);
        CHECK(same.diagonalizable);

        auto zero = eigen_analysis(sigma, AlternatingForm::zero(2, f));
        REQUIRE(zero.pairs.size() == 1);
        CHECK(zero.pairs[0].eigenvalue == 0);
        CHECK(zero.pairs[0].space.dim() == 4);
    }
    CHECK_THROWS_AS(eigen_analysis(AlternatingForm::zero(2, Field::get(3)), standard_symplectic(2, Field::get(3))),
                    std::domain_error);
}

TEST_CASE("worst-case theta") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
        CAPTURE(n);
        CAPTURE(q);
        const auto& f = Field::get(q);
        auto sigma = standard_symplectic(static_cast<std::size_t>(n), f);
        auto theta = worst_case_theta(sigma);
        CHECK(theta.rank() == 2);
        CHECK_FALSE(theta.is_multiple_of(sigma));

        std::vector<Elem> e1(2 * n, 0), en1(2 * n, 0);
        e1[0] = 1;
        en1[n] = 1;
        CHECK(theta(e1, en1) == sigma(e1, en1));
        Matrix line(f, 0, 2 * n);
        line.append_row(e1);
        line.append_row(en1);
        CHECK(radical(theta) == perp(sigma, Subspace::span(line)));
        CHECK(radical(theta).dim() == static_cast<std::size_t>(2 * n - 2));

        auto eig = eigen_analysis(sigma, theta);
        REQUIRE(eig.pairs.size() == 2);
        std::vector<std::size_t> dims{eig.pairs[0].space.dim(), eig.pairs[1].space.dim()};
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<std::size_t>{2, static_cast<std::size_t>(2 * n - 2)});
        CHECK(count_N1(sigma, theta) == formulas::to_u64(formulas::n1_max(n, q)));
    }
    CHECK_THROWS_AS(worst_case_theta(standard_symplectic(1, Field::get(2))), std::invalid_argument);
}

TEST_CASE("worst-case theta works for a non-standard sigma") {
    std::mt19937_64 rng(99);
    const auto& f = Field::get(3);
    for (int t = 0; t < 5; ++t) {
        auto sigma = random_symplectic(3, f, rng);
        auto theta = worst_case_theta(sigma);
        CHECK(count_N1(sigma, theta) == formulas::to_u64(formulas::n1_max(3, 3)));
        CHECK(count_common_isotropic_lines(sigma, theta) == formulas::to_u64(formulas::eta_max(3, 3)));
    }
}

TEST_CASE("N1 examples") {
    for (int q : {2, 3}) {
        auto sigma = standard_symplectic(2, Field::get(q));
        CHECK(count_N1(sigma, sigma) == static_cast<std::uint64_t>((q * q * q * q - 1) / (q - 1)));
    }
    auto sigma = standard_symplectic(2, Field::get(2));
    auto worst = worst_case_theta(sigma);
    CHECK(count_N1(sigma, worst) == 6);
    CHECK(count_N1_direct(sigma, worst) == 6);
}

TEST_CASE("perp inclusion holds exactly on eigenvectors") {
    std::mt19937_64 rng(2024);
    struct Case {
        int n, q;
        bool exhaustive;
    };
    for (auto c : {Case{2, 2, true}, Case{2, 3, true}, Case{3, 2, false}}) {
        CAPTURE(c.n);
        CAPTURE(c.q);
        const auto& f = Field::get(c.q);
        auto check_theta = [&](const AlternatingForm& sigma, const AlternatingForm& theta) {
            auto eig = eigen_analysis(sigma, theta);
            std::uint64_t direct = 0;
            for_each_projective_point(sigma.dim(), f, [&](std::span<const Elem> p) {
                bool eigen = std::any_of(eig.pairs.begin(), eig.pairs.end(),
                                         [&](const Eigenspace& e) { return e.space.contains(p); });
                bool incl = perp_contained(sigma, theta, p);
                REQUIRE(eigen == incl);
                direct += incl;
            });
            CHECK(direct == eig.eigenvector_points());
        };
        auto sigma = standard_symplectic(static_cast<std::size_t>(c.n), f);
        if (c.exhaustive) {
            for_each_alternating_form(static_cast<std::size_t>(c.n), f,
                                      [&](const AlternatingForm& theta) { check_theta(sigma, theta); });
        } else {
            for (int t = 0; t < 300; ++t) check_theta(sigma, random_alternating_form(3, f, rng));
        }
        for (int t = 0; t < 5; ++t) {
            auto other_sigma = random_symplectic(static_cast<std::size_t>(c.n), f, rng);
            check_theta(other_sigma, random_alternating_form(static_cast<std::size_t>(c.n), f, rng));
        }
    }
}

TEST_CASE("common isotropic lines") {
    auto sigma = standard_symplectic(2, Field::get(2));
    CHECK(count_common_isotropic_lines(sigma, sigma) == 15);
    auto worst = worst_case_theta(sigma);
    CHECK(count_common_isotropic_lines(sigma, worst) == 9);
    CHECK(eta_by_point_pairs(sigma, worst) == 9);

    std::mt19937_64 rng(8);
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto& f = Field::get(q);
        auto s = standard_symplectic(static_cast<std::size_t>(n), f);
        CHECK(count_common_isotropic_lines(s, s) == formulas::to_u64(formulas::length(n, 2, q)));
        for (int t = 0; t < 10; ++t) {
            auto theta = random_theta(s, rng);
            CHECK(count_common_isotropic_lines(s, theta) == eta_by_point_pairs(s, theta));
        }
    }
    CHECK_THROWS_AS(count_common_isotropic_lines(standard_symplectic(1, Field::get(2)),
                                                 AlternatingForm::zero(1, Field::get(2))),
                    std::invalid_argument);
}

TEST_CASE("line-count identity for random theta") {
    std::mt19937_64 rng(42);
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        CAPTURE(n);
        CAPTURE(q);
        auto sigma = standard_symplectic(static_cast<std::size_t>(n), Field::get(q));
        for (int t = 0; t < 200; ++t) {
            auto theta = random_theta(sigma, rng);
            auto n1 = count_N1(sigma, theta);
            auto eta = count_common_isotropic_lines(sigma, theta);
            REQUIRE(formulas::eta_from_n1(n, q, n1) == eta);
        }
    }
}

TEST_CASE("line count is invariant under theta -> theta - lambda sigma") {
    std::mt19937_64 rng(4);
    for (int q : {3, 4, 5}) {
        auto sigma = standard_symplectic(2, Field::get(q));
        for (int t = 0; t < 10; ++t) {
            auto theta = random_alternating_form(2, Field::get(q), rng);
            auto base = count_common_isotropic_lines(sigma, theta);
            for (int lambda = 0; lambda < q; ++lambda)
                CHECK(count_common_isotropic_lines(sigma, theta.minus_scaled(static_cast<Elem>(lambda), sigma)) ==
                      base);
        }
    }
}

TEST_CASE("the extremal theta maximizes common isotropic lines over all forms") {
    // Exhaustive over every theta that is not a multiple of sigma.
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        CAPTURE(n);
        CAPTURE(q);
        const auto& f = Field::get(q);
        auto sigma = standard_symplectic(static_cast<std::size_t>(n), f);
        auto lines = enumerate_isotropic(static_cast<std::size_t>(n), 2, f);
        std::uint64_t best = 0;
        std::uint64_t best_n1 = 0;
        for_each_alternating_form(static_cast<std::size_t>(n), f, [&](const AlternatingForm& theta) {
            if (theta.is_multiple_of(sigma)) return;
            std::uint64_t eta = 0;
            for (const auto& l : lines) eta += theta(l.basis().row(0), l.basis().row(1)) == 0;
            if (eta > best) {
                best = eta;
                best_n1 = count_N1(sigma, theta);
            }
        });
        CHECK(best == formulas::to_u64(formulas::eta_max(n, q)));
        CHECK(best_n1 == formulas::to_u64(formulas::n1_max(n, q)));
        CHECK(count_common_isotropic_lines(sigma, worst_case_theta(sigma)) == best);
    }
}
