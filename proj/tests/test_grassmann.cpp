#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "symgrass/formulas.hpp"
#include "symgrass/grassmann.hpp"

using namespace symgrass;

namespace {

Matrix rows_of(const Field& f, std::initializer_list<std::vector<int>> rows) { return Matrix::from_rows(f, rows); }

std::size_t coord(const PluckerIndex& idx, std::initializer_list<std::size_t> cols) {
    std::uint32_t m = 0;
    for (auto c : cols) m |= 1u << c;
    return idx.index_of(m);
}

Matrix random_invertible(const Field& f, std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    while (true) {
        Matrix a(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a(i, j) = static_cast<Elem>(dist(rng));
        if (rank(a) == k) return a;
    }
}

}  // namespace

TEST_CASE("Plücker index order is lexicographic") {
    PluckerIndex idx(4, 2);
    REQUIRE(idx.size() == 6);
    std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.subset(i) == expected[i]);
    CHECK(idx.index_of(0b0110) == 3);
    CHECK(idx.index_of(0b0111) == idx.size());
}

TEST_CASE("Plücker examples") {
    for (int q : {2, 3, 5}) {
        const auto& f = Field::get(q);
        auto p = plucker(rows_of(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
        PluckerIndex idx(4, 2);
        for (std::size_t i = 0; i < idx.size(); ++i) CHECK(p.coords[i] == (i == coord(idx, {0, 1}) ? 1 : 0));
    }
    const auto& f2 = Field::get(2);
    PluckerIndex idx(4, 2);
    auto p = plucker(rows_of(f2, {{1, 0, 0, 0}, {0, 1, 1, 0}}));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        bool one = i == coord(idx, {0, 1}) || i == coord(idx, {0, 2});
        CHECK(p.coords[i] == (one ? 1 : 0));
    }
    CHECK_THROWS_AS(plucker(rows_of(f2, {{1, 1, 0, 0}, {1, 1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("minors agree with the Leibniz determinant") {
    std::mt19937_64 rng(12);
    for (int q : {2, 3, 7}) {
        const auto& f = Field::get(q);
        std::uniform_int_distribution<int> dist(0, q - 1);
        for (std::size_t k = 1; k <= 4; ++k) {
            const std::size_t d = 8;
            Matrix b(f, k, d);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < d; ++j) b(i, j) = static_cast<Elem>(dist(rng));
            PluckerIndex idx(d, k);
            std::vector<Elem> minors(idx.size());
            idx.minors(b, minors);
            for (std::size_t s = 0; s < idx.size(); ++s) {
                auto cols = idx.subset(s);
                std::vector<oracle::Vec> sub(k, oracle::Vec(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = b(i, cols[j]);
                REQUIRE(minors[s] == oracle::leibniz_det(f, sub));
            }
        }
    }
}

TEST_CASE("Plücker point does not depend on the basis") {
    std::mt19937_64 rng(21);
    for (int q : {2, 3, 4}) {
        const auto& f = Field::get(q);
        for (const auto& s : enumerate_isotropic(3, 2, f)) {
            if (rng() % 8) continue;
            auto scrambled = random_invertible(f, 2, rng) * s.basis();
            CHECK(plucker(scrambled) == plucker(s));
        }
    }
}

TEST_CASE("isotropic enumeration examples") {
    CHECK(enumerate_isotropic(2, 2, Field::get(2)).size() == 15);
    CHECK(enumerate_isotropic(3, 3, Field::get(2)).size() == 135);
    for (int q : {2, 3, 4})
        for (std::size_t n : {1u, 2u, 3u})
            CHECK(count_isotropic(n, 1, Field::get(q)) ==
                  formulas::to_u64(formulas::length(static_cast<int>(n), 1, q)));
    CHECK_THROWS_AS(enumerate_isotropic(2, 3, Field::get(2)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_isotropic(2, 0, Field::get(2)), std::invalid_argument);
}

TEST_CASE("isotropic enumeration equals filtering all subspaces") {
    struct Case {
        std::size_t n, k;
        int q;
    };
    for (auto c : {Case{2, 1, 3}, Case{2, 2, 2}, Case{2, 2, 3}, Case{3, 2, 2}, Case{3, 3, 2}, Case{2, 2, 4}}) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        CAPTURE(c.q);
        const auto& f = Field::get(c.q);
        auto sigma = standard_symplectic(c.n, f);
        std::vector<Matrix> filtered;
        for_each_subspace(2 * c.n, c.k, f, [&](const Matrix& b) {
            if (is_totally_isotropic(sigma, b)) filtered.push_back(b);
        });
        std::vector<Matrix> built;
        for_each_isotropic(sigma, c.k, [&](const Matrix& b) { built.push_back(b); });
        // Both walk pivot patterns in the same order, but compare as sets.
        auto key = [](const Matrix& m) { return m.entries(); };
        std::set<std::vector<Elem>> a, b;
        for (const auto& m : filtered) a.insert(key(m));
        for (const auto& m : built) b.insert(key(m));
        CHECK(built.size() == b.size());
        CHECK(a == b);
    }
}

TEST_CASE("isotropic counts match the product formula") {
    for (int q : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= n; ++k) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(count_isotropic(static_cast<std::size_t>(n), static_cast<std::size_t>(k), Field::get(q)) ==
                      formulas::to_u64(formulas::length(n, k, q)));
            }
}

TEST_CASE("distinct subspaces have distinct Plücker points") {
    for (auto [n, k, q] : std::vector<std::tuple<int, int, int>>{{3, 2, 2}, {3, 3, 3}, {2, 2, 5}}) {
        auto pts = plucker_point_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(k), Field::get(q));
        std::set<std::vector<Elem>> seen;
        for (std::size_t r = 0; r < pts.rows(); ++r) seen.emplace(pts.row(r).begin(), pts.row(r).end());
        CHECK(seen.size() == pts.rows());
    }
}

TEST_CASE("point matrix rows are normalized Plücker points") {
    const auto& f = Field::get(3);
    auto pts = plucker_point_matrix(2, 2, f);
    auto spaces = enumerate_isotropic(2, 2, f);
    REQUIRE(pts.rows() == spaces.size());
    for (std::size_t r = 0; r < pts.rows(); ++r) {
        auto p = plucker(spaces[r]);
        CHECK(std::equal(p.coords.begin(), p.coords.end(), pts.row(r).begin()));
    }
}

TEST_CASE("lines through a point") {
    const auto& f2 = Field::get(2);
    auto s22 = standard_symplectic(2, f2);
    for (const auto& x : enumerate_isotropic(2, 2, f2)) {
        auto lines = grassmann_lines_through(s22, 2, x);
        CHECK(lines.size() == 3);
        for (const auto& l : lines) {
            CHECK_FALSE(l.upper.has_value());
            CHECK(x.contains(l.lower));
        }
    }

    // W(3,2): lines (W, T) with T an isotropic 3-space above X.
    auto s32 = standard_symplectic(3, f2);
    auto points = enumerate_isotropic(3, 2, f2);
    std::uint64_t incidences = 0;
    for (const auto& x : points) {
        auto lines = grassmann_lines_through(s32, 2, x);
        CHECK(lines.size() == 9);
        for (const auto& l : lines) {
            REQUIRE(l.upper.has_value());
            CHECK(is_totally_isotropic(s32, *l.upper));
            CHECK(l.upper->contains(x));
        }
        incidences += lines.size();
    }
    std::uint64_t line_count = for_each_grassmann_line(s32, 2, [](const GrassmannLine&) {});
    CHECK(incidences == line_count * 3);

    // k = 1: pencils of points inside isotropic planes.
    auto s33 = standard_symplectic(3, Field::get(3));
    auto p = enumerate_isotropic(3, 1, Field::get(3)).front();
    auto pencils = grassmann_lines_through(s33, 1, p);
    CHECK(pencils.size() == 40);  // (q^4 - 1)/(q - 1) planes through p inside p^perp
    for (const auto& l : pencils) {
        CHECK(l.lower.dim() == 0);
        CHECK(l.upper->dim() == 2);
    }
}

TEST_CASE("every line maps to a line of the Plücker space") {
    for (auto [n, k, q] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 3}, {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {3, 3, 2}, {1, 1, 5}, {3, 1, 2}}) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(q);
        const auto& f = Field::get(q);
        auto sigma = standard_symplectic(static_cast<std::size_t>(n), f);
        bool all_ok = true;
        for_each_grassmann_line(sigma, static_cast<std::size_t>(k), [&](const GrassmannLine& l) {
            auto members = l.members(sigma);
            all_ok &= members.size() == static_cast<std::size_t>(q + 1);
            Matrix coords(f, 0, PluckerIndex(2 * n, k).size());
            for (const auto& x : members) {
                all_ok &= x.dim() == static_cast<std::size_t>(k) && is_totally_isotropic(sigma, x);
                coords.append_row(plucker(x).coords);
            }
            all_ok &= rank(coords) == 2;
        });
        CHECK(all_ok);
    }
}

TEST_CASE("point list format") {
    const auto& f = Field::get(2);
    auto pts = plucker_point_matrix(2, 2, f);
    std::ostringstream os;
    write_point_list(os, 2, 2, pts);
    std::istringstream is(os.str());
    int n, k, q, N;
    is >> n >> k >> q >> N;
    CHECK(n == 2);
    CHECK(k == 2);
    CHECK(q == 2);
    CHECK(N == 15);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    CHECK(line == "1 0 0 0 0 0");
}
