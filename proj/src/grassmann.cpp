#include "symgrass/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace symgrass {

// ---------------------------------------------------------------------------
// Plücker coordinates

PluckerIndex::PluckerIndex(std::size_t d, std::size_t k) : d_(d), k_(k) {
    if (k > d || d > 20) throw std::invalid_argument("unsupported Plücker index shape");
    position_.assign(std::size_t{1} << d, 0);
    for_each_pivot_pattern(d, k, [&](std::span<const std::size_t> s) {
        std::uint32_t m = 0;
        for (auto c : s) m |= std::uint32_t{1} << c;
        masks_.push_back(m);
    });
    std::fill(position_.begin(), position_.end(), static_cast<std::uint32_t>(masks_.size()));
    for (std::size_t i = 0; i < masks_.size(); ++i) position_[masks_[i]] = static_cast<std::uint32_t>(i);
    by_size_.resize(k + 1);
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << d); ++m) {
        auto pc = static_cast<std::size_t>(std::popcount(m));
        if (pc <= k) by_size_[pc].push_back(m);
    }
}

std::vector<std::size_t> PluckerIndex::subset(std::size_t i) const {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < d_; ++c)
        if (masks_[i] >> c & 1) s.push_back(c);
    return s;
}

std::size_t PluckerIndex::index_of(std::uint32_t mask) const {
    return mask < position_.size() ? position_[mask] : masks_.size();
}

void PluckerIndex::minors(const Matrix& basis, std::span<Elem> out) const {
    if (basis.rows() != k_ || basis.cols() != d_ || out.size() != masks_.size())
        throw std::invalid_argument("minor computation shape mismatch");
    const Field& f = basis.field();
    // Laplace expansion along the last row: minor[r][S] of rows 0..r-1, columns S.
    thread_local std::vector<Elem> dp;
    dp.assign(std::size_t{1} << d_, 0);
    dp[0] = 1;
    for (std::size_t r = 1; r <= k_; ++r) {
        auto row = basis.row(r - 1);
        for (std::uint32_t m : by_size_[r]) {
            Elem acc = 0;
            std::size_t t = 0;
            for (std::uint32_t rest = m; rest; rest &= rest - 1, ++t) {
                auto c = static_cast<std::size_t>(std::countr_zero(rest));
                Elem a = row[c];
                if (a == 0) continue;
                Elem term = f.mul(a, dp[m & ~(std::uint32_t{1} << c)]);
                // sign (-1)^{(r-1) + t}
                acc = ((r - 1 + t) & 1) ? f.sub(acc, term) : f.add(acc, term);
            }
            dp[m] = acc;
        }
    }
    for (std::size_t i = 0; i < masks_.size(); ++i) out[i] = dp[masks_[i]];
}

PluckerPoint plucker(const Matrix& basis) {
    PluckerIndex idx(basis.cols(), basis.rows());
    PluckerPoint p{std::vector<Elem>(idx.size())};
    idx.minors(basis, p.coords);
    if (!normalize_projective(p.coords, basis.field()))
        throw std::invalid_argument("plucker: basis rows are linearly dependent");
    return p;
}

PluckerPoint plucker(const Subspace& s) { return plucker(s.basis()); }

// ---------------------------------------------------------------------------
// Isotropic enumeration

namespace {

struct IsotropicSearch {
    const AlternatingForm& sigma;
    const Field& f;
    std::span<const std::size_t> piv;
    std::size_t d;
    std::size_t k;
    const std::function<void(const Matrix&)>& visit;
    Matrix m;
    std::vector<bool> is_pivot;
    std::vector<std::vector<Elem>> covectors;  // row_j^T G for rows placed so far
    std::uint64_t count = 0;

    IsotropicSearch(const AlternatingForm& s, std::span<const std::size_t> p,
                    const std::function<void(const Matrix&)>& v)
        : sigma(s), f(s.field()), piv(p), d(s.dim()), k(p.size()), visit(v), m(f, k, d),
          is_pivot(d, false) {
        for (auto c : piv) is_pivot[c] = true;
    }

    void place(std::size_t r) {
        if (r == k) {
            visit(m);
            ++count;
            return;
        }
        std::vector<std::size_t> free;
        for (std::size_t c = piv[r] + 1; c < d; ++c)
            if (!is_pivot[c]) free.push_back(c);
        const std::size_t nf = free.size();

        // Conditions covectors[j] . row = 0 for j < r, with row[piv[r]] = 1:
        // sum_{c in free} cov_j[c] x_c = -cov_j[piv[r]].
        Matrix sys(f, r, nf + 1);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t i = 0; i < nf; ++i) sys(j, i) = covectors[j][free[i]];
            sys(j, nf) = f.neg(covectors[j][piv[r]]);
        }
        auto red = rref(sys);
        if (red.rank > 0 && red.pivots[red.rank - 1] == nf) return;  // inconsistent

        std::vector<bool> bound(nf, false);
        for (std::size_t i = 0; i < red.rank; ++i) bound[red.pivots[i]] = true;
        std::vector<std::size_t> params;
        for (std::size_t i = 0; i < nf; ++i)
            if (!bound[i]) params.push_back(i);

        auto row = m.row(r);
        std::fill(row.begin(), row.end(), Elem{0});
        row[piv[r]] = 1;
        std::vector<Elem> x(nf, 0);
        const Elem top = static_cast<Elem>(f.q() - 1);
        while (true) {
            // Bound variables from the reduced system.
            for (std::size_t i = 0; i < red.rank; ++i) {
                Elem v = red.matrix(i, nf);
                for (auto pi : params)
                    if (x[pi]) v = f.sub(v, f.mul(red.matrix(i, pi), x[pi]));
                x[red.pivots[i]] = v;
            }
            for (std::size_t i = 0; i < nf; ++i) row[free[i]] = x[i];
            covectors.push_back(sigma.covector(row));
            place(r + 1);
            covectors.pop_back();

            std::size_t i = 0;
            while (i < params.size() && x[params[i]] == top) x[params[i++]] = 0;
            if (i == params.size()) break;
            ++x[params[i]];
        }
        std::fill(row.begin(), row.end(), Elem{0});
    }
};

}  // namespace

std::uint64_t for_each_isotropic_with_pivots(const AlternatingForm& sigma,
                                             std::span<const std::size_t> pivots,
                                             const std::function<void(const Matrix&)>& visit) {
    IsotropicSearch search(sigma, pivots, visit);
    search.place(0);
    return search.count;
}

std::uint64_t for_each_isotropic(const AlternatingForm& sigma, std::size_t k,
                                 const std::function<void(const Matrix&)>& visit) {
    if (k > sigma.dim()) throw std::invalid_argument("isotropic dimension exceeds ambient dimension");
    std::uint64_t count = 0;
    for_each_pivot_pattern(sigma.dim(), k, [&](std::span<const std::size_t> piv) {
        count += for_each_isotropic_with_pivots(sigma, piv, visit);
    });
    return count;
}

std::vector<Subspace> enumerate_isotropic(std::size_t n, std::size_t k, const Field& field) {
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_isotropic needs 1 <= k <= n");
    std::vector<Subspace> out;
    for_each_isotropic(AlternatingForm::standard(n, field), k,
                       [&](const Matrix& b) { out.push_back(Subspace::from_rref(b)); });
    return out;
}

std::uint64_t count_isotropic(std::size_t n, std::size_t k, const Field& field) {
    if (k < 1 || k > n) throw std::invalid_argument("count_isotropic needs 1 <= k <= n");
    return for_each_isotropic(AlternatingForm::standard(n, field), k, [](const Matrix&) {});
}

// ---------------------------------------------------------------------------
// Lines

namespace {

// Vectors extending a basis of `inner` to a basis of `outer` (inner <= outer).
std::vector<std::vector<Elem>> complement(const Subspace& inner, const Subspace& outer) {
    EchelonBasis eb(inner.field(), inner.ambient_dim());
    for (std::size_t i = 0; i < inner.dim(); ++i) eb.insert(inner.basis().row(i));
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i < outer.dim(); ++i)
        if (eb.insert(outer.basis().row(i)))
            out.emplace_back(outer.basis().row(i).begin(), outer.basis().row(i).end());
    return out;
}

// inner + <v> for every projective point v of outer / inner.
std::vector<Subspace> spaces_above(const Subspace& inner, const Subspace& outer) {
    const Field& f = inner.field();
    auto comp = complement(inner, outer);
    std::vector<Subspace> out;
    std::vector<Elem> v(inner.ambient_dim());
    for_each_projective_point(comp.size(), f, [&](std::span<const Elem> c) {
        std::fill(v.begin(), v.end(), Elem{0});
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c[i], comp[i][j]));
        }
        Matrix rows = inner.basis();
        rows.append_row(v);
        out.push_back(Subspace::span(rows));
    });
    return out;
}

// Every j-subspace of s.
std::vector<Subspace> subspaces_of(const Subspace& s, std::size_t j) {
    std::vector<Subspace> out;
    for_each_subspace(s.dim(), j, s.field(), [&](const Matrix& coef) {
        out.push_back(Subspace::span(coef * s.basis()));
    });
    return out;
}

}  // namespace

std::vector<Subspace> GrassmannLine::members(const AlternatingForm& sigma) const {
    if (upper) return spaces_above(lower, *upper);
    return spaces_above(lower, perp(sigma, lower));
}

std::vector<GrassmannLine> grassmann_lines_through(const AlternatingForm& sigma, std::size_t k,
                                                   const Subspace& x) {
    if (x.dim() != k || !is_totally_isotropic(sigma, x))
        throw std::invalid_argument("grassmann_lines_through needs an isotropic k-space");
    std::vector<GrassmannLine> out;
    auto hyperplanes = subspaces_of(x, k - 1);
    if (k == sigma.n()) {
        for (auto& w : hyperplanes) out.push_back({std::move(w), std::nullopt});
        return out;
    }
    // T = X + <v> with v in X^perp, i.e. points of X^perp / X.
    auto uppers = spaces_above(x, perp(sigma, x));
    for (const auto& w : hyperplanes)
        for (const auto& t : uppers) out.push_back({w, t});
    return out;
}

std::uint64_t for_each_grassmann_line(const AlternatingForm& sigma, std::size_t k,
                                      const std::function<void(const GrassmannLine&)>& visit) {
    const std::size_t n = sigma.n();
    if (k < 1 || k > n) throw std::invalid_argument("line enumeration needs 1 <= k <= n");
    const Field& f = sigma.field();
    std::uint64_t count = 0;
    if (k == n) {
        auto emit = [&](Subspace w) {
            visit(GrassmannLine{std::move(w), std::nullopt});
            ++count;
        };
        if (k == 1)
            emit(Subspace::zero(f, sigma.dim()));
        else
            for_each_isotropic(sigma, k - 1, [&](const Matrix& b) { emit(Subspace::from_rref(b)); });
        return count;
    }
    for_each_isotropic(sigma, k + 1, [&](const Matrix& b) {
        auto t = Subspace::from_rref(b);
        for (auto& w : subspaces_of(t, k - 1)) {
            visit(GrassmannLine{std::move(w), t});
            ++count;
        }
    });
    return count;
}

Matrix plucker_point_matrix(std::size_t n, std::size_t k, const Field& field) {
    if (k < 1 || k > n) throw std::invalid_argument("plucker_point_matrix needs 1 <= k <= n");
    PluckerIndex idx(2 * n, k);
    std::vector<Elem> entries;
    std::vector<Elem> coords(idx.size());
    std::size_t rows = 0;
    for_each_isotropic(AlternatingForm::standard(n, field), k, [&](const Matrix& b) {
        // RREF basis: the pivot subset is the lexicographically first nonzero
        // minor and equals 1, so the coordinates are already normalized.
        idx.minors(b, coords);
        entries.insert(entries.end(), coords.begin(), coords.end());
        ++rows;
    });
    return Matrix(field, rows, idx.size(), std::move(entries));
}

void write_point_list(std::ostream& out, std::size_t n, std::size_t k, const Matrix& points) {
    out << n << ' ' << k << ' ' << points.field().q() << ' ' << points.rows() << '\n';
    for (std::size_t r = 0; r < points.rows(); ++r) {
        for (std::size_t c = 0; c < points.cols(); ++c) {
            if (c) out << ' ';
            out << static_cast<int>(points(r, c));
        }
        out << '\n';
    }
}

}  // namespace symgrass
