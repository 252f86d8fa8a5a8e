#include "symgrass/linalg.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace symgrass {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(&field), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    for (Elem x : a_)
        if (x >= field.q()) throw std::out_of_range("matrix entry outside field");
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<int>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (int x : r) {
            if (x < 0 || x >= field.q()) throw std::out_of_range("matrix entry outside field");
            entries.push_back(static_cast<Elem>(x));
        }
    }
    return Matrix(field, rows.size(), cols, std::move(entries));
}

Matrix Matrix::transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::slice_rows(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("row slice out of range");
    std::vector<Elem> e(a_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                        a_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_));
    return Matrix(*field_, count, cols_, std::move(e));
}

Matrix Matrix::stack(const Matrix& other) const {
    if (other.field_ != field_ || other.cols_ != cols_)
        throw std::invalid_argument("cannot stack matrices of different shape or field");
    Matrix s = *this;
    s.a_.insert(s.a_.end(), other.a_.begin(), other.a_.end());
    s.rows_ += other.rows_;
    return s;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_ || a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    const Field& f = *a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            Elem x = a(i, l);
            if (x == 0) continue;
            const Elem* mrow = f.mul_row(x);
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), mrow[b(l, j)]);
        }
    return out;
}

RrefResult rref_generic(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
        const Elem* scale = f.mul_row(f.inv(a(r, c)));
        for (auto& x : a.row(r)) x = scale[x];
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Elem* mrow = f.mul_row(f.neg(a(i, c)));
            auto src = a.row(r);
            auto dst = a.row(i);
            for (std::size_t j = c; j < a.cols(); ++j) dst[j] = f.add(dst[j], mrow[src[j]]);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

RrefResult rref_gf2_packed(const Matrix& m) {
    if (m.field().q() != 2) throw std::invalid_argument("rref_gf2_packed requires GF(2)");
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> bits(m.rows() * words, 0);
    auto prow = [&](std::size_t r) { return bits.data() + r * words; };
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c)) prow(r)[c / 64] |= std::uint64_t{1} << (c % 64);

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t sel = r;
        while (sel < m.rows() && !(prow(sel)[w] & bit)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) std::swap_ranges(prow(sel), prow(sel) + words, prow(r));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || !(prow(i)[w] & bit)) continue;
            for (std::size_t j = w; j < words; ++j) prow(i)[j] ^= prow(r)[j];
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = (prow(i)[c / 64] >> (c % 64)) & 1;
    return {std::move(out), r, std::move(pivots)};
}

RrefResult rref(const Matrix& m) {
    return m.field().q() == 2 ? rref_gf2_packed(m) : rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::domain_error("inverse of a non-square matrix");
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
        throw std::domain_error("matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.matrix(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Matrix& rows) {
    auto red = rref(rows);
    return Subspace(red.matrix.slice_rows(0, red.rank));
}

Subspace Subspace::from_rref(Matrix basis) { return Subspace(std::move(basis)); }

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) {
    return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
    return Subspace(Matrix::identity(field, ambient_dim));
}

bool Subspace::contains(std::span<const Elem> v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("vector length mismatch");
    // Against an RREF basis, v is in the span iff v - sum v[pivot_i] * row_i == 0.
    const Field& f = field();
    std::vector<Elem> rest(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        auto row = basis_.row(i);
        std::size_t pc = 0;
        while (row[pc] == 0) ++pc;
        Elem coef = rest[pc];
        if (coef == 0) continue;
        const Elem* mrow = f.mul_row(f.neg(coef));
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = f.add(rest[j], mrow[row[j]]);
    }
    return std::all_of(rest.begin(), rest.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    return span(basis_.stack(other.basis_));
}

std::uint64_t Subspace::projective_size() const {
    std::uint64_t size = 0;
    for (std::size_t i = 0; i < dim(); ++i) size = size * static_cast<std::uint64_t>(field().q()) + 1;
    return size;
}

Subspace kernel(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t d = m.cols();
    auto red = rref(m);
    std::vector<bool> is_pivot(d, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    Matrix basis(f, 0, d);
    std::vector<Elem> v(d);
    for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), Elem{0});
        v[free] = 1;
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.matrix(r, free));
        basis.append_row(v);
    }
    return Subspace::span(basis);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    // x = sum s_i a_i = sum t_j b_j; solve [A^T | -B^T] (s, t) = 0.
    const Field& f = a.field();
    const std::size_t d = a.ambient_dim();
    Matrix sys(f, d, a.dim() + b.dim());
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i < a.dim(); ++i) sys(r, i) = a.basis()(i, r);
        for (std::size_t j = 0; j < b.dim(); ++j) sys(r, a.dim() + j) = f.neg(b.basis()(j, r));
    }
    auto sol = kernel(sys);
    Matrix vecs(f, 0, d);
    std::vector<Elem> x(d);
    for (std::size_t s = 0; s < sol.dim(); ++s) {
        std::fill(x.begin(), x.end(), Elem{0});
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Elem c = sol.basis()(s, i);
            if (c == 0) continue;
            for (std::size_t j = 0; j < d; ++j) x[j] = f.add(x[j], f.mul(c, a.basis()(i, j)));
        }
        vecs.append_row(x);
    }
    return Subspace::span(vecs);
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(const Field& field, std::size_t dim)
    : field_(&field), dim_(dim), pivot_row_(dim, -1), scratch_(dim) {}

bool EchelonBasis::insert(std::span<const Elem> v) {
    if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
    const Field& f = *field_;
    std::copy(v.begin(), v.end(), scratch_.begin());
    std::size_t lead = dim_;
    for (std::size_t c = 0; c < dim_; ++c) {
        Elem x = scratch_[c];
        if (x == 0) continue;
        int pr = pivot_row_[c];
        if (pr < 0) {
            lead = c;
            break;
        }
        const auto& row = rows_[static_cast<std::size_t>(pr)];
        const Elem* mrow = f.mul_row(f.neg(x));
        for (std::size_t j = c; j < dim_; ++j) scratch_[j] = f.add(scratch_[j], mrow[row[j]]);
    }
    if (lead == dim_) return false;
    const Elem* scale = f.mul_row(f.inv(scratch_[lead]));
    std::vector<Elem> row(dim_);
    for (std::size_t j = 0; j < dim_; ++j) row[j] = scale[scratch_[j]];
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

Subspace EchelonBasis::subspace() const {
    Matrix m(*field_, 0, dim_);
    for (const auto& r : rows_) m.append_row(r);
    return Subspace::span(m);
}

// ---------------------------------------------------------------------------

void for_each_pivot_pattern(std::size_t d, std::size_t k,
                            const std::function<void(std::span<const std::size_t>)>& visit) {
    if (k > d) return;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        visit(piv);
        // next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == d - k + (i - 1)) --i;
        if (i == 0) return;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::uint64_t for_each_subspace(std::size_t d, std::size_t k, const Field& field,
                                const std::function<void(const Matrix&)>& visit) {
    if (k > d) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    std::uint64_t count = 0;
    const Elem q = static_cast<Elem>(field.q());
    Matrix m(field, k, d);
    for_each_pivot_pattern(d, k, [&](std::span<const std::size_t> piv) {
        std::vector<bool> is_pivot(d, false);
        for (auto c : piv) is_pivot[c] = true;
        std::fill(m.row(0).data(), m.row(0).data() + k * d, Elem{0});
        std::vector<Elem*> free;
        for (std::size_t r = 0; r < k; ++r) {
            m(r, piv[r]) = 1;
            for (std::size_t c = piv[r] + 1; c < d; ++c)
                if (!is_pivot[c]) free.push_back(&m(r, c));
        }
        // Odometer over the free entries.
        while (true) {
            visit(m);
            ++count;
            std::size_t i = 0;
            while (i < free.size() && *free[i] == q - 1) *free[i++] = 0;
            if (i == free.size()) break;
            ++*free[i];
        }
    });
    return count;
}

std::vector<Subspace> enumerate_subspaces(std::size_t d, std::size_t k, const Field& field) {
    std::vector<Subspace> out;
    for_each_subspace(d, k, field, [&](const Matrix& b) { out.push_back(Subspace::from_rref(b)); });
    return out;
}

std::uint64_t for_each_projective_point(std::size_t d, const Field& field,
                                        const std::function<void(std::span<const Elem>)>& visit) {
    return for_each_subspace(d, 1, field, [&](const Matrix& m) { visit(m.row(0)); });
}

std::vector<std::vector<Elem>> enumerate_projective_points(std::size_t d, const Field& field) {
    std::vector<std::vector<Elem>> out;
    for_each_projective_point(d, field,
                              [&](std::span<const Elem> v) { out.emplace_back(v.begin(), v.end()); });
    return out;
}

bool normalize_projective(std::span<Elem> v, const Field& field) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (it == v.end()) return false;
    if (*it != 1) {
        const Elem* scale = field.mul_row(field.inv(*it));
        for (auto& x : v) x = scale[x];
    }
    return true;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << static_cast<int>(m(r, c));
        }
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in) {
    long long rows = -1, cols = -1, q = -1;
    if (!(in >> rows >> cols >> q) || rows < 0 || cols < 0)
        throw std::runtime_error("matrix header must be \"rows cols q\"");
    if (!Field::is_supported_order(static_cast<int>(q)))
        throw std::runtime_error("unsupported field order " + std::to_string(q) + " in matrix file");
    const Field& f = Field::get(static_cast<int>(q));
    std::vector<Elem> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    for (long long i = 0; i < rows * cols; ++i) {
        long long x;
        if (!(in >> x)) throw std::runtime_error("matrix file truncated at entry " + std::to_string(i));
        if (x < 0 || x >= q)
            throw std::runtime_error("matrix entry " + std::to_string(x) + " outside GF(" +
                                     std::to_string(q) + ")");
        entries.push_back(static_cast<Elem>(x));
    }
    return Matrix(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

}  // namespace symgrass
