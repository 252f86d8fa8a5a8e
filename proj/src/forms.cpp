#include "symgrass/forms.hpp"

#include <stdexcept>
#include <string>

#include "symgrass/grassmann.hpp"

namespace symgrass {

namespace {

void check_alternating(const Matrix& g) {
    if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() == 0)
        throw std::invalid_argument("alternating form needs a 2n x 2n Gram matrix, got " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    const Field& f = g.field();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g(i, i) != 0) throw std::invalid_argument("alternating form has nonzero diagonal");
        for (std::size_t j = i + 1; j < g.cols(); ++j)
            if (g(j, i) != f.neg(g(i, j)))
                throw std::invalid_argument("Gram matrix is not skew-symmetric");
    }
}

void require_same_space(const AlternatingForm& a, const AlternatingForm& b) {
    if (&a.field() != &b.field() || a.dim() != b.dim())
        throw std::invalid_argument("forms live on different spaces");
}

}  // namespace

AlternatingForm::AlternatingForm(Matrix gram) : gram_(std::move(gram)) {
    check_alternating(gram_);
    rank_ = symgrass::rank(gram_);
    if (rank_ % 2 != 0) throw std::logic_error("alternating form with odd rank");
}

AlternatingForm AlternatingForm::standard(std::size_t n, const Field& field) {
    Matrix g(field, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, n + i) = 1;
        g(n + i, i) = field.neg(1);
    }
    return AlternatingForm(std::move(g));
}

AlternatingForm AlternatingForm::zero(std::size_t n, const Field& field) {
    return AlternatingForm(Matrix(field, 2 * n, 2 * n));
}

AlternatingForm standard_symplectic(std::size_t n, const Field& field) {
    if (n < 1) throw std::invalid_argument("standard_symplectic needs n >= 1");
    return AlternatingForm::standard(n, field);
}

Elem AlternatingForm::operator()(std::span<const Elem> x, std::span<const Elem> y) const {
    const Field& f = field();
    Elem s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        const Elem* mrow = f.mul_row(x[i]);
        auto g = gram_.row(i);
        for (std::size_t j = 0; j < dim(); ++j)
            if (g[j] && y[j]) s = f.add(s, mrow[f.mul(g[j], y[j])]);
    }
    return s;
}

std::vector<Elem> AlternatingForm::covector(std::span<const Elem> x) const {
    const Field& f = field();
    std::vector<Elem> out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        const Elem* mrow = f.mul_row(x[i]);
        auto g = gram_.row(i);
        for (std::size_t j = 0; j < dim(); ++j) out[j] = f.add(out[j], mrow[g[j]]);
    }
    return out;
}

AlternatingForm AlternatingForm::minus_scaled(Elem lambda, const AlternatingForm& other) const {
    require_same_space(*this, other);
    const Field& f = field();
    Matrix g = gram_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            g(i, j) = f.sub(g(i, j), f.mul(lambda, other.gram_(i, j)));
    return AlternatingForm(std::move(g));
}

bool AlternatingForm::is_multiple_of(const AlternatingForm& other) const {
    require_same_space(*this, other);
    for (int lambda = 0; lambda < field().q(); ++lambda)
        if (minus_scaled(static_cast<Elem>(lambda), other).rank() == 0) return true;
    return false;
}

Subspace radical(const AlternatingForm& f) { return kernel(f.gram()); }

Subspace perp(const AlternatingForm& f, const Subspace& s) {
    if (s.ambient_dim() != f.dim()) throw std::invalid_argument("subspace/form dimension mismatch");
    // x in s^perp iff b^T G x = 0 for each basis row b.
    return kernel(s.basis() * f.gram());
}

bool is_totally_isotropic(const AlternatingForm& f, const Matrix& rows) {
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = i + 1; j < rows.rows(); ++j)
            if (f(rows.row(i), rows.row(j)) != 0) return false;
    return true;
}

bool is_totally_isotropic(const AlternatingForm& f, const Subspace& s) {
    return is_totally_isotropic(f, s.basis());
}

std::size_t EigenDecomposition::total_dim() const {
    std::size_t d = 0;
    for (const auto& e : pairs) d += e.space.dim();
    return d;
}

std::uint64_t EigenDecomposition::eigenvector_points() const {
    // Eigenspaces for distinct eigenvalues meet trivially.
    std::uint64_t n = 0;
    for (const auto& e : pairs) n += e.space.projective_size();
    return n;
}

EigenDecomposition eigen_analysis(const AlternatingForm& sigma, const AlternatingForm& theta) {
    require_same_space(sigma, theta);
    if (!sigma.is_nondegenerate()) throw std::domain_error("sigma is degenerate");
    const Field& f = sigma.field();
    const Matrix a = inverse(sigma.gram()) * theta.gram();
    EigenDecomposition out{{}, false};
    for (int lambda = 0; lambda < f.q(); ++lambda) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            shifted(i, i) = f.sub(shifted(i, i), static_cast<Elem>(lambda));
        auto space = kernel(shifted);
        if (space.dim() > 0) out.pairs.push_back({static_cast<Elem>(lambda), std::move(space)});
    }
    out.diagonalizable = out.total_dim() == sigma.dim();
    return out;
}

std::uint64_t count_N1(const AlternatingForm& sigma, const AlternatingForm& theta) {
    return eigen_analysis(sigma, theta).eigenvector_points();
}

bool perp_contained(const AlternatingForm& sigma, const AlternatingForm& theta,
                    std::span<const Elem> p) {
    Matrix row(sigma.field(), 1, sigma.dim(), std::vector<Elem>(p.begin(), p.end()));
    auto point = Subspace::span(row);
    return perp(theta, point).contains(perp(sigma, point));
}

std::uint64_t count_N1_direct(const AlternatingForm& sigma, const AlternatingForm& theta) {
    require_same_space(sigma, theta);
    std::uint64_t n1 = 0;
    for_each_projective_point(sigma.dim(), sigma.field(), [&](std::span<const Elem> p) {
        if (perp_contained(sigma, theta, p)) ++n1;
    });
    return n1;
}

std::uint64_t count_common_isotropic_lines(const AlternatingForm& sigma,
                                           const AlternatingForm& theta) {
    require_same_space(sigma, theta);
    if (sigma.n() < 2) throw std::invalid_argument("common isotropic lines need n >= 2");
    if (!sigma.is_nondegenerate()) throw std::domain_error("sigma is degenerate");
    std::uint64_t eta = 0;
    for_each_isotropic(sigma, 2, [&](const Matrix& b) {
        if (theta(b.row(0), b.row(1)) == 0) ++eta;
    });
    return eta;
}

AlternatingForm worst_case_theta(const AlternatingForm& sigma) {
    const std::size_t n = sigma.n();
    if (n < 2) throw std::invalid_argument("worst_case_theta needs n >= 2");
    if (!sigma.is_nondegenerate()) throw std::domain_error("sigma is degenerate");
    const Field& f = sigma.field();
    const Matrix& m = sigma.gram();
    // Non-isotropic line <e_i, e_j>; (e_1, e_{n+1}) for the standard form.
    std::size_t vi = 0, vj = n;
    if (m(vi, vj) == 0) {
        bool found = false;
        for (std::size_t i = 0; i < m.rows() && !found; ++i)
            for (std::size_t j = i + 1; j < m.cols() && !found; ++j)
                if (m(i, j) != 0) {
                    vi = i;
                    vj = j;
                    found = true;
                }
    }
    // theta(x, y) = c (sigma(v1, x) sigma(v2, y) - sigma(v2, x) sigma(v1, y)) with
    // c = 1 / sigma(v1, v2): radical <v1, v2>^perp and theta(v1, v2) = sigma(v1, v2).
    const Elem c = f.inv(m(vi, vj));
    auto a = m.row(vi);
    auto b = m.row(vj);
    Matrix s(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s(i, j) = f.mul(c, f.sub(f.mul(a[i], b[j]), f.mul(b[i], a[j])));
    return AlternatingForm(std::move(s));
}

AlternatingForm random_alternating_form(std::size_t n, const Field& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, field.q() - 1);
    Matrix g(field, 2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = i + 1; j < 2 * n; ++j) {
            Elem x = static_cast<Elem>(dist(rng));
            g(i, j) = x;
            g(j, i) = field.neg(x);
        }
    return AlternatingForm(std::move(g));
}

AlternatingForm random_theta(const AlternatingForm& sigma, std::mt19937_64& rng) {
    while (true) {
        auto theta = random_alternating_form(sigma.n(), sigma.field(), rng);
        if (!theta.is_multiple_of(sigma)) return theta;
    }
}

void for_each_alternating_form(std::size_t n, const Field& field,
                               const std::function<void(const AlternatingForm&)>& visit) {
    const std::size_t d = 2 * n;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) slots.emplace_back(i, j);
    Matrix g(field, d, d);
    const Elem top = static_cast<Elem>(field.q() - 1);
    while (true) {
        visit(AlternatingForm(g));
        std::size_t s = slots.size();
        while (s > 0) {
            auto [i, j] = slots[s - 1];
            if (g(i, j) != top) {
                g(i, j) = static_cast<Elem>(g(i, j) + 1);
                g(j, i) = field.neg(g(i, j));
                break;
            }
            g(i, j) = 0;
            g(j, i) = 0;
            --s;
        }
        if (s == 0) return;
    }
}

}  // namespace symgrass
