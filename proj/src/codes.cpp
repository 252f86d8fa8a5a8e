#include "symgrass/codes.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "sweep.hpp"
#include "symgrass/formulas.hpp"
#include "symgrass/grassmann.hpp"

namespace symgrass {

namespace {

std::string format_cost(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

void check_budget(const std::string& what, double estimate, double budget) {
    if (estimate > budget)
        throw BudgetExceeded(what + ": estimated " + format_cost(estimate) +
                                 " operations exceeds budget " + format_cost(budget),
                             estimate, budget);
}

double qpow(int q, std::size_t e) { return std::pow(static_cast<double>(q), static_cast<double>(e)); }

WeightEnumerator to_enumerator(const detail::Histogram& h) {
    WeightEnumerator we;
    for (std::size_t w = 0; w < h.size(); ++w)
        if (h[w]) we.distribution[w] = h[w];
    return we;
}

// Over GF(p^e) each message coordinate splits into e coordinates over GF(p):
// row m*e+j of the additive generator is x^j * g_m, and the Gray walk runs in
// base p over K*e digits.
Matrix additive_generator(const Matrix& g) {
    const Field& f = g.field();
    const int e = f.e();
    if (e == 1) return g;
    Matrix out(f, g.rows() * static_cast<std::size_t>(e), g.cols());
    for (std::size_t m = 0; m < g.rows(); ++m) {
        Elem scale = 1;
        for (int j = 0; j < e; ++j, scale = static_cast<Elem>(scale * f.p())) {
            const std::size_t r = m * static_cast<std::size_t>(e) + static_cast<std::size_t>(j);
            for (std::size_t c = 0; c < g.cols(); ++c) out(r, c) = f.mul(scale, g(m, c));
        }
    }
    return out;
}

detail::Histogram codeword_histogram(const LinearCode& code, unsigned threads,
                                     detail::SweepControl& ctl) {
    const int q = code.field().q();
    switch (q) {
        case 2:
            return detail::sweep_all(detail::Gf2Rows(code.generator), q, code.K, code.N, threads, ctl);
        case 3:
            return detail::sweep_all(detail::Gf3Rows(code.generator), q, code.K, code.N, threads, ctl);
        default: {
            const Matrix g = additive_generator(code.generator);
            return detail::sweep_all(detail::ByteRows(g), code.field().p(), g.rows(), code.N, threads, ctl);
        }
    }
}

// Each hyperplane u^perp of PG(K-1, q), u normalized with first nonzero entry 1,
// meets the point set in the columns with u . column = 0. Its q-1 codewords
// all have weight N - |section|.
detail::Histogram hyperplane_histogram(const LinearCode& code, unsigned threads) {
    const Field& f = code.field();
    const int q = f.q();
    const std::size_t K = code.K, N = code.N;
    const Matrix cols = code.generator.transpose();  // N x K

    // Block L holds the functionals whose leading 1 sits at position L; it has q^{K-1-L} members.
    std::vector<std::uint64_t> block_start(K + 1, 0);
    for (std::size_t L = 0; L < K; ++L)
        block_start[L + 1] = block_start[L] + static_cast<std::uint64_t>(qpow(q, K - 1 - L));
    const std::uint64_t total = block_start[K];

    threads = std::max(1u, threads);
    std::vector<detail::Histogram> partial(threads, detail::Histogram(N + 1, 0));
    auto worker = [&](unsigned id) {
        std::vector<Elem> u(K);
        for (std::uint64_t idx = id; idx < total; idx += threads) {
            std::size_t L = static_cast<std::size_t>(
                std::upper_bound(block_start.begin(), block_start.end(), idx) - block_start.begin() - 1);
            std::uint64_t tail = idx - block_start[L];
            std::fill(u.begin(), u.end(), Elem{0});
            u[L] = 1;
            for (std::size_t j = K; j-- > L + 1;) {
                u[j] = static_cast<Elem>(tail % static_cast<std::uint64_t>(q));
                tail /= static_cast<std::uint64_t>(q);
            }
            std::uint64_t section = 0;
            for (std::size_t c = 0; c < N; ++c) {
                auto col = cols.row(c);
                Elem s = 0;
                for (std::size_t i = L; i < K; ++i)
                    if (u[i] && col[i]) s = f.add(s, f.mul(u[i], col[i]));
                section += s == 0;
            }
            partial[id][N - section] += static_cast<std::uint64_t>(q - 1);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    detail::Histogram h(N + 1, 0);
    for (const auto& p : partial)
        for (std::size_t w = 0; w <= N; ++w) h[w] += p[w];
    h[0] += 1;
    return h;
}

}  // namespace

std::string to_string(SweepMethod m) {
    return m == SweepMethod::codeword ? "codeword_sweep" : "hyperplane_sweep";
}

SweepMethod parse_sweep_method(const std::string& s) {
    if (s == "codeword" || s == "codeword_sweep") return SweepMethod::codeword;
    if (s == "hyperplane" || s == "hyperplane_sweep") return SweepMethod::hyperplane;
    throw std::invalid_argument("unknown sweep method '" + s + "'");
}

LinearCode build_code(int n, int k, const Field& field, double budget) {
    formulas::validate_nkq(n, k, field.q());
    const double N = static_cast<double>(formulas::length(n, k, field.q()));
    const double C = static_cast<double>(formulas::binomial(2 * n, k));
    check_budget("building W(" + std::to_string(n) + "," + std::to_string(k) + ") over GF(" +
                     std::to_string(field.q()) + ")",
                 N * C * C, budget);

    Matrix points = plucker_point_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(k), field);
    // The code is the row space of the coordinate functionals evaluated at the points.
    auto red = rref(points.transpose());
    const std::size_t length = points.rows();
    return LinearCode{n, k, length, red.rank, red.matrix.slice_rows(0, red.rank), std::move(points)};
}

LinearCode code_from_generator(const Matrix& generator) {
    auto red = rref(generator);
    return LinearCode{0, 0, generator.cols(), red.rank, red.matrix.slice_rows(0, red.rank),
                      Matrix(generator.field(), 0, 0)};
}

double sweep_cost(const LinearCode& code, SweepMethod method) {
    const int q = code.field().q();
    const double N = static_cast<double>(code.N);
    if (method == SweepMethod::hyperplane)
        return (qpow(q, code.K) - 1) / (q - 1) * N * static_cast<double>(code.K);
    double per_step = q == 2 ? std::ceil(N / 64) : q == 3 ? 2 * std::ceil(N / 64) : N;
    return qpow(q, code.K) * per_step;
}

WeightEnumerator weight_enumerator(const LinearCode& code, SweepMethod method,
                                   const SweepOptions& opts) {
    check_budget(to_string(method), sweep_cost(code, method), opts.budget);
    if (method == SweepMethod::hyperplane) return to_enumerator(hyperplane_histogram(code, opts.threads));
    detail::SweepControl ctl;
    return to_enumerator(codeword_histogram(code, opts.threads, ctl));
}

std::uint64_t min_distance(const LinearCode& code, std::optional<std::uint64_t> early_exit_bound,
                           const SweepOptions& opts) {
    check_budget("min_distance", sweep_cost(code, SweepMethod::codeword), opts.budget);
    if (code.K == 0) throw std::domain_error("zero-dimensional code has no minimum distance");
    detail::SweepControl ctl;
    ctl.early_exit_bound = early_exit_bound;
    auto h = codeword_histogram(code, opts.threads, ctl);
    for (std::size_t w = 1; w < h.size(); ++w)
        if (h[w]) return w;
    throw std::logic_error("sweep found no nonzero codeword");
}

FormCodeword codeword_from_form(const LinearCode& code, const AlternatingForm& theta) {
    if (code.k != 2) throw std::invalid_argument("codeword_from_form needs a line code W(n,2)");
    if (theta.n() != static_cast<std::size_t>(code.n) || &theta.field() != &code.field())
        throw std::invalid_argument("form does not match the code's space");
    const Field& f = code.field();
    const std::size_t d = theta.dim();
    PluckerIndex idx(d, 2);
    // theta(v1, v2) = sum_{i<j} S_ij (v1_i v2_j - v1_j v2_i) = sum_{i<j} S_ij p_ij.
    std::vector<Elem> functional(idx.size());
    for (std::size_t s = 0; s < idx.size(); ++s) {
        auto ij = idx.subset(s);
        functional[s] = theta.gram()(ij[0], ij[1]);
    }
    FormCodeword out{std::vector<Elem>(code.N, 0), 0};
    for (std::size_t p = 0; p < code.N; ++p) {
        auto pt = code.points.row(p);
        Elem v = 0;
        for (std::size_t s = 0; s < idx.size(); ++s)
            if (functional[s] && pt[s]) v = f.add(v, f.mul(functional[s], pt[s]));
        out.word[p] = v;
        out.weight += v != 0;
    }
    return out;
}

bool in_code(const LinearCode& code, std::span<const Elem> word) {
    if (word.size() != code.N) throw std::invalid_argument("word length differs from code length");
    Matrix m = code.generator;
    m.append_row(word);
    return rank(m) == code.K;
}

void write_generator(std::ostream& out, const LinearCode& code) {
    out << code.field().q() << ' ' << code.K << ' ' << code.N << '\n';
    for (std::size_t r = 0; r < code.K; ++r) {
        for (std::size_t c = 0; c < code.N; ++c) {
            if (c) out << ' ';
            out << static_cast<int>(code.generator(r, c));
        }
        out << '\n';
    }
}

Matrix read_generator(std::istream& in) {
    long long q = -1, K = -1, N = -1;
    if (!(in >> q >> K >> N) || K < 0 || N < 0)
        throw std::runtime_error("generator header must be \"q K N\"");
    std::ostringstream reframed;
    reframed << K << ' ' << N << ' ' << q << '\n' << in.rdbuf();
    std::istringstream body(reframed.str());
    return read_matrix(body);
}

}  // namespace symgrass
