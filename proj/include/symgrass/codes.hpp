#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgrass/forms.hpp"
#include "symgrass/linalg.hpp"
#include "symgrass/weight_enumerator.hpp"

namespace symgrass {

/// Projective linear code. For W(n,k) the columns of `generator` are the
/// Plücker points of the isotropic k-spaces, in enumeration order, written in
/// a basis of their span.
struct LinearCode {
    int n = 0;  ///< 0 when the code did not come from build_code
    int k = 0;
    std::size_t N = 0;
    std::size_t K = 0;
    Matrix generator;  ///< K x N, full row rank
    Matrix points;     ///< N x C(2n,k) Plücker coordinates (empty if unknown)

    const Field& field() const { return generator.field(); }
};

/// Thrown when a computation's estimated cost exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double estimate, double budget)
        : std::runtime_error(what), estimate_(estimate), budget_(budget) {}
    double estimate() const { return estimate_; }
    double budget() const { return budget_; }

private:
    double estimate_;
    double budget_;
};

inline constexpr double kDefaultBudget = 1e11;

enum class SweepMethod { codeword, hyperplane };

std::string to_string(SweepMethod m);
/// Accepts "codeword", "codeword_sweep", "hyperplane", "hyperplane_sweep".
SweepMethod parse_sweep_method(const std::string& s);

struct SweepOptions {
    unsigned threads = 1;
    double budget = kDefaultBudget;
};

/// W(n,k) over `field`. Throws BudgetExceeded if the construction estimate
/// (N * C(2n,k)^2) exceeds `budget`.
LinearCode build_code(int n, int k, const Field& field, double budget = kDefaultBudget);
/// Wraps an arbitrary generator matrix; dependent rows are removed.
LinearCode code_from_generator(const Matrix& generator);

/// Estimated elementary operations. Codeword sweep: q^K times the words
/// touched per Gray step (N/64 packed words for q=2, twice that for the
/// bitsliced q=3 path, N bytes otherwise). Hyperplane sweep: one K-term dot
/// product per point for each of the (q^K-1)/(q-1) hyperplanes.
double sweep_cost(const LinearCode& code, SweepMethod method);

/// Exact weight distribution. Throws BudgetExceeded.
WeightEnumerator weight_enumerator(const LinearCode& code, SweepMethod method,
                                   const SweepOptions& opts = {});

/// Smallest nonzero weight by codeword sweep. With `early_exit_bound` b the
/// sweep stops as soon as a nonzero word of weight <= b is seen, and that
/// weight is returned. Throws BudgetExceeded.
std::uint64_t min_distance(const LinearCode& code,
                           std::optional<std::uint64_t> early_exit_bound = std::nullopt,
                           const SweepOptions& opts = {});

struct FormCodeword {
    std::vector<Elem> word;
    std::uint64_t weight;
};

/// For W(n,2): the codeword p -> theta(v1, v2) over the points p = <v1, v2>,
/// evaluated through the Plücker coordinates of p.
FormCodeword codeword_from_form(const LinearCode& code, const AlternatingForm& theta);

/// Whether `word` lies in the row space of the generator.
bool in_code(const LinearCode& code, std::span<const Elem> word);

/// Header "q K N", then K rows of N encodings.
void write_generator(std::ostream& out, const LinearCode& code);
Matrix read_generator(std::istream& in);

}  // namespace symgrass
