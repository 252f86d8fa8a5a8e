#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "symgrass/formulas.hpp"
#include "symgrass/weight_enumerator.hpp"

namespace sgc {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json int_json(symgrass::formulas::Int v);

/// {"<weight>": count, ...} in increasing weight order.
json distribution_json(const symgrass::WeightEnumerator& we);

/// One command invocation: parameters in, results out, plus timing.
class RunReport {
public:
    explicit RunReport(std::string command);

    json& parameters() { return parameters_; }
    json& results() { return results_; }
    void set_seed(std::uint64_t seed) { seed_ = seed; }

    json to_json() const;
    void write(std::ostream& out) const;

private:
    std::string command_;
    json parameters_ = json::object();
    json results_ = json::object();
    std::optional<std::uint64_t> seed_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace sgc
