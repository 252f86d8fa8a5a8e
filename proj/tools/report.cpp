#include "report.hpp"

#include <cstdint>
#include <limits>

namespace sgc {

json int_json(symgrass::formulas::Int v) {
    if (v >= 0 && v <= static_cast<symgrass::formulas::Int>(std::numeric_limits<std::uint64_t>::max()))
        return static_cast<std::uint64_t>(v);
    if (v < 0 && v >= static_cast<symgrass::formulas::Int>(std::numeric_limits<std::int64_t>::min()))
        return static_cast<std::int64_t>(v);
    return symgrass::formulas::to_string(v);
}

json distribution_json(const symgrass::WeightEnumerator& we) {
    json d = json::object();
    for (auto [w, c] : we.distribution) d[std::to_string(w)] = c;
    return d;
}

RunReport::RunReport(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

json RunReport::to_json() const {
    json j;
    j["command"] = command_;
    j["parameters"] = parameters_;
    j["results"] = results_;
    j["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (seed_) j["seed"] = *seed_;
    return j;
}

void RunReport::write(std::ostream& out) const { out << to_json().dump(2) << '\n'; }

}  // namespace sgc
