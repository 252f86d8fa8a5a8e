// sgc: build symplectic Grassmann codes and check their parameters.
//
//   sgc params  n k q
//   sgc build   n k q [--output gen.txt] [--points pts.txt]
//   sgc weights n k q [--method codeword|hyperplane] [--threads T] [--output w.json] [--slow]
//   sgc eta     n q   [--theta worst|random|FILE] [--seed S] [--trials T]
//   sgc verify  n k q [--slow] [--seed S] [--trials T]
//   sgc bounds  n k q [--slow]
//
// JSON report on stdout, log on stderr. Exit codes: 0 pass, 1 mismatch,
// 2 usage or input error, 3 budget refusal.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"
#include "symgrass/codes.hpp"
#include "symgrass/formulas.hpp"
#include "symgrass/grassmann.hpp"

using namespace symgrass;
namespace fm = symgrass::formulas;
using sgc::json;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

// Sweeps above this many estimated operations need --slow.
constexpr double kSlowThreshold = 1e8;

struct Globals {
    std::string method = "codeword";
    unsigned threads = 1;
    std::uint64_t seed = 1;
    double budget = kDefaultBudget;
    std::string output;
    bool slow = false;
};

struct Triple {
    int n = 0, k = 0, q = 0;
};

void log(const std::string& s) { std::cerr << s << '\n'; }

unsigned thread_count(unsigned t) { return t ? t : std::max(1u, std::thread::hardware_concurrency()); }

const Field& field_for(int q) {
    if (!Field::is_supported_order(q)) throw std::invalid_argument("unsupported field order " + std::to_string(q));
    return Field::get(q);
}

json triple_json(const Triple& t) { return {{"n", t.n}, {"k", t.k}, {"q", t.q}}; }

void check_sweep_allowed(const LinearCode& code, SweepMethod m, const Globals& g) {
    const double cost = sweep_cost(code, m);
    if (cost > g.budget)
        throw BudgetExceeded(to_string(m) + ": estimated " + std::to_string(cost) + " operations exceeds budget",
                             cost, g.budget);
    if (cost > kSlowThreshold && !g.slow)
        throw BudgetExceeded(to_string(m) + ": estimated " + std::to_string(cost) +
                                 " operations; rerun with --slow",
                             cost, kSlowThreshold);
}

bool sweep_allowed(const LinearCode& code, SweepMethod m, const Globals& g) {
    const double cost = sweep_cost(code, m);
    return cost <= g.budget && (g.slow || cost <= kSlowThreshold);
}

SweepOptions sweep_opts(const Globals& g) { return {thread_count(g.threads), g.budget}; }

std::optional<WeightEnumerator> reference_table(const Triple& t) {
    if (t.n == 2 && t.k == 2) return fm::w22_table(t.q);
    if (t.n == 3 && t.k == 3) return fm::w33_table(t.q);
    return std::nullopt;
}

std::string table_name(const Triple& t) { return t.n == 2 ? "W(2,2) table" : "W(3,3) table"; }

json form_stats(const AlternatingForm& sigma, const AlternatingForm& theta) {
    const int n = static_cast<int>(sigma.n()), q = sigma.field().q();
    const fm::Int qq = q;
    const fm::Int n1 = count_N1(sigma, theta);
    const fm::Int eta = count_common_isotropic_lines(sigma, theta);
    const fm::Int a = fm::ipow(qq, static_cast<unsigned>(2 * n - 3));
    const fm::Int b = (fm::ipow(qq, static_cast<unsigned>(2 * n)) - 1) * (a - 1) / ((qq - 1) * (qq - 1));
    auto eig = eigen_analysis(sigma, theta);
    json spaces = json::array();
    for (const auto& e : eig.pairs) spaces.push_back({{"eigenvalue", e.eigenvalue}, {"dim", e.space.dim()}});
    json j;
    j["N1"] = sgc::int_json(n1);
    j["N1_direct"] = count_N1_direct(sigma, theta);
    j["eta"] = sgc::int_json(eta);
    j["weight"] = sgc::int_json(fm::length(n, 2, q) - eta);
    j["eigenspaces"] = spaces;
    j["diagonalizable"] = eig.diagonalizable;
    j["identity_residual"] = sgc::int_json((qq + 1) * eta - a * n1 - b);
    return j;
}

int cmd_params(const Triple& t, const Globals&) {
    auto p = fm::code_params(t.n, t.k, t.q);
    sgc::RunReport rep("params");
    rep.parameters() = triple_json(t);
    rep.results()["N"] = sgc::int_json(p.N);
    rep.results()["K"] = sgc::int_json(p.K);
    if (p.d_min)
        rep.results()["d_min"] = sgc::int_json(*p.d_min);
    else
        rep.results()["d_min"] = "unproved";
    log("W(" + std::to_string(t.n) + "," + std::to_string(t.k) + ") over GF(" + std::to_string(t.q) +
        "): N=" + fm::to_string(p.N) + " K=" + fm::to_string(p.K));
    rep.write(std::cout);
    return kPass;
}

int cmd_build(const Triple& t, const Globals& g, const std::string& points_path) {
    fm::validate_nkq(t.n, t.k, t.q);
    auto code = build_code(t.n, t.k, field_for(t.q), g.budget);
    auto p = fm::code_params(t.n, t.k, t.q);
    const bool ok = code.N == fm::to_u64(p.N) && code.K == fm::to_u64(p.K) && rank(code.generator) == code.K;
    if (!g.output.empty()) {
        std::ofstream out(g.output);
        if (!out) throw std::runtime_error("cannot write " + g.output);
        write_generator(out, code);
        log("wrote generator to " + g.output);
    }
    if (!points_path.empty()) {
        std::ofstream out(points_path);
        if (!out) throw std::runtime_error("cannot write " + points_path);
        write_point_list(out, static_cast<std::size_t>(t.n), static_cast<std::size_t>(t.k), code.points);
        log("wrote point list to " + points_path);
    }
    sgc::RunReport rep("build");
    rep.parameters() = triple_json(t);
    if (!g.output.empty()) rep.parameters()["output"] = g.output;
    rep.results() = {{"N", code.N}, {"K", code.K}, {"expected_N", sgc::int_json(p.N)},
                     {"expected_K", sgc::int_json(p.K)}, {"rank_check", ok ? "MATCH" : "MISMATCH"}};
    rep.write(std::cout);
    return ok ? kPass : kMismatch;
}

int cmd_weights(const Triple& t, const Globals& g) {
    fm::validate_nkq(t.n, t.k, t.q);
    const auto method = parse_sweep_method(g.method);
    auto code = build_code(t.n, t.k, field_for(t.q), g.budget);
    check_sweep_allowed(code, method, g);
    log("sweeping [" + std::to_string(code.N) + "," + std::to_string(code.K) + "] code by " + to_string(method));

    auto t0 = std::chrono::steady_clock::now();
    auto we = weight_enumerator(code, method, sweep_opts(g));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto dmin = we.min_nonzero_weight();

    json wj;
    wj["n"] = t.n;
    wj["k"] = t.k;
    wj["q"] = t.q;
    wj["N"] = code.N;
    wj["K"] = code.K;
    wj["distribution"] = sgc::distribution_json(we);
    wj["d_min"] = dmin ? json(*dmin) : json(nullptr);
    wj["method"] = to_string(method);
    wj["seconds"] = secs;
    if (!g.output.empty()) {
        std::ofstream out(g.output);
        if (!out) throw std::runtime_error("cannot write " + g.output);
        out << wj.dump(2) << '\n';
        log("wrote weights to " + g.output);
    }

    sgc::RunReport rep("weights");
    rep.parameters() = triple_json(t);
    rep.parameters()["method"] = to_string(method);
    rep.parameters()["threads"] = thread_count(g.threads);
    wj.erase("seconds");  // keeps the report deterministic
    rep.results()["weights"] = wj;

    bool ok = true;
    if (auto table = reference_table(t)) {
        ok = we == *table;
        rep.results()["reference"] = table_name(t);
        rep.results()["verdict"] = ok ? "MATCH" : "MISMATCH";
    } else if (auto p = fm::code_params(t.n, t.k, t.q); p.d_min) {
        ok = dmin && fm::Int(*dmin) == *p.d_min;
        rep.results()["reference"] = "d_min formula";
        rep.results()["expected_d_min"] = sgc::int_json(*p.d_min);
        rep.results()["verdict"] = ok ? "MATCH" : "MISMATCH";
    } else {
        rep.results()["verdict"] = "NO_REFERENCE";
    }
    log("verdict: " + rep.results()["verdict"].get<std::string>());
    rep.write(std::cout);
    return ok ? kPass : kMismatch;
}

int cmd_eta(int n, int q, const Globals& g, const std::string& theta_src, int trials) {
    if (n < 2) throw std::invalid_argument("eta needs n >= 2");
    const auto& f = field_for(q);
    auto sigma = standard_symplectic(static_cast<std::size_t>(n), f);
    sgc::RunReport rep("eta");
    rep.parameters() = {{"n", n}, {"q", q}, {"theta", theta_src}};
    std::vector<AlternatingForm> thetas;
    if (theta_src == "worst") {
        thetas.push_back(worst_case_theta(sigma));
    } else if (theta_src == "random") {
        if (trials < 1) throw std::invalid_argument("--trials must be positive");
        rep.parameters()["trials"] = trials;
        rep.set_seed(g.seed);
        std::mt19937_64 rng(g.seed);
        for (int i = 0; i < trials; ++i) thetas.push_back(random_theta(sigma, rng));
    } else {
        std::ifstream in(theta_src);
        if (!in) throw std::runtime_error("cannot read " + theta_src);
        Matrix gram = read_matrix(in);
        if (gram.field().q() != q) throw std::runtime_error("form is over GF(" + std::to_string(gram.field().q()) + ")");
        if (gram.rows() != 2 * static_cast<std::size_t>(n)) throw std::runtime_error("form has the wrong size");
        thetas.emplace_back(std::move(gram));
    }

    json forms = json::array();
    bool ok = true;
    for (const auto& th : thetas) {
        auto s = form_stats(sigma, th);
        ok &= s["identity_residual"] == 0 && s["N1"] == s["N1_direct"];
        forms.push_back(std::move(s));
    }
    rep.results()["N"] = sgc::int_json(fm::length(n, 2, q));
    rep.results()["eta_max"] = sgc::int_json(fm::eta_max(n, q));
    rep.results()["forms"] = forms;
    rep.results()["verdict"] = ok ? "MATCH" : "MISMATCH";
    log(std::to_string(thetas.size()) + " form(s); identity residuals " + (ok ? "all zero" : "NONZERO"));
    rep.write(std::cout);
    return ok ? kPass : kMismatch;
}

struct CheckList {
    json items = json::array();
    bool ok = true;

    void add(const std::string& name, bool pass, json detail = nullptr) {
        items.push_back({{"check", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}});
        ok &= pass;
        log(std::string(pass ? "pass  " : "FAIL  ") + name);
    }
    void skip(const std::string& name, const std::string& why) {
        items.push_back({{"check", name}, {"status", "skipped"}, {"detail", why}});
        log("skip  " + name + " (" + why + ")");
    }
};

int cmd_verify(const Triple& t, const Globals& g, int trials) {
    fm::validate_nkq(t.n, t.k, t.q);
    const auto& f = field_for(t.q);
    const auto p = fm::code_params(t.n, t.k, t.q);
    CheckList checks;

    const auto count = count_isotropic(static_cast<std::size_t>(t.n), static_cast<std::size_t>(t.k), f);
    checks.add("isotropic count equals N", fm::Int(count) == p.N, {{"counted", count}, {"expected", sgc::int_json(p.N)}});

    auto code = build_code(t.n, t.k, f, g.budget);
    checks.add("generator rank equals K", fm::Int(rank(code.points)) == p.K && code.K == rank(code.points),
               {{"rank", code.K}, {"expected", sgc::int_json(p.K)}});

    std::optional<std::uint64_t> dmin;
    if (sweep_allowed(code, SweepMethod::codeword, g)) {
        auto we = weight_enumerator(code, SweepMethod::codeword, sweep_opts(g));
        dmin = we.min_nonzero_weight();
        if (p.d_min)
            checks.add("minimum distance", dmin && fm::Int(*dmin) == *p.d_min,
                       {{"computed", dmin ? json(*dmin) : json(nullptr)}, {"expected", sgc::int_json(*p.d_min)}});
        else
            checks.skip("minimum distance", "no closed form; computed " + std::to_string(dmin.value_or(0)));
        if (auto table = reference_table(t)) checks.add(table_name(t), we == *table);
    } else {
        checks.skip("minimum distance", "sweep needs --slow or a larger budget");
    }

    if (t.k == 2 && t.n >= 2) {
        auto sigma = standard_symplectic(static_cast<std::size_t>(t.n), f);
        std::mt19937_64 rng(g.seed);
        int bad = 0;
        for (int i = 0; i < trials; ++i) bad += form_stats(sigma, random_theta(sigma, rng))["identity_residual"] != 0;
        checks.add("eta identity over random forms", bad == 0, {{"trials", trials}, {"nonzero", bad}});

        auto worst = worst_case_theta(sigma);
        auto cw = codeword_from_form(code, worst);
        checks.add("worst-case form weight", fm::Int(cw.weight) == fm::dmin_line(t.n, t.q) && in_code(code, cw.word),
                   {{"weight", cw.weight}, {"expected", sgc::int_json(fm::dmin_line(t.n, t.q))}});
        checks.add("worst-case N1", fm::Int(count_N1(sigma, worst)) == fm::n1_max(t.n, t.q));
        if (dmin) checks.add("Grassmann bound below d_min", fm::grassmann_bound_line(t.n, t.q).value <= fm::Int(*dmin));
    }

    sgc::RunReport rep("verify");
    rep.parameters() = triple_json(t);
    if (t.k == 2) {
        rep.parameters()["trials"] = trials;
        rep.set_seed(g.seed);
    }
    rep.results()["checks"] = checks.items;
    rep.results()["verdict"] = checks.ok ? "PASS" : "FAIL";
    rep.write(std::cout);
    return checks.ok ? kPass : kMismatch;
}

int cmd_bounds(const Triple& t, const Globals& g) {
    fm::validate_nkq(t.n, t.k, t.q);
    const auto p = fm::code_params(t.n, t.k, t.q);
    sgc::RunReport rep("bounds");
    rep.parameters() = triple_json(t);
    auto& r = rep.results();

    std::optional<fm::Int> d;
    if (p.d_min) {
        d = p.d_min;
        r["d_min"] = sgc::int_json(*d);
        r["d_min_source"] = "formula";
    } else {
        auto code = build_code(t.n, t.k, field_for(t.q), g.budget);
        if (sweep_allowed(code, SweepMethod::codeword, g)) {
            d = min_distance(code, std::nullopt, sweep_opts(g));
            r["d_min"] = sgc::int_json(*d);
            r["d_min_source"] = "computed";
        } else {
            r["d_min"] = nullptr;
            r["d_min_source"] = "unknown";
        }
    }

    bool ok = true;
    if (t.k == 2 && t.n >= 2) {
        auto b = fm::grassmann_bound_line(t.n, t.q);
        r["grassmann_bound"] = {{"value", sgc::int_json(b.value)},         {"numerator", sgc::int_json(b.numerator)},
                                {"denominator", sgc::int_json(b.denominator)}, {"integral", b.integral},
                                {"via_gaussian", sgc::int_json(b.via_gaussian)}};
        if (d) {
            bool below = b.value <= *d;
            r["grassmann_bound_holds"] = below;
            ok &= below;
        }
    }
    if (t.k == t.n) {
        auto pz = fm::pz_upper(t.n, t.q);
        r["pz_upper"] = sgc::int_json(pz);
        if (d) {
            r["pz_upper_holds"] = *d <= pz;
            r["pz_sharp"] = *d == pz;
            ok &= *d <= pz;
        }
    }
    r["verdict"] = ok ? "PASS" : "FAIL";
    rep.write(std::cout);
    return ok ? kPass : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic Grassmann code tool"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--method", g.method, "Weight sweep: codeword or hyperplane");
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
    app.add_option("--seed", g.seed, "Seed for random forms");
    app.add_option("--budget", g.budget, "Refuse work estimated above this many operations");
    app.add_option("--output", g.output, "Output file");
    app.add_flag("--slow", g.slow, "Allow long sweeps");

    Triple t;
    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("n", t.n)->required();
        sub->add_option("k", t.k)->required();
        sub->add_option("q", t.q)->required();
    };
    auto* params = app.add_subcommand("params", "Code parameters from closed forms");
    add_triple(params);
    auto* build = app.add_subcommand("build", "Build the generator matrix");
    add_triple(build);
    std::string points_path;
    build->add_option("--points", points_path, "Write the Plücker point list here");
    auto* weights = app.add_subcommand("weights", "Full weight enumerator");
    add_triple(weights);
    auto* eta = app.add_subcommand("eta", "Common isotropic lines of sigma and a second form");
    eta->add_option("n", t.n)->required();
    eta->add_option("q", t.q)->required();
    std::string theta_src = "worst";
    int trials = 0;
    eta->add_option("--theta", theta_src, "worst, random, or a matrix file");
    eta->add_option("--trials", trials, "Random forms to draw")->default_val(10);
    auto* verify = app.add_subcommand("verify", "Run every applicable check");
    add_triple(verify);
    verify->add_option("--trials", trials, "Random forms for the identity check")->default_val(20);
    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on d_min");
    add_triple(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*params) return cmd_params(t, g);
        if (*build) return cmd_build(t, g, points_path);
        if (*weights) return cmd_weights(t, g);
        if (*eta) return cmd_eta(t.n, t.q, g, theta_src, trials);
        if (*verify) return cmd_verify(t, g, trials);
        if (*bounds) return cmd_bounds(t, g);
    } catch (const BudgetExceeded& e) {
        log(std::string("refused: ") + e.what());
        json j{{"error", "budget"}, {"message", e.what()}, {"estimate", e.estimate()}, {"limit", e.budget()}};
        std::cout << j.dump(2) << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        log(std::string("error: ") + e.what());
        return kUsage;
    }
    return kUsage;
}
