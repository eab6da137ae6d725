// Command-line front end. Every subcommand prints one self-describing JSON
// document (series also speaks CSV); exact integers and rationals are
// rendered as decimal strings, never as floats.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "incrun/errors.hpp"
#include "incrun/exact.hpp"
#include "incrun/markov.hpp"
#include "incrun/real.hpp"
#include "incrun/rng.hpp"
#include "incrun/series.hpp"
#include "incrun/simulate.hpp"
#include "incrun/verify.hpp"
#include "incrun/version.hpp"

namespace {

using incrun::BigInt;
using incrun::Rational;
using incrun::Real;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

long default_precision() {
    if (const char* env = std::getenv("INCRUN_PRECISION")) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && bits >= Real::kMinPrecision) {
            return bits;
        }
        std::cerr << "warning: ignoring INCRUN_PRECISION=\"" << env
                  << "\" (want an integer >= " << Real::kMinPrecision << ")\n";
    }
    return Real::kDefaultPrecision;
}

class OutputTimer {
public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json make_document(const std::string& command, json inputs, json results, json metadata,
                   const OutputTimer& timer) {
    metadata["tool_version"] = incrun::kVersion;
    metadata["wall_ms"] = timer.elapsed_ms();
    json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    doc["metadata"] = std::move(metadata);
    return doc;
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

json rational_json(const Rational& q) {
    return json{{"numerator", q.numerator().get_str()},
                {"denominator", q.denominator().get_str()}};
}

json gcd_report_json(const incrun::GcdReport& r) {
    json j;
    j["n"] = r.n;
    j["a_n"] = r.a_n.get_str();
    j["gcd_actual"] = r.gcd_actual.get_str();
    j["gcd_predicted"] = r.gcd_predicted.get_str();
    j["residue_class_mod12"] = r.residue_class_mod12;
    j["nu2_a"] = r.nu2_a ? json(*r.nu2_a) : json(nullptr);
    j["e3_is_integer"] = r.e3_is_integer;
    j["an_mod_n3_ok"] = r.an_mod_n3_ok;
    return j;
}

int run_expect(long n, int k, long precision) {
    OutputTimer timer;
    json results;
    if (k == 2) {
        const Rational value = incrun::e2(n);
        results["expectation"] = rational_json(value);
        results["raw_numerator"] = value.numerator().get_str();
        results["raw_denominator"] = value.denominator().get_str();
        results["gcd_report"] = nullptr;
        results["approx"] = Real::from_rational(value, precision).to_string();
    } else {
        const incrun::E3Expectation e = incrun::e3_expectation(n);
        results["expectation"] = rational_json(e.value);
        results["raw_numerator"] = e.raw_num.get_str();
        results["raw_denominator"] = e.raw_den.get_str();
        results["gcd_report"] = gcd_report_json(incrun::gcd_report(n));
        results["approx"] = Real::from_rational(e.value, precision).to_string();
    }
    emit(make_document("expect", json{{"n", n}, {"k", k}}, std::move(results),
                       json{{"precision_bits", precision}}, timer));
    return kExitOk;
}

int run_verify(const std::string& theorem, long max_n, bool serial) {
    OutputTimer timer;
    const incrun::VerifyReport report = incrun::verify_theorem(
        incrun::theorem_from_name(theorem), max_n,
        serial ? incrun::Execution::serial : incrun::Execution::parallel);
    json results;
    results["status"] = report.passed() ? "PASS" : "FAIL";
    results["cases_checked"] = report.cases_checked;
    json ces = json::array();
    for (const auto& ce : report.counterexamples) {
        ces.push_back(json{{"n", ce.n}, {"detail", ce.detail}});
    }
    results["counterexamples"] = std::move(ces);
    results["first_counterexample"] =
        report.passed() ? json(nullptr)
                        : json{{"n", report.counterexamples.front().n},
                               {"detail", report.counterexamples.front().detail}};
    emit(make_document("verify", json{{"theorem", theorem}, {"max_n", max_n}},
                       std::move(results), json{}, timer));
    return report.passed() ? kExitOk : kExitDomainError;
}

int run_markov(long n) {
    OutputTimer timer;
    const incrun::MuVector mu = incrun::solve_expectations(n);
    json results;
    json entries = json::array();
    for (const Rational& m : mu) {
        entries.push_back(m.to_string());
    }
    results["mu"] = std::move(entries);
    results["e3"] = mu.back().to_string();
    results["det_mn"] = incrun::det_mn(n).get_str();
    results["det_h"] = incrun::det_h(n).get_str();
    emit(make_document("markov", json{{"n", n}}, std::move(results), json{}, timer));
    return kExitOk;
}

int run_simulate(const std::string& sides, int k, long long trials, std::uint64_t seed,
                 bool serial) {
    OutputTimer timer;
    incrun::SimConfig cfg;
    if (sides != "inf") {
        try {
            std::size_t pos = 0;
            cfg.sides = std::stol(sides, &pos);
            if (pos != sides.size()) {
                throw std::invalid_argument(sides);
            }
        } catch (const std::exception&) {
            std::cerr << "error: --sides must be a positive integer or \"inf\"\n";
            return kExitUsageError;
        }
    }
    cfg.run_length = k;
    cfg.trials = trials;
    cfg.seed = seed;
    const incrun::SimResult result = incrun::simulate(
        cfg, serial ? incrun::Execution::serial : incrun::Execution::parallel);
    json results;
    results["trials"] = result.trials;
    results["mean"] = result.mean;
    results["sample_variance"] = result.sample_variance;
    results["std_error"] = result.std_error;
    results["min_rolls"] = result.min_rolls;
    results["max_rolls"] = result.max_rolls;
    emit(make_document(
        "simulate",
        json{{"sides", sides}, {"k", k}, {"trials", trials}, {"seed", seed}},
        std::move(results), json{{"rng", incrun::kRngDescription}, {"seed", seed}}, timer));
    return kExitOk;
}

int run_limit(long precision) {
    OutputTimer timer;
    const incrun::LimitStats stats = incrun::limit_stats(precision);
    json results;
    results["mu"] = stats.mu.to_string();
    results["var"] = stats.var.to_string();
    results["fg_limit"] = stats.fg_limit.to_string();
    results["gh_limit"] = stats.gh_limit.to_string();
    results["pole_a"] = stats.pole_a.to_string();
    emit(make_document("limit", json{{"precision", precision}}, std::move(results),
                       json{{"precision_bits", precision}}, timer));
    return kExitOk;
}

int run_series(long max_n, const std::string& format) {
    OutputTimer timer;
    const incrun::PgfTable table = incrun::pgf(max_n);
    const std::vector<incrun::CoeffTriple> fgh = incrun::fgh_table(max_n);
    if (format == "csv") {
        std::cout << "n,f,g,h,p\n";
        for (std::size_t i = 0; i < fgh.size(); ++i) {
            std::cout << fgh[i].n << "," << fgh[i].f.get_str() << "," << fgh[i].g.get_str()
                      << "," << fgh[i].h.get_str() << "," << table.coeffs[i].p.to_string()
                      << "\n";
        }
        return kExitOk;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < fgh.size(); ++i) {
        rows.push_back(json{{"n", fgh[i].n},
                            {"f", fgh[i].f.get_str()},
                            {"g", fgh[i].g.get_str()},
                            {"h", fgh[i].h.get_str()},
                            {"p", table.coeffs[i].p.to_string()}});
    }
    json results;
    results["rows"] = std::move(rows);
    results["sum_p"] = table.sum_p.to_string();
    results["sum_np"] = table.sum_np.to_string();
    results["sum_n2p"] = table.sum_n2p.to_string();
    emit(make_document("series", json{{"max_n", max_n}, {"format", format}},
                       std::move(results), json{}, timer));
    return kExitOk;
}

int run_continuous(const std::string& x_text, long precision) {
    OutputTimer timer;
    Real x(precision);
    try {
        x = Real::from_string(x_text, precision);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: --x must be a decimal number\n";
        return kExitUsageError;
    }
    const Real value = incrun::e3_continuous(x, precision);
    json results;
    results["x"] = x.to_string();
    results["e3"] = value.to_string();
    emit(make_document("continuous", json{{"x", x_text}, {"precision", precision}},
                       std::move(results), json{{"precision_bits", precision}}, timer));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and simulated roll counts until an increasing run, plus the limiting-case series"};
    app.require_subcommand(1);
    const long precision_default = default_precision();

    auto* expect = app.add_subcommand("expect", "Exact expectation E_k(n) with gcd report");
    long expect_n = 0;
    int expect_k = 3;
    expect->add_option("--n", expect_n, "number of die faces")->required();
    expect->add_option("--k", expect_k, "run length (2 or 3)")->check(CLI::IsMember({2, 3}));

    auto* verify = app.add_subcommand("verify", "Sweep one theorem over n and report counterexamples");
    std::string verify_theorem;
    long verify_max_n = 50;
    bool verify_serial = false;
    verify->add_option("--theorem", verify_theorem, "gcd|residue|nu2|integrality|det|oracle|singlerec")
        ->required()
        ->check(CLI::IsMember({"gcd", "residue", "nu2", "integrality", "det", "oracle", "singlerec"}));
    verify->add_option("--max-n", verify_max_n, "largest n to check (default 50)");
    verify->add_flag("--serial", verify_serial, "run the sweep on one thread");

    auto* markov = app.add_subcommand("markov", "Exact mu vector and determinants for one n");
    long markov_n = 0;
    markov->add_option("--n", markov_n, "number of die faces")->required();

    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo roll counts");
    std::string sim_sides = "6";
    int sim_k = 3;
    long long sim_trials = 0;
    std::uint64_t sim_seed = 0;
    bool sim_serial = false;
    simulate->add_option("--sides", sim_sides, "die faces, or \"inf\" for continuous mode")->required();
    simulate->add_option("--k", sim_k, "run length (2 or 3)")->check(CLI::IsMember({2, 3}));
    simulate->add_option("--trials", sim_trials, "number of episodes")->required();
    simulate->add_option("--seed", sim_seed, "64-bit seed")->required();
    simulate->add_flag("--serial", sim_serial, "run trials on one thread");

    auto* limit = app.add_subcommand("limit", "Limiting mu, Var, ratio limits and the pole");
    long limit_precision = precision_default;
    limit->add_option("--precision", limit_precision, "working precision in bits")
        ->check(CLI::Range(Real::kMinPrecision, 1L << 20));

    auto* series = app.add_subcommand("series", "f/g/h and p(n) tables");
    long series_max_n = 0;
    std::string series_format = "json";
    series->add_option("--max-n", series_max_n, "largest n in the table")->required();
    series->add_option("--format", series_format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* continuous = app.add_subcommand("continuous", "Continuous-argument expectation E3(x)");
    std::string continuous_x;
    long continuous_precision = precision_default;
    continuous->add_option("--x", continuous_x, "evaluation point (decimal, >= 3)")->required();
    continuous->add_option("--precision", continuous_precision, "working precision in bits")
        ->check(CLI::Range(Real::kMinPrecision, 1L << 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        if (expect->parsed()) {
            return run_expect(expect_n, expect_k, precision_default);
        }
        if (verify->parsed()) {
            return run_verify(verify_theorem, verify_max_n, verify_serial);
        }
        if (markov->parsed()) {
            return run_markov(markov_n);
        }
        if (simulate->parsed()) {
            return run_simulate(sim_sides, sim_k, sim_trials, sim_seed, sim_serial);
        }
        if (limit->parsed()) {
            return run_limit(limit_precision);
        }
        if (series->parsed()) {
            return run_series(series_max_n, series_format);
        }
        if (continuous->parsed()) {
            return run_continuous(continuous_x, continuous_precision);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const incrun::PoleProximityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsageError;
}
