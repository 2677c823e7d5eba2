#include "hqc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>

#include "hqc/fock.hpp"
#include "hqc/hurwitz.hpp"
#include "hqc/quantum.hpp"
#include "hqc/spectral.hpp"

namespace hqc::cli {

using nlohmann::json;

namespace {

json expoly_to_json(const ExpPoly& e) {
    json terms = json::array();
    for (const auto& t : e.terms()) {
        json exponent = json::object();
        for (const auto& [deg, c] : t.exponent.coefficients()) exponent[std::to_string(deg)] = to_string(c);
        terms.push_back({{"coefficient", to_string(t.coefficient)}, {"lambda_power", t.lambda_power}, {"exponent", exponent}});
    }
    return terms;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Runs f(i) for i in [0, n) on `jobs` threads; results land in slot i.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F f) {
    std::vector<T> results(n);
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    results[i] = f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

void emit(const std::vector<Record>& records, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        out << csv_header() << '\n';
        for (const auto& rec : records) out << to_csv(rec) << '\n';
    } else {
        for (const auto& rec : records) out << to_json(rec).dump() << '\n';
    }
}

std::vector<fock::MayaState> charge_zero_states(int max_energy) {
    std::vector<fock::MayaState> states;
    for (int d = 0; d <= max_energy; ++d)
        for (const auto& lambda : partitions_of(d)) states.push_back(fock::MayaState::from_partition(lambda));
    return states;
}

CheckResult series_result(const std::string& name, int r, int q, const spectral::SeriesCheck& c) {
    CheckResult out{name, r, q, c.passed, json::object()};
    if (!c.passed) out.detail = {{"exponent", *c.first_failure}, {"residual", to_string(c.residual)}};
    return out;
}

CheckResult check_spectral(const RunConfig& cfg) {
    const auto family = spectral::SpectralFamily::make(cfg.r, cfg.q, cfg.order);
    CheckResult res = series_result("spectral", cfg.r, cfg.q, spectral::verify_spectral_equation(family));
    if (!res.passed) return res;
    // omega01 up to the largest n whose top degree fits the order
    const int n_max = std::max(0, (cfg.order / cfg.q - 1) / cfg.r);
    res = series_result("spectral", cfg.r, cfg.q, spectral::omega01_match(family, std::min(n_max, 4)));
    if (!res.passed) res.detail["stage"] = "omega01";
    return res;
}

CheckResult check_quantum(const RunConfig& cfg) {
    CheckResult res{"quantum", cfg.r, cfg.q, true, json::object()};
    for (bool raw : {false, true}) {
        const auto a = quantum::verify_annihilation(cfg.r, cfg.q, cfg.order, raw);
        if (!a.passed) {
            res.passed = false;
            res.detail = {{"form", raw ? "raw" : "simplified"},
                          {"exponent", to_string(*a.exponent)},
                          {"residual", expoly_to_json(a.residual)}};
            return res;
        }
    }
    std::vector<HalfInt> exponents;
    for (long long t = 0; t <= 30; ++t) exponents.push_back(half(t));
    if (auto e = quantum::first_disagreement(quantum::quantum_operator(cfg.r, cfg.q),
                                             quantum::quantum_operator_raw(cfg.r, cfg.q), exponents)) {
        res.passed = false;
        res.detail = {{"form", "raw vs simplified"}, {"exponent", to_string(*e)}};
    }
    return res;
}

CheckResult check_recurrence(const RunConfig& cfg) {
    const int d_max = std::max(1, std::min(20, cfg.order / cfg.q));
    const auto c = quantum::verify_recurrence(cfg.r, cfg.q, d_max);
    CheckResult res{"recurrence", cfg.r, cfg.q, c.passed, json::object()};
    if (!c.passed) res.detail = {{"step", *c.first_failure}};
    return res;
}

CheckResult check_semiclassical(const RunConfig& cfg) {
    return series_result("semiclassical", cfg.r, cfg.q,
                         quantum::semiclassical_check(cfg.r, cfg.q, cfg.order, cfg.raw));
}

CheckResult check_commutators(const RunConfig& cfg) {
    CheckResult res{"commutators", cfg.r, cfg.q, true, json::object()};
    const auto states = charge_zero_states(std::min(cfg.max_degree, 6));
    constexpr int kZOrder = 5;
    for (int k = -3; k <= 3; ++k)
        for (int l = -3; l <= 3; ++l) {
            const auto report = fock::verify_commutator(k, l, kZOrder, states);
            if (!report.passed) {
                const auto& f = *report.failure;
                const auto lambda = f.state.to_partition();
                res.passed = false;
                res.detail = {{"k", k},
                              {"l", l},
                              {"state", lambda ? to_string(*lambda) : std::string("?")},
                              {"w_degree", f.w_degree},
                              {"z_degree", f.z_degree}};
                return res;
            }
        }
    if (!fock::verify_vacuum_e0(10)) {
        res.passed = false;
        res.detail = {{"stage", "vacuum E_0"}};
    }
    return res;
}

CheckResult check_oracle(const RunConfig& cfg) {
    CheckResult res{"oracle", cfg.r, cfg.q, true, json::object()};
    const auto log_z = hurwitz::log_z_oracle(cfg.max_degree, cfg.max_m, cfg.r, cfg.q);
    for (int d = cfg.q; d <= cfg.max_degree; d += cfg.q)
        for (const auto& mu : partitions_of(d))
            for (int m = 0; m <= cfg.max_m; ++m) {
                if (!hurwitz::genus_for(m, mu, cfg.r, cfg.q)) continue;
                const Rational a = hurwitz::connected_vev(m, mu, cfg.r, cfg.q);
                const Rational b = hurwitz::connected_vev_fock(m, mu, cfg.r, cfg.q);
                const Rational c = hurwitz::log_z_connected(log_z, m, mu);
                if (a != b || a != c) {
                    res.passed = false;
                    res.detail = {{"mu", to_string(mu)},
                                  {"m", m},
                                  {"character", to_string(a)},
                                  {"fock", to_string(b)},
                                  {"log_z", to_string(c)}};
                    return res;
                }
            }
    return res;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format: " + s);
}

}  // namespace

json to_json(const Record& rec) {
    return {{"r", rec.r}, {"q", rec.q}, {"g", rec.g}, {"mu", to_string(rec.mu)}, {"m", rec.m}, {"value", to_string(rec.value)}};
}

Record record_from_json(const json& j) {
    try {
        Record rec;
        rec.r = j.at("r").get<int>();
        rec.q = j.at("q").get<int>();
        rec.g = j.at("g").get<int>();
        rec.mu = parse_partition(j.at("mu").get<std::string>());
        rec.m = j.at("m").get<int>();
        rec.value = parse_rational(j.at("value").get<std::string>());
        return rec;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

std::string csv_header() { return "r,q,g,mu,m,value"; }

std::string to_csv(const Record& rec) {
    std::ostringstream os;
    os << rec.r << ',' << rec.q << ',' << rec.g << ',' << csv_quote(to_string(rec.mu)) << ',' << rec.m << ','
       << to_string(rec.value);
    return os.str();
}

json to_json(const CheckResult& c) {
    json j = {{"check", c.check}, {"r", c.r}, {"q", c.q}, {"passed", c.passed}};
    if (!c.passed) j["detail"] = c.detail;
    return j;
}

std::vector<Record> table_records(int r, int q, int max_genus, int max_size, int jobs) {
    if (r < 1 || q < 1) throw hurwitz::ParameterError("r and q must be at least 1");
    std::vector<hurwitz::HurwitzParams> requests;
    for (int d = q; d <= max_size; d += q)
        for (const auto& mu : partitions_of(d))
            for (int g = 0; g <= max_genus; ++g) {
                const int numerator = 2 * g - 2 + mu.length() + d / q;
                if (numerator < 0 || numerator % r != 0) continue;
                requests.push_back(hurwitz::HurwitzParams::make(r, q, g, mu));
            }
    // (|mu|, g, mu in reverse lexicographic order)
    std::stable_sort(requests.begin(), requests.end(), [](const auto& a, const auto& b) {
        if (a.mu.size() != b.mu.size()) return a.mu.size() < b.mu.size();
        if (a.g != b.g) return a.g < b.g;
        return a.mu > b.mu;
    });
    return parallel_map<Record>(requests.size(), jobs, [&](std::size_t i) {
        const auto& p = requests[i];
        return Record{p.r, p.q, p.g, p.mu, p.m, hurwitz::connected_hurwitz(p).value};
    });
}

std::vector<CheckResult> run_checks(const RunConfig& cfg) {
    static const std::vector<std::string> kAll = {"spectral", "quantum", "recurrence", "semiclassical", "commutators", "oracle"};
    std::vector<std::string> names;
    if (cfg.check == "all")
        names = kAll;
    else if (std::find(kAll.begin(), kAll.end(), cfg.check) != kAll.end())
        names = {cfg.check};
    else
        throw std::invalid_argument("unknown check: " + cfg.check);

    return parallel_map<CheckResult>(names.size(), cfg.jobs, [&](std::size_t i) {
        const std::string& n = names[i];
        if (n == "spectral") return check_spectral(cfg);
        if (n == "quantum") return check_quantum(cfg);
        if (n == "recurrence") return check_recurrence(cfg);
        if (n == "semiclassical") return check_semiclassical(cfg);
        if (n == "commutators") return check_commutators(cfg);
        return check_oracle(cfg);
    });
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto params = hurwitz::HurwitzParams::make(cfg.r, cfg.q, cfg.genus, parse_partition(cfg.mu));
    const auto value = hurwitz::connected_hurwitz(params);
    emit({Record{params.r, params.q, params.g, params.mu, params.m, value.value}}, cfg.out, out);
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    emit(table_records(cfg.r, cfg.q, cfg.genus, cfg.max_degree, cfg.jobs), cfg.out, out);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    bool all_passed = true;
    const auto results = run_checks(cfg);
    if (cfg.out == OutputFormat::csv) out << "check,r,q,passed,detail\n";
    for (const auto& c : results) {
        all_passed = all_passed && c.passed;
        if (cfg.out == OutputFormat::csv)
            out << c.check << ',' << c.r << ',' << c.q << ',' << (c.passed ? "pass" : "fail") << ','
                << (c.passed ? "" : csv_quote(c.detail.dump())) << '\n';
        else
            out << to_json(c).dump() << '\n';
    }
    return all_passed ? kExitOk : kExitVerification;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hurwitz numbers, spectral curves and quantum curves"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "json";
    std::string positional_check;

    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "completed-cycle parameter r >= 1")->capture_default_str();
        sub->add_option("--q", cfg.q, "profile over infinity (q,...,q), q >= 1")->capture_default_str();
        sub->add_option("--out", format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "one connected Hurwitz number");
    add_family(compute);
    compute->add_option("--genus", cfg.genus, "genus g")->capture_default_str();
    compute->add_option("--mu", cfg.mu, "ramification profile over zero, e.g. 2,1")->required();

    auto* table = app.add_subcommand("table", "all connected Hurwitz numbers with |mu| <= max-degree");
    add_family(table);
    table->add_option("--genus", cfg.genus, "maximal genus")->capture_default_str();
    table->add_option("--max-degree", cfg.max_degree, "bound on |mu|")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_family(verify);
    verify->add_option("--check", cfg.check, "spectral|quantum|recurrence|semiclassical|commutators|oracle|all")
        ->capture_default_str();
    verify->add_option("check_name", positional_check, "same as --check");
    verify->add_option("--order", cfg.order, "series truncation order N")->capture_default_str();
    verify->add_option("--max-degree", cfg.max_degree, "oracle bound on |mu|")->capture_default_str();
    verify->add_option("--max-m", cfg.max_m, "oracle bound on the number of completed cycles")->capture_default_str();
    verify->add_flag("--raw", cfg.raw, "use the ordered operator form for the semiclassical check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        cfg.out = parse_format(format);
        if (!positional_check.empty()) cfg.check = positional_check;
        if (cfg.max_degree < 0 || cfg.max_m < 0) throw std::invalid_argument("bounds must be nonnegative");
        if (*compute) {
            cfg.command = Command::compute;
            return cmd_compute(cfg, out, err);
        }
        if (*table) {
            cfg.command = Command::table;
            return cmd_table(cfg, out, err);
        }
        cfg.command = Command::verify;
        return cmd_verify(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace hqc::cli
