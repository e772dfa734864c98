// phik: command-line front end for the generalized Euler function library.
//
// Exit codes: 0 success, 1 identity failure (witnesses printed),
// 2 usage or domain error, 3 budget refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phik/io.hpp"
#include "phik/phik.hpp"

namespace {

using namespace phik;
using io::json;

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2, kBudget = 3 };

enum class Format { plain, json, csv };

struct RunConfig {
    unsigned k = 2;
    u64 n = 0;
    u64 n_min = 1;
    u64 n_max = 0;
    u64 m = 0;
    u64 d = 1;
    u64 delta = 1;
    unsigned k_min = 1;
    unsigned k_max = 0;
    u64 x = 0;
    std::vector<u64> grid;
    std::string f_spec = "id";
    std::string method = "direct";
    std::string nk_method = "closed";
    u64 prime_bound = 1'000'000;
    u64 budget = kDefaultOracleBudget;
    Format format = Format::plain;
    unsigned threads = 1;
    std::string output;
};

unsigned default_threads() {
    if (const char* env = std::getenv("PHIK_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw DomainError("cannot write to '" + cfg.output + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

// n values selected by --n or --n-min/--n-max.
std::vector<u64> n_values(const RunConfig& cfg) {
    if (cfg.n != 0) return {cfg.n};
    if (cfg.n_max == 0) throw DomainError("give --n or --n-max");
    if (cfg.n_min == 0 || cfg.n_min > cfg.n_max) throw DomainError("empty n range");
    std::vector<u64> out;
    for (u64 n = cfg.n_min; n <= cfg.n_max; ++n) out.push_back(n);
    return out;
}

struct Row {
    u64 n;
    std::string value;
};

std::string render_values(const RunConfig& cfg, const std::string& what, const std::vector<Row>& rows,
                          const json& extra) {
    std::ostringstream out;
    switch (cfg.format) {
        case Format::plain:
            if (rows.size() == 1) {
                out << rows[0].value << '\n';
            } else {
                for (const auto& r : rows) out << r.n << ' ' << r.value << '\n';
            }
            break;
        case Format::csv:
            out << "n,value\n";
            for (const auto& r : rows) out << r.n << ',' << r.value << '\n';
            break;
        case Format::json: {
            json items = json::array();
            for (const auto& r : rows) {
                json item = extra;
                item["function"] = what;
                item["k"] = std::to_string(cfg.k);
                item["n"] = std::to_string(r.n);
                item["value"] = r.value;
                items.push_back(std::move(item));
            }
            out << (items.size() == 1 ? items[0] : items).dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

int run_eval(const RunConfig& cfg, const std::string& what) {
    std::vector<Row> rows;
    json extra = json::object();
    for (u64 n : n_values(cfg)) {
        BigInt value;
        if (what == "phi-k") {
            value = phi_k(cfg.k, n);
        } else if (what == "phi-k-nm") {
            const u64 m = cfg.m == 0 ? n : cfg.m;
            extra["m"] = std::to_string(m);
            value = phi_k_nm({cfg.k, n, m});
        } else if (what == "g-k") {
            if (cfg.k == 0) throw DomainError("dimension k must be at least 1");
            value = g_k(cfg.k, n).value;
        } else if (what == "n-k") {
            extra["d"] = std::to_string(cfg.d);
            extra["delta"] = std::to_string(cfg.delta);
            const NkQuery q{cfg.k, n, cfg.d, cfg.delta};
            value = cfg.nk_method == "recursion" ? n_k_recursion(q) : n_k_closed(q);
        } else if (what == "jordan") {
            if (cfg.k == 0) throw DomainError("dimension k must be at least 1");
            value = jordan(cfg.k)(n);
        }
        rows.push_back({n, value.get_str()});
    }
    emit(cfg, render_values(cfg, what, rows, extra));
    return kOk;
}

int run_oracle(const RunConfig& cfg, const std::string& what) {
    std::vector<Row> rows;
    json extra = {{"budget", std::to_string(cfg.budget)}};
    for (u64 n : n_values(cfg)) {
        BigInt value;
        if (what == "phi-k") {
            const u64 m = cfg.m == 0 ? n : cfg.m;
            if (n % m != 0) extra["experimental"] = "m does not divide n";
            extra["m"] = std::to_string(m);
            value = phi_k_nm_oracle({cfg.k, n, m}, cfg.budget);
        } else if (what == "n-k") {
            extra["d"] = std::to_string(cfg.d);
            extra["delta"] = std::to_string(cfg.delta);
            value = n_k_oracle({cfg.k, n, cfg.d, cfg.delta}, cfg.budget);
        } else if (what == "menon-lhs") {
            const auto spec = io::parse_function_spec(cfg.f_spec);
            extra["f"] = spec.f.name();
            value = menon_lhs_oracle(cfg.k, n, spec.f, cfg.budget);
        }
        rows.push_back({n, value.get_str()});
    }
    emit(cfg, render_values(cfg, what, rows, extra));
    return kOk;
}

std::string render_report(const RunConfig& cfg, const IdentityReport& report) {
    std::ostringstream out;
    switch (cfg.format) {
        case Format::json:
            out << io::to_json(report).dump(2) << '\n';
            break;
        case Format::csv:
            out << "k,n,label,lhs,rhs,holds,note\n";
            for (const auto& i : report.instances)
                out << i.k << ',' << i.n << ',' << i.label << ',' << io::exact(i.lhs) << ','
                    << io::exact(i.rhs) << ',' << (i.holds() ? "true" : "false") << ',' << i.note << '\n';
            break;
        case Format::plain: {
            out << report.identity;
            if (!report.f_name.empty()) out << " f=" << report.f_name;
            out << " k=" << report.k_min << ".." << report.k_max << " n=" << report.n_min << ".."
                << report.n_max << ": " << report.instances.size() << " checks, "
                << report.failures.size() << " failures, " << report.skipped.size() << " skipped\n";
            for (std::size_t idx : report.failures) {
                const auto& i = report.instances[idx];
                out << "FAIL k=" << i.k << " n=" << i.n << " " << i.label << " lhs=" << io::exact(i.lhs)
                    << " rhs=" << io::exact(i.rhs);
                if (!i.note.empty()) out << " (" << i.note << ")";
                out << '\n';
            }
            for (const auto& s : report.skipped)
                out << "SKIPPED k=" << s.k << " n=" << s.n << ": " << s.reason << '\n';
            break;
        }
    }
    return out.str();
}

int run_verify(const RunConfig& cfg, const std::string& what) {
    SweepConfig sweep;
    sweep.k_min = cfg.k_min;
    sweep.k_max = cfg.k_max == 0 ? (what == "lemmas" ? 3 : cfg.k_min) : cfg.k_max;
    sweep.n_min = cfg.n_min;
    sweep.n_max = cfg.n_max;
    if (sweep.n_max == 0) throw DomainError("give --n-max");
    sweep.budget = cfg.budget;
    sweep.threads = cfg.threads;
    if (what == "menon") {
        sweep.identity = Identity::menon_general;
        auto spec = io::parse_function_spec(cfg.f_spec);
        sweep.f = spec.f;
        sweep.rhs_override = std::move(spec.rhs_override);
    } else if (what == "lemmas") {
        sweep.identity = Identity::lemmas;
    } else if (what == "nageswara-rao") {
        sweep.identity = Identity::nageswara_rao;
    } else {
        sweep.identity = Identity::sita_ramaiah;
    }
    const auto report = verify_identity_sweep(sweep);
    emit(cfg, render_report(cfg, report));
    if (!report.ok()) return kIdentityFailure;
    if (!report.complete()) {
        std::cerr << "phik: sweep incomplete, " << report.skipped.size() << " cells over budget\n";
        return kBudget;
    }
    return kOk;
}

int run_sum(const RunConfig& cfg) {
    if (cfg.x == 0) throw DomainError("--x must be at least 1");
    SumOptions options;
    options.threads = cfg.threads;
    std::vector<PartialSum> sums;
    if (cfg.method == "direct" || cfg.method == "both") sums.push_back(sum_phi_k_direct(cfg.k, cfg.x, options));
    if (cfg.method == "convolution" || cfg.method == "both")
        sums.push_back(sum_phi_k_convolution(cfg.k, cfg.x, options));
    if (sums.size() == 2 && sums[0].value != sums[1].value) {
        std::cerr << "phik: summation methods disagree (direct " << sums[0].value.get_str()
                  << ", convolution " << sums[1].value.get_str() << ")\n";
        return kIdentityFailure;
    }
    std::ostringstream out;
    switch (cfg.format) {
        case Format::plain:
            out << sums[0].value.get_str() << '\n';
            break;
        case Format::csv:
            out << "k,x,method,value\n";
            for (const auto& s : sums) out << s.k << ',' << s.x << ',' << to_string(s.method) << ',' << s.value.get_str() << '\n';
            break;
        case Format::json: {
            json j = io::to_json(sums[0]);
            if (sums.size() == 2) j["method"] = "both";
            out << j.dump(2) << '\n';
            break;
        }
    }
    emit(cfg, out.str());
    return kOk;
}

int run_constant(const RunConfig& cfg) {
    ConstantOptions options;
    options.threads = cfg.threads;
    const auto e = euler_constant(cfg.k, cfg.prime_bound, options);
    const json j = io::to_json(e, cfg.k, cfg.prime_bound);
    std::ostringstream out;
    switch (cfg.format) {
        case Format::json:
            out << j.dump(2) << '\n';
            break;
        case Format::csv:
            out << "k,prime_bound,lo,hi,width\n"
                << cfg.k << ',' << cfg.prime_bound << ',' << j["lo"].get<std::string>() << ','
                << j["hi"].get<std::string>() << ',' << j["width"].get<std::string>() << '\n';
            break;
        case Format::plain:
            out << "C_" << cfg.k << " in [" << j["lo"].get<std::string>() << ", "
                << j["hi"].get<std::string>() << "] width " << j["width"].get<std::string>() << '\n';
            break;
    }
    emit(cfg, out.str());
    return kOk;
}

int run_error_table(const RunConfig& cfg) {
    if (cfg.grid.empty()) throw DomainError("give --x with at least one cutoff");
    for (u64 x : cfg.grid)
        if (x == 0) throw DomainError("cutoffs must be positive");
    ConstantOptions copts;
    copts.threads = cfg.threads;
    const auto constant = euler_constant(cfg.k, cfg.prime_bound, copts);
    SumOptions sopts;
    sopts.threads = cfg.threads;
    const auto rows = error_term_monitor(cfg.k, cfg.grid, constant, sopts);
    if (cfg.format == Format::json) {
        json j = io::to_json(rows, cfg.k);
        j["constant"] = io::to_json(constant, cfg.k, cfg.prime_bound);
        emit(cfg, j.dump(2));
    } else {
        emit(cfg, io::error_table_csv(rows));
    }
    return kOk;
}

void add_format(CLI::App* app, RunConfig& cfg) {
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
    app->add_option("--format", cfg.format, "Output format: plain, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app->add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and verification for the k-dimensional generalized Euler function"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "phik 0.1.0");
    RunConfig cfg;
    cfg.threads = default_threads();
    std::function<int()> action;

    auto positive = CLI::Range(u64{1}, std::numeric_limits<u64>::max());
    auto add_k = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--k", cfg.k, "Dimension k >= 1");
        if (required) opt->required();
    };
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Modulus n")->check(positive);
        sub->add_option("--n-min", cfg.n_min, "First n of a range")->check(positive);
        sub->add_option("--n-max", cfg.n_max, "Last n of a range")->check(positive);
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads (default: $PHIK_THREADS or 1)")
            ->check(CLI::Range(1u, 1024u));
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Maximum tuples an exhaustive oracle may enumerate")
            ->check(positive);
    };

    // eval
    auto* eval = app.add_subcommand("eval", "Closed-form evaluators");
    eval->require_subcommand(1);
    for (const auto& [what, help] : std::vector<std::pair<std::string, std::string>>{
             {"phi-k", "phi_k(n)"},
             {"phi-k-nm", "phi_k(n, m) for m | n"},
             {"g-k", "g_k(n), the Dirichlet quotient of phi_k by id_k"},
             {"n-k", "N_k(n, d, delta) tuple count"},
             {"jordan", "Jordan totient J_k(n)"}}) {
        auto* sub = eval->add_subcommand(what, help);
        add_k(sub, true);
        add_n(sub);
        add_format(sub, cfg);
        if (what == "phi-k-nm") sub->add_option("--m", cfg.m, "Sum-coprimality modulus (default n)");
        if (what == "n-k") {
            sub->add_option("--d", cfg.d, "Divisor with sum == 1 (mod d)")->check(positive);
            sub->add_option("--delta", cfg.delta, "Divisor with sum == 0 (mod delta)")->check(positive);
            sub->add_option("--method", cfg.nk_method, "closed or recursion")
                ->check(CLI::IsMember({"closed", "recursion"}));
        }
        sub->callback([&, what] { action = [&, what] { return run_eval(cfg, what); }; });
    }

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration oracles");
    oracle->require_subcommand(1);
    for (const auto& [what, help] : std::vector<std::pair<std::string, std::string>>{
             {"phi-k", "Count unit k-tuples with coprime sum"},
             {"n-k", "Count unit k-tuples by sum residues"},
             {"menon-lhs", "Sum f(gcd(a_1 + ... + a_k - 1, n)) over the tuples"}}) {
        auto* sub = oracle->add_subcommand(what, help);
        add_k(sub, true);
        add_n(sub);
        add_budget(sub);
        add_format(sub, cfg);
        if (what == "phi-k") sub->add_option("--m", cfg.m, "Sum-coprimality modulus (default n; may not divide n)");
        if (what == "n-k") {
            sub->add_option("--d", cfg.d)->check(positive);
            sub->add_option("--delta", cfg.delta)->check(positive);
        }
        if (what == "menon-lhs") sub->add_option("--f", cfg.f_spec, "id, one, tau, mu, pow:j or table:<path>");
        sub->callback([&, what] { action = [&, what] { return run_oracle(cfg, what); }; });
    }

    // verify
    auto* verify = app.add_subcommand("verify", "Identity sweeps against exhaustive oracles");
    verify->require_subcommand(1);
    for (const auto& [what, help] : std::vector<std::pair<std::string, std::string>>{
             {"menon", "Menon-type identity for f (default id, the gcd-sum form)"},
             {"lemmas", "Congruence counting lemmas and N_k machinery"},
             {"nageswara-rao", "Sum of gcd(a_1 + ... + a_k, n)"},
             {"sita-ramaiah", "k = 2 Menon identity against the Carlitz count"}}) {
        auto* sub = verify->add_subcommand(what, help);
        if (what != "sita-ramaiah") {
            sub->add_option("--k-min", cfg.k_min, "First k")->check(CLI::Range(1u, 64u));
            sub->add_option("--k-max", cfg.k_max, "Last k")->check(CLI::Range(1u, 64u));
        }
        sub->add_option("--n-min", cfg.n_min)->check(positive);
        sub->add_option("--n-max", cfg.n_max)->required()->check(positive);
        if (what == "menon") sub->add_option("--f", cfg.f_spec, "id, one, tau, mu, pow:j or table:<path>");
        add_budget(sub);
        add_threads(sub);
        add_format(sub, cfg);
        sub->callback([&, what] { action = [&, what] { return run_verify(cfg, what); }; });
    }

    // sum
    auto* sum = app.add_subcommand("sum", "Exact partial sums of phi_k");
    auto* sum_phi = sum->add_subcommand("phi-k", "Sum of phi_k(n) for n <= x");
    sum->require_subcommand(1);
    add_k(sum_phi, true);
    sum_phi->add_option("--x", cfg.x, "Cutoff x")->required();
    sum_phi->add_option("--method", cfg.method, "direct, convolution or both")
        ->check(CLI::IsMember({"direct", "convolution", "both"}));
    add_threads(sum_phi);
    add_format(sum_phi, cfg);
    sum_phi->callback([&] { action = [&] { return run_sum(cfg); }; });

    // constant
    auto* constant = app.add_subcommand("constant", "Rigorous enclosure of C_k");
    add_k(constant, true);
    constant->add_option("--prime-bound", cfg.prime_bound, "Largest prime in the finite product");
    add_threads(constant);
    add_format(constant, cfg);
    constant->callback([&] { action = [&] { return run_constant(cfg); }; });

    // error-table
    auto* table = app.add_subcommand("error-table", "Partial sums against the main term");
    add_k(table, true);
    table->add_option("--x", cfg.grid, "Cutoffs (comma separated)")->required()->delimiter(',');
    table->add_option("--prime-bound", cfg.prime_bound, "Prime bound for the constant");
    add_threads(table);
    add_format(table, cfg);
    table->callback([&] { action = [&] { return run_error_table(cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const DomainError& e) {
        std::cerr << "phik: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "phik: budget exceeded: " << e.what() << '\n';
        return kBudget;
    }
}
