// Command-line front end: game values, worst-case analysis, Monte Carlo
// simulation and the built-in result verification table.
//
// Exit codes: 0 success, 1 input error, 2 unsupported analysis,
// 3 non-convergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nlg/builtins.hpp"
#include "nlg/classical.hpp"
#include "nlg/dsl.hpp"
#include "nlg/noshared.hpp"
#include "nlg/quantum.hpp"
#include "nlg/report.hpp"
#include "nlg/sim.hpp"
#include "nlg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitNoConvergence = 3;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitInput, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "builtin:ee,6" or a .nlg file path.
nlg::GameDocument load_game(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) {
        const std::string spec = source.substr(8);
        const auto comma = spec.find(',');
        std::optional<int> param;
        std::string id = spec.substr(0, comma);
        if (comma != std::string::npos) {
            try {
                param = std::stoi(spec.substr(comma + 1));
            } catch (const std::exception&) {
                throw CliError{kExitInput, "bad builtin parameter in '" + source + "'"};
            }
        }
        nlg::GameDocument doc;
        try {
            doc.game = nlg::make_builtin(id, param);
        } catch (const nlg::error& e) {
            throw CliError{kExitInput, e.what()};
        }
        return doc;
    }
    try {
        return nlg::parse_game(read_file(source));
    } catch (const nlg::parse_error& e) {
        throw CliError{kExitInput, source + ": " + e.what()};
    }
}

// "uniform", "point:1,1" (1-based) or a .nlg file with dist rows.
nlg::Distribution load_dist(const nlg::GameDocument& doc, const std::string& spec) {
    const nlg::Game& g = doc.game;
    if (spec == "uniform") {
        if (doc.dist) return *doc.dist;
        return nlg::uniform_distribution(g);
    }
    if (spec.rfind("point:", 0) == 0) {
        std::vector<int> tuple;
        std::stringstream ss(spec.substr(6));
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                tuple.push_back(std::stoi(part) - 1);
            } catch (const std::exception&) {
                throw CliError{kExitInput, "bad point distribution '" + spec + "'"};
            }
        }
        try {
            return nlg::point_mass(g, g.input_index(tuple));
        } catch (const nlg::error& e) {
            throw CliError{kExitInput, e.what()};
        }
    }
    const nlg::GameDocument dist_doc = load_game(spec);
    if (!dist_doc.dist) throw CliError{kExitInput, spec + " carries no dist rows"};
    if (dist_doc.game.input_sizes != g.input_sizes)
        throw CliError{kExitInput, "distribution file shape does not match the game"};
    return *dist_doc.dist;
}

void emit(const nlg::ReportEnvelope& rep, const nlg::Game& g, const std::string& json_path) {
    std::cout << nlg::report_to_text(rep, g);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw CliError{kExitInput, "cannot write '" + json_path + "'"};
        out << nlg::report_to_json(rep, g).dump(2) << "\n";
    }
}

struct ModeFlags {
    bool classical = false;
    bool quantum = false;
    bool no_shared = false;

    void require_one() const {
        if (classical + quantum + no_shared != 1)
            throw CliError{kExitInput,
                           "pick exactly one of --classical, --quantum, --no-shared"};
    }
};

int run_value(const std::string& source, const std::string& dist_spec, const ModeFlags& mode,
              std::uint64_t seed, double tol, int grid, int restarts, int threads,
              const std::string& json_path) {
    const nlg::GameDocument doc = load_game(source);
    const nlg::Game& g = doc.game;
    const nlg::Distribution pi = load_dist(doc, dist_spec);

    nlg::ReportEnvelope rep;
    rep.seed = seed;
    if (mode.classical) {
        nlg::EnumerationOptions opt;
        opt.threads = threads;
        const nlg::ClassicalReport r = nlg::classical_fixed(g, pi, opt);
        rep.mode = "classical-fixed";
        rep.method = "enumeration";
        rep.exact_value = r.value;
        rep.strategy = r.strategy;
    } else {
        rep.mode = "quantum-fixed";
        rep.tolerance = tol;
        if (g.n_players == 2) {
            nlg::AscentOptions aopt;
            aopt.restarts = restarts;
            aopt.threads = threads;
            const nlg::QuantumReport q = nlg::quantum_2xor_fixed(g, pi, seed, aopt);
            switch (q.method) {
            case nlg::QuantumMethod::circle: rep.method = "circle"; break;
            case nlg::QuantumMethod::analytic_bound: rep.method = "ascent+analytic-bound"; break;
            default: rep.method = "vector-ascent"; break;
            }
            rep.lower = q.lower;
            rep.upper = q.upper;
            rep.exact_lower = q.exact_lower;
            rep.exact_upper = q.exact_upper;
            rep.approx_value = q.upper;
            rep.vectors = q.vectors;
            if (!q.note.empty()) rep.notes.push_back(q.note);
        } else {
            const nlg::SymmetricXorCoeffs c = nlg::symmetric_coeffs(g);
            const nlg::SymmetricDistribution p = nlg::aggregate_symmetric(g, pi);
            nlg::CircleOptions copt;
            copt.grid = grid;
            copt.tol = std::min(tol, 1e-9);
            const nlg::QuantumReport q = nlg::quantum_symmetric_fixed(c, p, copt);
            rep.method = "circle";
            rep.approx_value = 0.5 * (q.lower + q.upper);
            rep.lower = q.lower;
            rep.upper = q.upper;
        }
    }
    emit(rep, g, json_path);
    return kExitOk;
}

int run_worst(const std::string& source, const ModeFlags& mode, std::uint64_t seed, double tol,
              int grid, int rotations, int threads, const std::string& json_path) {
    const nlg::GameDocument doc = load_game(source);
    const nlg::Game& g = doc.game;

    nlg::ReportEnvelope rep;
    rep.seed = seed;
    if (mode.classical) {
        nlg::EnumerationOptions opt;
        opt.threads = threads;
        const nlg::ClassicalReport r = nlg::classical_worst(g, opt);
        rep.mode = "classical-worst";
        rep.method = "lp";
        rep.exact_value = r.value;
        rep.strategy = r.strategy;
        rep.distribution = r.worst_distribution;
        if (const auto id = nlg::match_builtin(g); id && id->first == "ma" && *id->second % 2)
            rep.notes.push_back(
                "no closed form is known for an odd player count; exact LP value");
    } else if (mode.quantum) {
        rep.mode = "quantum-worst";
        rep.tolerance = tol;
        if (const auto id = nlg::match_builtin(g); id && id->first == "ee") {
            const nlg::QuantumReport q = nlg::ee_quantum_bounds(*id->second);
            rep.method = "closed-form";
            rep.lower = q.lower;
            rep.upper = q.upper;
            rep.exact_lower = q.exact_lower;
            rep.exact_upper = q.exact_upper;
            if (q.exact_lower == q.exact_upper) rep.exact_value = q.exact_lower;
        } else {
            const nlg::SymmetricXorCoeffs c = nlg::symmetric_coeffs(g);
            nlg::MinimaxOptions mopt;
            mopt.tol = tol;
            mopt.grid = grid;
            mopt.rotations = rotations;
            const nlg::QuantumReport q = nlg::quantum_symmetric_worst(c, mopt);
            rep.method = "minimax";
            rep.lower = q.lower;
            rep.upper = q.upper;
            rep.approx_value = q.upper;
            rep.weight_classes = q.worst_p;
            rep.notes.push_back(q.note);
            if (!q.converged) {
                emit(rep, g, json_path);
                std::cerr << "minimax did not close the bracket below tol\n";
                return kExitNoConvergence;
            }
        }
    } else {
        rep.mode = "no-shared-worst";
        bool is_xor = true;
        try {
            nlg::xor_view(g);
        } catch (const nlg::not_xor_game&) {
            is_xor = false;
        }
        if (is_xor && g.n_players == 2) {
            const nlg::XorDichotomy d = nlg::xor_dichotomy(g);
            if (d.perfect) {
                rep.method = "dichotomy";
                rep.exact_value = nlg::Rat(1);
                nlg::MixedStrategy mix;
                mix.atoms.emplace_back(nlg::Rat(1), *d.strategy);
                rep.strategy = mix;
                rep.notes.push_back("a deterministic strategy wins every input");
            } else {
                rep.method = "dichotomy";
                rep.upper = 0.0;
                rep.notes.push_back("no perfect strategy: value is at most 0");
                if (g.binary_inputs()) {
                    nlg::ProductWorstOptions popt;
                    popt.threads = threads;
                    const nlg::ProductWorstResult pw = nlg::product_worst(g, popt);
                    rep.lower = pw.value;
                    rep.product = pw.strategy;
                }
            }
        } else if (g.n_players == 2 && g.binary_inputs()) {
            nlg::ProductWorstOptions popt;
            popt.threads = threads;
            const nlg::ProductWorstResult pw = nlg::product_worst(g, popt);
            rep.method = "product-grid";
            rep.tolerance = 1e-6;
            rep.approx_value = pw.value;
            rep.product = pw.strategy;
            if (pw.exact_value)
                rep.notes.push_back("algebraic optimum sqrt(5)-2 at response probability "
                                    "(sqrt(5)-1)/2 on input 1");
        } else {
            throw CliError{kExitUnsupported,
                           "no-shared analysis handles two-player binary-input games"};
        }
    }
    emit(rep, g, json_path);
    return kExitOk;
}

int run_simulate(const std::string& source, const std::string& dist_spec,
                 const std::string& strategy_spec, std::uint64_t rounds, std::uint64_t seed,
                 int restarts, const std::string& json_path) {
    const nlg::GameDocument doc = load_game(source);
    const nlg::Game& g = doc.game;
    const nlg::Distribution pi = load_dist(doc, dist_spec);

    nlg::AnyStrategy strategy = nlg::MixedStrategy{};
    std::string method;
    if (strategy_spec == "worst-mix") {
        strategy = nlg::classical_worst(g).strategy;
        method = "worst-mix";
    } else if (strategy_spec == "fixed") {
        strategy = nlg::classical_fixed(g, pi).strategy;
        method = "best-deterministic";
    } else if (strategy_spec == "vector") {
        nlg::AscentOptions aopt;
        aopt.restarts = restarts;
        const nlg::QuantumReport q = nlg::quantum_2xor_fixed(g, pi, seed, aopt);
        strategy = *q.vectors;
        method = "vector";
    } else {
        const nlg::GameDocument sdoc = load_game(strategy_spec);
        if (!sdoc.strategy) throw CliError{kExitInput, strategy_spec + " carries no strategy rows"};
        if (sdoc.game.input_sizes != g.input_sizes)
            throw CliError{kExitInput, "strategy file shape does not match the game"};
        strategy = *sdoc.strategy;
        method = "file-mix";
    }

    const nlg::SimulationResult sim = nlg::simulate(g, strategy, pi, rounds, seed);
    nlg::ReportEnvelope rep;
    rep.mode = "simulation";
    rep.method = method;
    rep.seed = seed;
    rep.simulation = sim;
    if (const auto* mix = std::get_if<nlg::MixedStrategy>(&strategy)) rep.strategy = *mix;
    if (const auto* vec = std::get_if<nlg::VectorStrategy>(&strategy)) rep.vectors = *vec;
    emit(rep, g, json_path);
    return kExitOk;
}

int run_verify(const std::string& only, std::uint64_t seed, int threads,
               const std::string& json_path) {
    nlg::VerifyOptions opt;
    opt.only = only;
    opt.seed = seed;
    opt.threads = threads;
    const std::vector<nlg::CheckResult> checks = nlg::run_paper_checks(opt);

    std::size_t failed = 0;
    for (const nlg::CheckResult& c : checks) {
        if (!c.pass) ++failed;
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.group << " | " << c.name
                  << " | computed " << c.computed << " | expected " << c.expected << "\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";

    if (!json_path.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const nlg::CheckResult& c : checks)
            arr.push_back({{"group", c.group},
                           {"name", c.name},
                           {"computed", c.computed},
                           {"expected", c.expected},
                           {"pass", c.pass}});
        nlohmann::json j = {{"schema", nlg::kReportSchema},
                            {"tool", {{"name", nlg::kToolName}, {"version", nlg::kToolVersion}}},
                            {"checks", arr}};
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw CliError{kExitInput, "cannot write '" + json_path + "'"};
        out << j.dump(2) << "\n";
    }
    return failed == 0 ? kExitOk : kExitInput;
}

int run_parse_check(const std::string& path) {
    const nlg::GameDocument doc = load_game(path);
    const nlg::Game& g = doc.game;
    std::cout << "ok: game '" << g.name << "', " << g.n_players << " player(s), inputs";
    for (int s : g.input_sizes) std::cout << ' ' << s;
    std::cout << ", " << g.num_inputs() << " input tuples";
    if (doc.dist) std::cout << ", distribution block";
    if (doc.strategy)
        std::cout << ", strategy mix (" << doc.strategy->atoms.size() << " atoms)";
    std::cout << "\n";
    return kExitOk;
}

int run_builtins() {
    for (const nlg::BuiltinInfo& b : nlg::builtin_registry()) {
        std::cout << b.id;
        if (b.takes_param) std::cout << " <param >= " << b.min_param << ">";
        std::cout << "  -  " << b.summary << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-local game value workbench"};
    app.require_subcommand(1);

    std::string source, dist_spec = "uniform", json_path, only, strategy_spec = "worst-mix";
    std::uint64_t seed = 1, rounds = 100000;
    double tol = 1e-6;
    int grid = 4096, restarts = 8, threads = 1, rotations = 64;
    ModeFlags mode;

    auto add_common = [&](CLI::App* cmd, bool with_modes) {
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--json", json_path, "write a JSON report to this path");
        cmd->add_option("--tol", tol, "numeric tolerance");
        cmd->add_option("--grid", grid, "circle grid resolution");
        cmd->add_option("--rotations", rotations, "rotation fan size per minimax cut");
        cmd->add_option("--restarts", restarts, "ascent restarts");
        cmd->add_option("--threads", threads, "worker threads for enumeration");
        if (with_modes) {
            cmd->add_flag("--classical", mode.classical, "classical analysis");
            cmd->add_flag("--quantum", mode.quantum, "quantum analysis");
        }
    };

    CLI::App* value = app.add_subcommand("value", "game value under a fixed distribution");
    value->add_option("game", source, "builtin:<id>[,param] or a .nlg file")->required();
    value->add_option("--dist", dist_spec, "uniform | point:<x,...> | <file>");
    add_common(value, true);

    CLI::App* worst = app.add_subcommand("worst", "worst-case game value");
    worst->add_option("game", source, "builtin:<id>[,param] or a .nlg file")->required();
    add_common(worst, true);
    worst->add_flag("--no-shared", mode.no_shared, "players share no randomness");

    CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo referee simulation");
    sim->add_option("game", source, "builtin:<id>[,param] or a .nlg file")->required();
    sim->add_option("--dist", dist_spec, "uniform | point:<x,...> | <file>");
    sim->add_option("--strategy", strategy_spec, "worst-mix | fixed | vector | <file>");
    sim->add_option("--rounds", rounds, "number of rounds");
    add_common(sim, false);

    CLI::App* verify = app.add_subcommand("verify-paper", "re-derive all known results");
    verify->add_option("--only", only, "restrict to one check group");
    add_common(verify, false);

    CLI::App* parse = app.add_subcommand("parse-check", "validate a game file");
    parse->add_option("file", source, ".nlg file")->required();

    app.add_subcommand("builtins", "list builtin games");

    CLI11_PARSE(app, argc, argv);

    try {
        if (value->parsed()) {
            mode.require_one();
            return run_value(source, dist_spec, mode, seed, tol, grid, restarts, threads,
                             json_path);
        }
        if (worst->parsed()) {
            mode.require_one();
            return run_worst(source, mode, seed, tol, grid, rotations, threads, json_path);
        }
        if (sim->parsed())
            return run_simulate(source, dist_spec, strategy_spec, rounds, seed, restarts,
                                json_path);
        if (verify->parsed()) return run_verify(only, seed, threads, json_path);
        if (parse->parsed()) return run_parse_check(source);
        return run_builtins();
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const nlg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlg::not_xor_game& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const nlg::not_symmetric& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const nlg::not_binary_inputs& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const nlg::shape_mismatch& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const nlg::cap_exceeded& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const nlg::no_convergence& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const nlg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
