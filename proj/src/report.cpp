#include "nlg/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace nlg {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

json tuple_json(const Game& g, int idx) {
    json arr = json::array();
    for (int v : g.input_tuple(idx)) arr.push_back(v + 1);
    return arr;
}

std::string bits_string(const std::vector<std::uint8_t>& tbl) {
    std::string s;
    for (std::uint8_t b : tbl) s += static_cast<char>('0' + b);
    return s;
}

} // namespace

json report_to_json(const ReportEnvelope& rep, const Game& g) {
    json j;
    j["schema"] = kReportSchema;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["timestamp"] = iso_timestamp();
    j["game"] = {{"name", g.name},
                 {"players", g.n_players},
                 {"input_sizes", g.input_sizes}};
    j["mode"] = rep.mode;
    j["method"] = rep.method;
    if (rep.seed) j["seed"] = *rep.seed;

    if (rep.exact_value) {
        j["value"] = {{"exact", rat_to_string(*rep.exact_value)},
                      {"approx", to_double(*rep.exact_value)}};
        j["win_probability"] = {{"exact", rat_to_string(win_probability(*rep.exact_value))},
                                {"approx", to_double(win_probability(*rep.exact_value))}};
    } else if (rep.approx_value) {
        j["value"] = {{"approx", *rep.approx_value}, {"tolerance", rep.tolerance}};
        j["win_probability"] = {{"approx", 0.5 + 0.5 * *rep.approx_value},
                                {"tolerance", rep.tolerance}};
    }
    if (rep.lower || rep.upper) {
        json b;
        if (rep.lower) b["lower"] = *rep.lower;
        if (rep.upper) b["upper"] = *rep.upper;
        if (rep.exact_lower) b["exact_lower"] = rat_to_string(*rep.exact_lower);
        if (rep.exact_upper) b["exact_upper"] = rat_to_string(*rep.exact_upper);
        b["tolerance"] = rep.tolerance;
        j["bracket"] = b;
    }

    json cert;
    if (rep.strategy) {
        json rows = json::array();
        for (const auto& [w, s] : rep.strategy->atoms) {
            json tables = json::array();
            for (const auto& tbl : s.tables) tables.push_back(bits_string(tbl));
            rows.push_back({{"weight", rat_to_string(w)}, {"tables", tables}});
        }
        cert["strategy"] = rows;
    }
    if (rep.distribution) {
        json rows = json::array();
        for (int idx = 0; idx < g.num_inputs(); ++idx)
            if (rep.distribution->w[idx] != 0)
                rows.push_back({{"input", tuple_json(g, idx)},
                                {"weight", rat_to_string(rep.distribution->w[idx])}});
        cert["distribution"] = rows;
    }
    if (rep.product) cert["product"] = rep.product->q;
    if (rep.weight_classes) cert["weight_classes"] = rep.weight_classes->p;
    if (rep.vectors) {
        cert["vectors"] = {{"dimension", rep.vectors->d},
                           {"u", rep.vectors->u},
                           {"v", rep.vectors->v}};
    }
    if (!cert.empty()) j["certificate"] = cert;

    if (rep.simulation) {
        j["simulation"] = {{"rounds", rep.simulation->rounds},
                           {"wins", rep.simulation->wins},
                           {"empirical_value", rep.simulation->empirical_value},
                           {"standard_error", rep.simulation->standard_error},
                           {"seed", rep.simulation->seed}};
    }
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

std::string report_to_text(const ReportEnvelope& rep, const Game& g) {
    std::ostringstream out;
    out << g.name << "  [" << g.n_players << " player(s), inputs";
    for (int s : g.input_sizes) out << ' ' << s;
    out << "]\n";
    out << "mode: " << rep.mode << "   method: " << rep.method << "\n";
    out << std::setprecision(12);
    if (rep.exact_value) {
        out << "value: " << rat_to_string(*rep.exact_value) << " = "
            << to_double(*rep.exact_value) << "\n";
        out << "win probability: " << rat_to_string(win_probability(*rep.exact_value)) << " = "
            << to_double(win_probability(*rep.exact_value)) << "\n";
    } else if (rep.approx_value) {
        out << "value: " << *rep.approx_value << "  (tolerance " << rep.tolerance << ")\n";
        out << "win probability: " << 0.5 + 0.5 * *rep.approx_value << "\n";
    }
    if (rep.lower && rep.upper) {
        out << "bracket: [" << *rep.lower << ", " << *rep.upper << "]";
        if (rep.exact_lower && rep.exact_upper)
            out << "  exact [" << rat_to_string(*rep.exact_lower) << ", "
                << rat_to_string(*rep.exact_upper) << "]";
        out << "\n";
    }
    if (rep.strategy) {
        out << "strategy mix (" << rep.strategy->atoms.size() << " pure strategies):\n";
        std::size_t shown = 0;
        for (const auto& [w, s] : rep.strategy->atoms) {
            if (shown++ == 8 && rep.strategy->atoms.size() > 9) {
                out << "  ... " << rep.strategy->atoms.size() - 8 << " more\n";
                break;
            }
            out << "  " << rat_to_string(w) << " :";
            for (const auto& tbl : s.tables) out << ' ' << bits_string(tbl);
            out << "\n";
        }
    }
    if (rep.distribution) {
        out << "distribution:\n";
        std::size_t shown = 0, nonzero = 0;
        for (int idx = 0; idx < g.num_inputs(); ++idx) nonzero += rep.distribution->w[idx] != 0;
        for (int idx = 0; idx < g.num_inputs(); ++idx) {
            if (rep.distribution->w[idx] == 0) continue;
            if (shown++ == 8 && nonzero > 9) {
                out << "  ... " << nonzero - 8 << " more\n";
                break;
            }
            out << "  (";
            const auto tuple = g.input_tuple(idx);
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i ? "," : "") << tuple[i] + 1;
            out << ") : " << rat_to_string(rep.distribution->w[idx]) << "\n";
        }
    }
    if (rep.product) {
        out << "product strategy:\n";
        for (std::size_t i = 0; i < rep.product->q.size(); ++i) {
            out << "  player " << i + 1 << ":";
            for (double p : rep.product->q[i]) out << ' ' << p;
            out << "\n";
        }
    }
    if (rep.weight_classes) {
        out << "weight-class distribution:";
        for (double p : rep.weight_classes->p) out << ' ' << p;
        out << "\n";
    }
    if (rep.simulation) {
        out << "rounds: " << rep.simulation->rounds << "  wins: " << rep.simulation->wins
            << "  empirical value: " << rep.simulation->empirical_value << "  stderr: "
            << rep.simulation->standard_error << "\n";
    }
    for (const std::string& n : rep.notes) out << "note: " << n << "\n";
    return out.str();
}

} // namespace nlg
