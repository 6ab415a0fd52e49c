#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlg/classical.hpp"
#include "nlg/noshared.hpp"
#include "nlg/quantum.hpp"
#include "nlg/sim.hpp"

namespace nlg {

inline constexpr const char* kToolName = "nlg";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// Machine-readable result envelope. Exact rationals serialize as "p/q"
// strings; every float carries the tolerance it was computed under.
struct ReportEnvelope {
    std::string mode;   // e.g. "classical-worst", "quantum-fixed", "simulation"
    std::string method; // e.g. "enumeration", "lp", "circle", "minimax"
    std::optional<Rat> exact_value;
    std::optional<double> approx_value;
    std::optional<double> lower, upper;
    std::optional<Rat> exact_lower, exact_upper;
    double tolerance = 0.0;
    std::optional<std::uint64_t> seed;
    std::optional<MixedStrategy> strategy;
    std::optional<Distribution> distribution;
    std::optional<ProductStrategy> product;
    std::optional<SymmetricDistribution> weight_classes;
    std::optional<VectorStrategy> vectors;
    std::optional<SimulationResult> simulation;
    std::vector<std::string> notes;
};

nlohmann::json report_to_json(const ReportEnvelope& rep, const Game& g);
std::string report_to_text(const ReportEnvelope& rep, const Game& g);

} // namespace nlg
