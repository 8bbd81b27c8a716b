#include "rsa/presets.hpp"

#include <fstream>
#include <sstream>

#include "rsa/errors.hpp"

namespace rsa {

namespace {

struct NamedDistribution {
    const char* name;
    LengthDistribution (*make)();
};

const NamedDistribution kDistributions[] = {
    {"renyi", [] { return LengthDistribution::discrete({{1.0, 1.0}}); }},
    {"example3", [] { return LengthDistribution::discrete({{1.0, 0.5}, {1.3, 0.3}, {1.5, 0.2}}); }},
    {"ghost2", [] { return LengthDistribution::discrete({{1.0, 2.0 / 3.0}, {4.0, 1.0 / 3.0}}); }},
    {"uniform-ldf", [] { return LengthDistribution::power_law(1.0); }},
    {"linear-ldf", [] { return LengthDistribution::power_law(2.0); }},
    {"inverse-square", [] { return LengthDistribution::pareto(2.0); }},
    {"pareto-1.1", [] { return LengthDistribution::pareto(1.1); }},
    {"exp-decay", [] { return LengthDistribution::exponential(-1.0); }},
    {"exp-growth", [] { return LengthDistribution::exponential(1.0); }},
};

}  // namespace

std::string to_string(SolveQuantity q) {
    switch (q) {
        case SolveQuantity::EmptySpace: return "empty-space";
        case SolveQuantity::Counts: return "counts";
        case SolveQuantity::SecondMoment: return "second-moment";
    }
    return "unknown";
}

std::vector<std::string> distribution_preset_names() {
    std::vector<std::string> out;
    for (const auto& d : kDistributions) out.emplace_back(d.name);
    return out;
}

std::optional<LengthDistribution> distribution_preset(const std::string& name) {
    for (const auto& d : kDistributions)
        if (name == d.name) return d.make();
    return std::nullopt;
}

std::vector<FigurePreset> figure_presets() {
    const double h64 = 1.0 / 64.0;
    const double h32 = 1.0 / 32.0;
    return {
        {"fig2a", "inverse-square", SolveQuantity::EmptySpace, 0, 1980.0, h32,
         {{20.0, 3.16301, 5e-3, 0.0}, {1980.0, 259.606, 5e-3, 0.0}}},
        {"fig2b", "uniform-ldf", SolveQuantity::EmptySpace, 0, 1980.0, h32,
         {{20.0, 2.35927, 5e-3, 0.0}, {1980.0, 31.1323, 5e-3, 0.0}}},
        {"fig4", "example3", SolveQuantity::Counts, 0, 10.0, 1e-3,
         {{1.4, 0.869565, 0.0, 1e-4}, {10.0, 4.17195, 3e-3, 0.0}}},
        {"fig5a", "exp-decay", SolveQuantity::EmptySpace, 0, 100.0, h64, {{99.5, 15.9952, 5e-3, 0.0}}},
        {"fig5b", "pareto-1.1", SolveQuantity::EmptySpace, 0, 100.0, h64, {{99.5, 9.81419, 5e-3, 0.0}}},
        {"fig6a", "uniform-ldf", SolveQuantity::EmptySpace, 0, 100.0, h64, {{99.5, 6.21745, 5e-3, 0.0}}},
        {"fig6b", "exp-growth", SolveQuantity::EmptySpace, 0, 50.0, h64, {{50.0, 0.889568, 3e-3, 0.0}}},
    };
}

std::optional<FigurePreset> figure_preset(const std::string& name) {
    for (auto& f : figure_presets())
        if (f.name == name) return f;
    return std::nullopt;
}

LengthDistribution load_distribution(const std::string& spec) {
    if (auto d = distribution_preset(spec)) return *d;
    if (auto f = figure_preset(spec)) return *distribution_preset(f->distribution);
    std::ifstream in(spec);
    if (!in) throw ConfigError("unknown preset or unreadable file: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse " + spec + ": " + e.what());
    }
    return LengthDistribution::from_json(j);
}

}  // namespace rsa
