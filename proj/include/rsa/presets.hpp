#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsa/ldf.hpp"

namespace rsa {

enum class SolveQuantity { EmptySpace, Counts, SecondMoment };

struct ReferencePoint {
    double L;
    double value;
    double rel_tol;  // relative tolerance; 0 means use abs_tol
    double abs_tol;
};

// A plotted curve: which recurrence, on what grid, and the reference points read off the plot.
struct FigurePreset {
    std::string name;
    std::string distribution;
    SolveQuantity quantity = SolveQuantity::EmptySpace;
    std::size_t type = 0;
    double L_max = 0.0;
    double h = 0.0;
    std::vector<ReferencePoint> points;
};

std::vector<std::string> distribution_preset_names();
std::optional<LengthDistribution> distribution_preset(const std::string& name);

std::vector<FigurePreset> figure_presets();
std::optional<FigurePreset> figure_preset(const std::string& name);

// Preset name, figure preset name (its distribution), or path to a JSON file.
LengthDistribution load_distribution(const std::string& spec);

std::string to_string(SolveQuantity q);

}  // namespace rsa
