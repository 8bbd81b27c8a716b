#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rsa {

// Disjoint open intervals keyed by left endpoint. Only components longer than
// `threshold` are kept; shorter pieces can never host a segment and are dropped.
class IntervalSet {
public:
    IntervalSet(double lo, double hi, double threshold);

    // Component containing [a, b], if any.
    std::optional<std::pair<double, double>> containing(double a, double b) const;

    // Remove (a, b) from the set, splitting components as needed.
    void remove(double a, double b);

    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    double threshold() const { return threshold_; }
    std::vector<std::pair<double, double>> components() const;

private:
    void insert(double a, double b);

    std::map<double, double> parts_;
    double threshold_;
};

}  // namespace rsa
