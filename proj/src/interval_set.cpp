#include "rsa/interval_set.hpp"

#include <iterator>

namespace rsa {

IntervalSet::IntervalSet(double lo, double hi, double threshold) : threshold_(threshold) { insert(lo, hi); }

void IntervalSet::insert(double a, double b) {
    if (b - a > threshold_) parts_.emplace(a, b);
}

std::optional<std::pair<double, double>> IntervalSet::containing(double a, double b) const {
    auto it = parts_.upper_bound(a);
    if (it == parts_.begin()) return std::nullopt;
    --it;
    if (it->first <= a && b <= it->second) return std::make_pair(it->first, it->second);
    return std::nullopt;
}

void IntervalSet::remove(double a, double b) {
    auto it = parts_.upper_bound(a);
    if (it != parts_.begin()) {
        auto prev = std::prev(it);
        if (prev->second > a) it = prev;
    }
    while (it != parts_.end() && it->first < b) {
        const double lo = it->first, hi = it->second;
        it = parts_.erase(it);
        insert(lo, a);
        insert(b, hi);
        if (hi > b) break;
    }
}

std::vector<std::pair<double, double>> IntervalSet::components() const {
    return {parts_.begin(), parts_.end()};
}

}  // namespace rsa
