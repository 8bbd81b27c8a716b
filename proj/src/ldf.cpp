#include "rsa/ldf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "rsa/errors.hpp"
#include "rsa/specfun.hpp"

namespace rsa {

namespace {

// expm1(y) - y without cancellation for small |y|.
double expm1_minus_y(double y) {
    if (std::abs(y) < 1e-3) return y * y * (0.5 + y * (1.0 / 6.0 + y * (1.0 / 24.0 + y / 120.0)));
    return std::expm1(y) - y;
}

std::size_t pick_weighted(const std::vector<double>& w, double total, Rng& rng) {
    double target = rng.uniform() * total;
    std::size_t last = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] <= 0.0) continue;
        last = i;
        if (target < w[i]) return i;
        target -= w[i];
    }
    return last;
}

}  // namespace

std::string to_string(LdfKind k) {
    switch (k) {
        case LdfKind::Discrete: return "discrete";
        case LdfKind::PowerLaw: return "power";
        case LdfKind::Exponential: return "exponential";
        case LdfKind::Pareto: return "pareto";
        case LdfKind::Tabulated: return "tabulated";
    }
    return "unknown";
}

LengthDistribution LengthDistribution::discrete(std::vector<Atom> atoms) {
    if (atoms.empty()) throw DomainError("discrete ldf needs at least one atom");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& a = atoms[i];
        if (!std::isfinite(a.length) || !std::isfinite(a.weight)) throw DomainError("discrete ldf: non-finite atom");
        if (!(a.weight > 0.0)) throw DomainError("discrete ldf: weights must be positive");
        if (i > 0 && !(a.length > atoms[i - 1].length))
            throw DomainError("discrete ldf: lengths must be strictly increasing");
        total += a.weight;
    }
    if (std::abs(atoms.front().length - 1.0) > 1e-12) throw DomainError("discrete ldf: smallest length must be 1");
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("discrete ldf: weights must sum to 1");
    LengthDistribution d;
    d.kind_ = LdfKind::Discrete;
    for (const auto& a : atoms) {
        d.lengths_.push_back(a.length);
        d.weights_.push_back(a.weight / total);
    }
    d.lengths_.front() = 1.0;
    return d;
}

LengthDistribution LengthDistribution::power_law(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("power-law ldf: beta must be positive");
    LengthDistribution d;
    d.kind_ = LdfKind::PowerLaw;
    d.param_ = beta;
    return d;
}

LengthDistribution LengthDistribution::exponential(double rate) {
    if (rate == 0.0 || !std::isfinite(rate)) throw DomainError("exponential ldf: rate must be nonzero");
    LengthDistribution d;
    d.kind_ = LdfKind::Exponential;
    d.param_ = rate;
    return d;
}

LengthDistribution LengthDistribution::pareto(double exponent) {
    if (!std::isfinite(exponent)) throw DomainError("pareto ldf: exponent must be finite");
    LengthDistribution d;
    d.kind_ = LdfKind::Pareto;
    d.param_ = exponent;
    return d;
}

LengthDistribution LengthDistribution::tabulated(std::vector<TablePoint> points, std::optional<TailClass> tail) {
    if (points.size() < 2) throw DomainError("tabulated ldf needs at least two points");
    if (std::abs(points.front().length - 1.0) > 1e-12) throw DomainError("tabulated ldf: table must start at 1");
    points.front().length = 1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].length) || !std::isfinite(points[i].value) || points[i].value < 0.0)
            throw DomainError("tabulated ldf: values must be finite and nonnegative");
        if (i > 0 && !(points[i].length > points[i - 1].length))
            throw DomainError("tabulated ldf: abscissae must be strictly increasing");
    }
    if (points[0].value == 0.0 && points[1].value == 0.0)
        throw DomainError("tabulated ldf: Z must be positive just above 1");
    LengthDistribution d;
    d.kind_ = LdfKind::Tabulated;
    d.table_ = std::move(points);
    d.tail_ = tail;
    d.table_cum_.assign(d.table_.size(), 0.0);
    for (std::size_t i = 1; i < d.table_.size(); ++i) {
        const auto& a = d.table_[i - 1];
        const auto& b = d.table_[i];
        d.table_cum_[i] = d.table_cum_[i - 1] + 0.5 * (a.value + b.value) * (b.length - a.length);
    }
    return d;
}

LengthDistribution LengthDistribution::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scale factor must be positive");
    LengthDistribution d = *this;
    d.scale_ *= c;
    return d;
}

double LengthDistribution::support_end() const {
    if (kind_ == LdfKind::Tabulated) return table_.back().length;
    return std::numeric_limits<double>::infinity();
}

double LengthDistribution::density(double l) const {
    if (l < 1.0) return 0.0;
    switch (kind_) {
        case LdfKind::Discrete: {
            const int t = type_of(l);
            return t < 0 ? 0.0 : scale_ * weights_[static_cast<std::size_t>(t)];
        }
        case LdfKind::PowerLaw: return scale_ * std::pow(l - 1.0, param_ - 1.0);
        case LdfKind::Exponential: return scale_ * std::exp(param_ * l);
        case LdfKind::Pareto: return scale_ * std::pow(l, -param_);
        case LdfKind::Tabulated: {
            if (l > table_.back().length) throw DomainError("tabulated ldf evaluated beyond its table");
            auto it = std::upper_bound(table_.begin(), table_.end(), l,
                                       [](double x, const TablePoint& p) { return x < p.length; });
            if (it == table_.end()) return scale_ * table_.back().value;
            const auto& b = *it;
            const auto& a = *(it - 1);
            const double w = (l - a.length) / (b.length - a.length);
            return scale_ * (a.value + w * (b.value - a.value));
        }
    }
    return 0.0;
}

double LengthDistribution::table_Z(double L) const {
    if (L > table_.back().length * (1.0 + 1e-15)) throw DomainError("tabulated ldf evaluated beyond its table");
    L = std::min(L, table_.back().length);
    auto it = std::upper_bound(table_.begin(), table_.end(), L,
                               [](double x, const TablePoint& p) { return x < p.length; });
    if (it == table_.end()) return table_cum_.back();
    const std::size_t i = static_cast<std::size_t>(it - table_.begin()) - 1;
    const auto& a = table_[i];
    const auto& b = table_[i + 1];
    const double s = L - a.length;
    const double k = (b.value - a.value) / (b.length - a.length);
    return table_cum_[i] + a.value * s + 0.5 * k * s * s;
}

double LengthDistribution::table_cumZ(double L) const {
    if (L > table_.back().length * (1.0 + 1e-15)) throw DomainError("tabulated ldf evaluated beyond its table");
    L = std::min(L, table_.back().length);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < table_.size(); ++i) {
        const auto& a = table_[i];
        const auto& b = table_[i + 1];
        if (L <= a.length) break;
        const double s = std::min(L, b.length) - a.length;
        const double k = (b.value - a.value) / (b.length - a.length);
        total += table_cum_[i] * s + a.value * s * s / 2.0 + k * s * s * s / 6.0;
    }
    return total;
}

double LengthDistribution::normalizing_constant(double L) const {
    if (!(L >= 0.0)) throw DomainError("normalizing_constant: L must be nonnegative");
    if (L <= 1.0) return 0.0;
    const double x = L - 1.0;
    double z = 0.0;
    switch (kind_) {
        case LdfKind::Discrete:
            for (std::size_t i = 0; i < lengths_.size() && lengths_[i] <= L; ++i) z += weights_[i];
            break;
        case LdfKind::PowerLaw: z = std::pow(x, param_) / param_; break;
        case LdfKind::Exponential: z = std::exp(param_) * std::expm1(param_ * x) / param_; break;
        case LdfKind::Pareto:
            z = (param_ == 1.0) ? std::log(L) : -std::expm1((1.0 - param_) * std::log(L)) / (param_ - 1.0);
            break;
        case LdfKind::Tabulated: z = table_Z(L); break;
    }
    return scale_ * z;
}

double LengthDistribution::cumulative_Z(double L) const {
    if (!(L >= 0.0)) throw DomainError("cumulative_Z: L must be nonnegative");
    if (L <= 1.0) return 0.0;
    const double x = L - 1.0;
    double c = 0.0;
    switch (kind_) {
        case LdfKind::Discrete:
            for (std::size_t i = 0; i < lengths_.size() && lengths_[i] < L; ++i) c += weights_[i] * (L - lengths_[i]);
            break;
        case LdfKind::PowerLaw: c = std::pow(x, param_ + 1.0) / (param_ * (param_ + 1.0)); break;
        case LdfKind::Exponential: c = std::exp(param_) * expm1_minus_y(param_ * x) / (param_ * param_); break;
        case LdfKind::Pareto: {
            const double a = param_;
            if (a == 1.0) {
                c = L * std::log(L) - x;
            } else if (a == 2.0) {
                c = x - std::log(L);
            } else {
                // ((L-1) - (L^{2-a} - 1)/(2-a)) / (a-1)
                const double g = std::expm1((2.0 - a) * std::log(L)) / (2.0 - a);
                c = (x - g) / (a - 1.0);
            }
            break;
        }
        case LdfKind::Tabulated: c = table_cumZ(L); break;
    }
    return scale_ * c;
}

double LengthDistribution::mean_length() const {
    if (kind_ != LdfKind::Discrete) throw DomainError("mean_length defined for discrete ldfs only");
    double s = 0.0;
    for (std::size_t i = 0; i < lengths_.size(); ++i) s += weights_[i] * lengths_[i];
    return s;
}

int LengthDistribution::type_of(double length) const {
    for (std::size_t i = 0; i < lengths_.size(); ++i)
        if (std::abs(lengths_[i] - length) <= 1e-12 * lengths_[i]) return static_cast<int>(i);
    return -1;
}

std::size_t LengthDistribution::sample_truncated_type(double L, Rng& rng) const {
    std::vector<double> w(lengths_.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < lengths_.size() && lengths_[i] <= L; ++i) total += (w[i] = weights_[i]);
    if (!(total > 0.0)) throw DomainError("no atom fits");
    return pick_weighted(w, total, rng);
}

std::size_t LengthDistribution::sample_first_parked_type(double L, Rng& rng) const {
    std::vector<double> w(lengths_.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < lengths_.size() && lengths_[i] < L; ++i) total += (w[i] = weights_[i] * (L - lengths_[i]));
    if (!(total > 0.0)) throw DomainError("no atom fits");
    return pick_weighted(w, total, rng);
}

double LengthDistribution::sample_table(double L, Rng& rng) const {
    const double target = rng.uniform() * table_Z(L);
    auto it = std::upper_bound(table_cum_.begin(), table_cum_.end(), target);
    std::size_t i = static_cast<std::size_t>(it - table_cum_.begin());
    i = std::clamp<std::size_t>(i, 1, table_.size() - 1) - 1;
    const auto& a = table_[i];
    const auto& b = table_[i + 1];
    const double rem = target - table_cum_[i];
    const double k = (b.value - a.value) / (b.length - a.length);
    double s;
    const double disc = a.value * a.value + 2.0 * k * rem;
    const double denom = a.value + std::sqrt(std::max(disc, 0.0));
    s = denom > 0.0 ? 2.0 * rem / denom : 0.0;
    return std::clamp(a.length + s, a.length, std::min(b.length, L));
}

double LengthDistribution::sample_length_truncated(double L, Rng& rng) const {
    if (!(L > 1.0)) throw DomainError("sample_length_truncated: L must exceed 1");
    if (L > support_end()) throw DomainError("sample_length_truncated: L beyond table");
    const double x = L - 1.0;
    const double u = rng.uniform();
    double l = 1.0;
    switch (kind_) {
        case LdfKind::Discrete: return lengths_[sample_truncated_type(L, rng)];
        case LdfKind::PowerLaw: l = 1.0 + x * std::pow(u, 1.0 / param_); break;
        case LdfKind::Exponential:
            if (param_ < 0.0)
                l = 1.0 + std::log1p(u * std::expm1(param_ * x)) / param_;
            else
                l = L + std::log(u + (1.0 - u) * std::exp(-param_ * x)) / param_;
            break;
        case LdfKind::Pareto:
            if (param_ == 1.0) {
                l = std::exp(u * std::log(L));
            } else {
                const double e = 1.0 - param_;
                l = std::pow(1.0 - u * (1.0 - std::pow(L, e)), 1.0 / e);
            }
            break;
        case LdfKind::Tabulated: return sample_table(L, rng);
    }
    return std::clamp(l, 1.0, L);
}

double LengthDistribution::sample_first_parked_length(double L, Rng& rng) const {
    if (!(L > 1.0)) throw DomainError("sample_first_parked_length: L must exceed 1");
    if (kind_ == LdfKind::Discrete) return lengths_[sample_first_parked_type(L, rng)];
    const double x = L - 1.0;
    for (;;) {
        const double l = sample_length_truncated(L, rng);
        if (rng.uniform() * x < L - l) return l;
    }
}

TailClass classify(const LengthDistribution& d) {
    switch (d.kind()) {
        case LdfKind::Discrete: return TailClass::Convergent;
        case LdfKind::PowerLaw: return TailClass::Divergent;
        case LdfKind::Exponential: return d.rate() < 0.0 ? TailClass::Convergent : TailClass::Divergent;
        case LdfKind::Pareto: return d.exponent() > 1.0 ? TailClass::Convergent : TailClass::Divergent;
        case LdfKind::Tabulated:
            if (!d.tail()) throw ClassificationUnavailable("tabulated ldf has no tail class");
            return *d.tail();
    }
    return TailClass::Divergent;
}

double divergence_condition_margin(const LengthDistribution& d, double L) {
    if (classify(d) != TailClass::Divergent) throw DomainError("divergence margin needs a divergent ldf");
    if (!(L > 1.0)) throw DomainError("divergence margin needs L > 1");
    const double zL = d.normalizing_constant(L);
    const double cum = d.cumulative_Z(L) / zL;
    auto f = [&](double t) { return t * d.normalizing_constant(t) / zL; };
    const auto r = specfun::integrate(f, 1.0, L, 1e-13 * L * L);
    return 2.0 * r.value / (L * cum) - 1.0;
}

LengthDistribution LengthDistribution::from_json(const nlohmann::json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        LengthDistribution d;
        if (kind == "discrete") {
            std::vector<Atom> atoms;
            for (const auto& a : j.at("atoms")) atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
            d = discrete(std::move(atoms));
        } else if (kind == "power") {
            d = power_law(j.at("beta").get<double>());
        } else if (kind == "exponential") {
            d = exponential(j.at("rate").get<double>());
        } else if (kind == "pareto") {
            d = pareto(j.at("exponent").get<double>());
        } else if (kind == "tabulated") {
            std::vector<TablePoint> pts;
            for (const auto& p : j.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            std::optional<TailClass> tail;
            if (j.contains("tail")) {
                const std::string t = j.at("tail").get<std::string>();
                if (t == "convergent")
                    tail = TailClass::Convergent;
                else if (t == "divergent")
                    tail = TailClass::Divergent;
                else
                    throw ConfigError("tail must be \"convergent\" or \"divergent\"");
            }
            d = tabulated(std::move(pts), tail);
        } else {
            throw ConfigError("unknown ldf kind: " + kind);
        }
        if (j.contains("scale")) d = d.scaled(j.at("scale").get<double>());
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed ldf description: ") + e.what());
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid ldf: ") + e.what());
    }
}

nlohmann::json LengthDistribution::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind_);
    switch (kind_) {
        case LdfKind::Discrete: {
            auto atoms = nlohmann::json::array();
            for (std::size_t i = 0; i < lengths_.size(); ++i) atoms.push_back({lengths_[i], weights_[i]});
            j["atoms"] = atoms;
            break;
        }
        case LdfKind::PowerLaw: j["beta"] = param_; break;
        case LdfKind::Exponential: j["rate"] = param_; break;
        case LdfKind::Pareto: j["exponent"] = param_; break;
        case LdfKind::Tabulated: {
            auto pts = nlohmann::json::array();
            for (const auto& p : table_) pts.push_back({p.length, p.value});
            j["points"] = pts;
            if (tail_) j["tail"] = *tail_ == TailClass::Convergent ? "convergent" : "divergent";
            break;
        }
    }
    if (scale_ != 1.0) j["scale"] = scale_;
    return j;
}

std::string LengthDistribution::fingerprint() const { return to_json().dump(); }

}  // namespace rsa
