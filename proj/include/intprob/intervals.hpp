#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "belief.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"

namespace intprob {

/// Per-singleton probability bounds l(x) <= p(x) <= u(x).
class IntervalSystem {
public:
    IntervalSystem(Frame frame, std::vector<double> lower, std::vector<double> upper)
        : frame_(std::move(frame)), lower_(std::move(lower)), upper_(std::move(upper))
    {
        if (lower_.size() != frame_.size() || upper_.size() != frame_.size())
            throw domain_error("interval system: bound vectors do not match the frame size");
        for (std::size_t i = 0; i < frame_.size(); ++i) {
            const double l = lower_[i], u = upper_[i];
            if (!std::isfinite(l) || !std::isfinite(u) || l < -eps || u > 1.0 + eps || l > u + eps)
                throw domain_error("interval system: need 0 <= l <= u <= 1 for '" + frame_.label(i) + "'");
            lower_[i] = std::clamp(l, 0.0, 1.0);
            upper_[i] = std::clamp(std::max(u, lower_[i]), 0.0, 1.0);
        }
    }

    const Frame& frame() const { return frame_; }
    std::size_t size() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }

    double lower_sum() const { return std::accumulate(lower_.begin(), lower_.end(), 0.0); }
    double upper_sum() const { return std::accumulate(upper_.begin(), upper_.end(), 0.0); }
    double total_width() const { return upper_sum() - lower_sum(); }

private:
    Frame frame_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// (Bel(x), Pl(x)) on singletons.
inline IntervalSystem from_belief(const MassFunction& m)
{
    if (m.pseudo())
        throw domain_error("from_belief: pseudo mass functions do not define probability intervals");
    return IntervalSystem(m.frame(), m.singleton_masses(), m.singleton_plausibilities());
}

enum class Consistency { consistent, empty };

/// Nonempty credal set iff sum l <= 1 <= sum u.
inline Consistency check_consistency(const IntervalSystem& sys)
{
    return (sys.lower_sum() <= 1.0 + eps && sys.upper_sum() >= 1.0 - eps) ? Consistency::consistent
                                                                           : Consistency::empty;
}

inline void require_consistent(const IntervalSystem& sys, const char* op)
{
    if (check_consistency(sys) != Consistency::consistent)
        throw domain_error(std::string(op) + ": inconsistent interval system (sum l > 1 or sum u < 1)");
}

struct TightnessReport {
    std::vector<bool> lower_reachable;
    std::vector<bool> upper_reachable;
    IntervalSystem tightened;

    bool tight() const
    {
        return std::all_of(lower_reachable.begin(), lower_reachable.end(), [](bool b) { return b; }) &&
               std::all_of(upper_reachable.begin(), upper_reachable.end(), [](bool b) { return b; });
    }
};

/// l(x) is attained iff l(x) + sum_{y != x} u(y) >= 1; u(x) iff u(x) + sum_{y != x} l(y) <= 1.
/// Unattainable bounds are replaced by max(l, 1 - sum_{y!=x} u) / min(u, 1 - sum_{y!=x} l).
inline TightnessReport check_tightness(const IntervalSystem& sys)
{
    require_consistent(sys, "check_tightness");
    const std::size_t n = sys.size();
    const double sl = sys.lower_sum(), su = sys.upper_sum();
    std::vector<bool> lr(n), ur(n);
    std::vector<double> l(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double others_u = su - sys.upper(i);
        const double others_l = sl - sys.lower(i);
        lr[i] = sys.lower(i) + others_u >= 1.0 - eps;
        ur[i] = sys.upper(i) + others_l <= 1.0 + eps;
        l[i] = lr[i] ? sys.lower(i) : std::max(sys.lower(i), 1.0 - others_u);
        u[i] = ur[i] ? sys.upper(i) : std::min(sys.upper(i), 1.0 - others_l);
    }
    return TightnessReport{std::move(lr), std::move(ur), IntervalSystem(sys.frame(), std::move(l), std::move(u))};
}

/// Lower/upper probability of an event:
/// lower(A) = max(sum_{x in A} l, 1 - sum_{x notin A} u), upper(A) = min(sum_{x in A} u, 1 - sum_{x notin A} l).
inline std::pair<double, double> event_bounds(const IntervalSystem& sys, Subset a)
{
    require_consistent(sys, "event_bounds");
    if (a.is_empty())
        return {0.0, 0.0};
    if (a == sys.frame().full())
        return {1.0, 1.0};
    double l_in = 0, u_in = 0, l_out = 0, u_out = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (a.contains(i)) {
            l_in += sys.lower(i);
            u_in += sys.upper(i);
        } else {
            l_out += sys.lower(i);
            u_out += sys.upper(i);
        }
    }
    return {std::max(l_in, 1.0 - u_out), std::min(u_in, 1.0 - l_out)};
}

inline bool contains(const IntervalSystem& sys, const Distribution& p)
{
    require_same_frame(sys.frame(), p.frame());
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (p[i] < sys.lower(i) - eps || p[i] > sys.upper(i) + eps)
            return false;
    return true;
}

} // namespace intprob
