#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "belief.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "intervals.hpp"

namespace intprob {

/// Shared fraction of each interval's width: beta = (1 - sum l) / sum (u - l).
struct BetaCoefficient {
    double value = 0.0;
    bool degenerate = false; ///< total width is zero; value is meaningless
};

inline BetaCoefficient beta(const IntervalSystem& sys)
{
    require_consistent(sys, "beta");
    const double width = sys.total_width();
    if (width <= eps)
        return {0.0, true};
    double value = (1.0 - sys.lower_sum()) / width;
#ifdef INTPROB_MUTATE_BETA
    // Fault injection for harness sanity tests only.
    value *= 1.01;
#endif
    return {value, false};
}

inline BetaCoefficient beta(const MassFunction& m) { return beta(from_belief(m)); }

namespace detail {

inline std::vector<double> snap_to_one(std::vector<double> v)
{
    // Pushes the ulp-level normalisation error into the largest entry.
    double sum = 0.0;
    std::size_t big = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        sum += v[i];
        if (std::abs(v[i]) > std::abs(v[big]))
            big = i;
    }
    if (std::abs(sum - 1.0) < 1e-12)
        v[big] += 1.0 - sum;
    return v;
}

} // namespace detail

/// p(x) = beta u(x) + (1 - beta) l(x). Degenerate (zero-width) systems return l.
inline Distribution intersection_probability(const IntervalSystem& sys)
{
    const auto b = beta(sys);
    if (b.degenerate) {
        if (std::abs(sys.lower_sum() - 1.0) > eps)
            throw domain_error("intersection_probability: zero total width but sum l != 1");
        return Distribution(sys.frame(), sys.lower());
    }
    std::vector<double> p(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        p[i] = b.value * sys.upper(i) + (1.0 - b.value) * sys.lower(i);
    return Distribution(sys.frame(), detail::snap_to_one(std::move(p)));
}

/// R(x) = (u(x) - l(x)) / sum_y (u(y) - l(y))
inline Distribution relative_uncertainty(const IntervalSystem& sys)
{
    require_consistent(sys, "relative_uncertainty");
    const double width = sys.total_width();
    if (width <= eps)
        throw domain_error("relative_uncertainty: all interval widths are zero");
    std::vector<double> r(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        r[i] = sys.width(i) / width;
    return Distribution(sys.frame(), detail::snap_to_one(std::move(r)));
}

/// Second form of the intersection probability, p(x) = l(x) + (1 - sum l) R(x).
inline Distribution intersection_probability_via_uncertainty(const IntervalSystem& sys)
{
    if (sys.total_width() <= eps)
        return intersection_probability(sys);
    const auto r = relative_uncertainty(sys);
    const double free_mass = 1.0 - sys.lower_sum();
    std::vector<double> p(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        p[i] = sys.lower(i) + free_mass * r[i];
    return Distribution(sys.frame(), detail::snap_to_one(std::move(p)));
}

inline Distribution intersection_probability(const MassFunction& m) { return intersection_probability(from_belief(m)); }
inline Distribution relative_uncertainty(const MassFunction& m) { return relative_uncertainty(from_belief(m)); }

struct Varsigma {
    MassFunction mass;    ///< pseudo mass function m + beta (mu - m)
    BetaCoefficient beta; ///< degenerate for Bayesian input, in which case `mass` is the input
};

/// Bayesian pseudo belief function on the line joining Bel and Pl: varsigma = Bel + beta (Pl - Bel).
inline Varsigma varsigma(const MassFunction& m)
{
    const auto b = beta(m);
    if (b.degenerate)
        return {m, b};
    const auto mu = mobius_plausibility(m);
    MassFunction::container c;
    for (std::size_t a = 1; a < mu.values().size(); ++a) {
        const Subset s(static_cast<mask_t>(a));
        const double v = m.mass(s) + b.value * (mu(s) - m.mass(s));
        if (std::abs(v) > 1e-15)
            c[s] = v;
    }
    return {MassFunction(m.frame(), std::move(c), true), b};
}

/// BetP(x) = sum_{A contains x} m(A) / |A|
inline Distribution pignistic(const MassFunction& m)
{
    std::vector<double> p(m.frame().size(), 0.0);
    for (const auto& [set, value] : m.focal()) {
        const double share = value / static_cast<double>(set.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            if (set.contains(i))
                p[i] += share;
    }
    return Distribution(m.frame(), detail::snap_to_one(std::move(p)));
}

/// m(x) / k_Bel. Throws when the singletons carry no mass.
inline Distribution relative_belief(const MassFunction& m)
{
    auto v = m.singleton_masses();
    const double k = std::accumulate(v.begin(), v.end(), 0.0);
    if (k <= eps)
        throw domain_error("relative_belief: zero singleton mass (k_bel <= 1e-9)");
    for (auto& x : v)
        x /= k;
    return Distribution(m.frame(), detail::snap_to_one(std::move(v)));
}

/// Pl(x) / k_Pl
inline Distribution relative_plausibility(const MassFunction& m)
{
    auto v = m.singleton_plausibilities();
    const double k = std::accumulate(v.begin(), v.end(), 0.0);
    if (k <= eps)
        throw domain_error("relative_plausibility: zero total singleton plausibility");
    for (auto& x : v)
        x /= k;
    return Distribution(m.frame(), detail::snap_to_one(std::move(v)));
}

enum class SudanoTransform { PrPl, PrBel, PrNPl, PraPl };

inline SudanoTransform parse_sudano(const std::string& name)
{
    if (name == "PrPl" || name == "prpl")
        return SudanoTransform::PrPl;
    if (name == "PrBel" || name == "prbel")
        return SudanoTransform::PrBel;
    if (name == "PrNPl" || name == "prnpl")
        return SudanoTransform::PrNPl;
    if (name == "PraPl" || name == "prapl")
        return SudanoTransform::PraPl;
    throw domain_error("unknown Sudano transform '" + name + "'");
}

namespace detail {

/// sum_{A contains x} m(A) w(x) / sum_{y in A} w(y)
inline std::vector<double> proportional_redistribution(const MassFunction& m, const std::vector<double>& w,
                                                       const char* guard)
{
    std::vector<double> p(w.size(), 0.0);
    for (const auto& [set, value] : m.focal()) {
        double denom = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (set.contains(i))
                denom += w[i];
        if (denom <= 0.0)
            throw domain_error(guard);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (set.contains(i))
                p[i] += value * w[i] / denom;
    }
    return p;
}

} // namespace detail

inline Distribution sudano(const MassFunction& m, SudanoTransform which)
{
    switch (which) {
    case SudanoTransform::PrPl:
        return Distribution(m.frame(), detail::snap_to_one(detail::proportional_redistribution(
                                           m, m.singleton_plausibilities(), "PrPl: focal set with zero plausibility")));
    case SudanoTransform::PrBel:
        return Distribution(m.frame(),
                            detail::snap_to_one(detail::proportional_redistribution(
                                m, m.singleton_masses(), "PrBel: focal set containing no singleton mass")));
    case SudanoTransform::PrNPl: return relative_plausibility(m);
    case SudanoTransform::PraPl: {
        const auto t = singleton_totals(m);
        const auto ms = m.singleton_masses();
        const auto pl = m.singleton_plausibilities();
        const double e = (1.0 - t.k_bel) / t.k_pl;
        std::vector<double> p(ms.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] = ms[i] + e * pl[i];
        return Distribution(m.frame(), detail::snap_to_one(std::move(p)));
    }
    }
    throw domain_error("sudano: unknown transform");
}

/// PraPl on an interval system: l(x) + (1 - sum l) / (sum u) * u(x). Not guaranteed to lie in the system.
inline Distribution pra_pl_interval(const IntervalSystem& sys)
{
    require_consistent(sys, "pra_pl_interval");
    const double e = (1.0 - sys.lower_sum()) / sys.upper_sum();
    std::vector<double> p(sys.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = sys.lower(i) + e * sys.upper(i);
    return Distribution(sys.frame(), detail::snap_to_one(std::move(p)));
}

/// sigma_k = total mass of focal elements of size k, k = 1..n (index 0 unused).
struct CardinalityProfile {
    std::vector<double> sigma;

    /// beta reconstructed as (sigma_2 + ... + sigma_n) / (2 sigma_2 + ... + n sigma_n); NaN for Bayesian input.
    double beta() const
    {
        double num = 0.0, den = 0.0;
        for (std::size_t k = 2; k < sigma.size(); ++k) {
            num += sigma[k];
            den += static_cast<double>(k) * sigma[k];
        }
        return den > eps ? num / den : std::nan("");
    }
};

inline CardinalityProfile cardinality_profile(const MassFunction& m)
{
    CardinalityProfile c{std::vector<double>(m.frame().size() + 1, 0.0)};
    for (const auto& [set, value] : m.focal())
        c.sigma[set.size()] += value;
    return c;
}

} // namespace intprob
