#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"

namespace intprob {

/// Basic probability assignment over 2^Theta, stored sparsely (focal elements only).
///
/// Invariants: m(empty) = 0, masses sum to 1 within eps. Unless `pseudo`, every
/// mass is >= -eps and values in [-eps, 0) are clamped to zero. Pseudo mass
/// functions (normalised sum functions) may carry negative masses.
class MassFunction {
public:
    using container = std::map<Subset, double>;

    MassFunction() = default;

    MassFunction(Frame frame, const std::vector<std::pair<Subset, double>>& entries, bool pseudo = false)
        : frame_(std::move(frame)), pseudo_(pseudo)
    {
        container acc;
        for (const auto& [set, value] : entries)
            acc[set] += value;
        init(std::move(acc));
    }

    MassFunction(Frame frame, container masses, bool pseudo = false) : frame_(std::move(frame)), pseudo_(pseudo)
    {
        init(std::move(masses));
    }

    /// m(Theta) = 1.
    static MassFunction vacuous(const Frame& frame) { return MassFunction(frame, container{{frame.full(), 1.0}}); }

    /// Bayesian mass function carrying a distribution's values on singletons.
    static MassFunction from_distribution(const Distribution& p)
    {
        container c;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0.0)
                c[Subset::singleton(i)] = p[i];
        return MassFunction(p.frame(), std::move(c), !p.proper());
    }

    const Frame& frame() const { return frame_; }
    bool pseudo() const { return pseudo_; }
    const container& focal() const { return masses_; }

    double mass(Subset a) const
    {
        auto it = masses_.find(a);
        return it == masses_.end() ? 0.0 : it->second;
    }

    /// m(x) for every singleton x.
    std::vector<double> singleton_masses() const
    {
        std::vector<double> out(frame_.size(), 0.0);
        for (const auto& [set, value] : masses_)
            if (set.is_singleton())
                out[set.element()] = value;
        return out;
    }

    /// Pl(x) = sum_{A contains x} m(A) for every singleton x.
    std::vector<double> singleton_plausibilities() const
    {
        std::vector<double> out(frame_.size(), 0.0);
        for (const auto& [set, value] : masses_)
            for (std::size_t i = 0; i < frame_.size(); ++i)
                if (set.contains(i))
                    out[i] += value;
        return out;
    }

    /// Dense 2^n table of masses indexed by mask.
    std::vector<double> dense() const
    {
        std::vector<double> t(frame_.subset_count(), 0.0);
        for (const auto& [set, value] : masses_)
            t[set.bits()] = value;
        return t;
    }

    std::size_t max_focal_size() const
    {
        std::size_t k = 0;
        for (const auto& [set, value] : masses_)
            k = std::max(k, set.size());
        return k;
    }

private:
    void init(container masses)
    {
        const Subset full = frame_.full();
        double total = 0.0;
        for (auto it = masses.begin(); it != masses.end();) {
            const auto [set, value] = *it;
            if (!std::isfinite(value))
                throw domain_error("mass function: non-finite mass");
            if (!set.is_subset_of(full))
                throw domain_error("mass function: subset outside the frame");
            if (set.is_empty()) {
                if (std::abs(value) > eps)
                    throw domain_error("mass function: m(empty) must be 0");
                it = masses.erase(it);
                continue;
            }
            if (!pseudo_ && value < 0.0) {
                if (value < -eps)
                    throw domain_error("mass function: negative mass " + std::to_string(value) +
                                       " on a non-pseudo mass function");
                it->second = 0.0;
            }
            total += it->second;
            if (it->second == 0.0)
                it = masses.erase(it);
            else
                ++it;
        }
        if (std::abs(total - 1.0) > eps)
            throw domain_error("mass function: masses sum to " + std::to_string(total) + ", not 1");
        masses_ = std::move(masses);
    }

    Frame frame_;
    container masses_;
    bool pseudo_ = false;
};

enum class SetFunctionKind { belief, plausibility, mobius_plausibility, generic };

/// Dense set function over 2^Theta.
class SetFunction {
public:
    SetFunction(Frame frame, std::vector<double> values, SetFunctionKind kind)
        : frame_(std::move(frame)), values_(std::move(values)), kind_(kind)
    {
        if (values_.size() != frame_.subset_count())
            throw domain_error("set function: table size does not match 2^n");
    }

    const Frame& frame() const { return frame_; }
    SetFunctionKind kind() const { return kind_; }
    double operator()(Subset a) const { return values_[a.bits()]; }
    std::span<const double> values() const { return values_; }

private:
    Frame frame_;
    std::vector<double> values_;
    SetFunctionKind kind_;
};

/// Bel(A) = sum_{B subset A} m(B)
inline SetFunction belief_values(const MassFunction& m)
{
    auto t = m.dense();
    subset_zeta(std::span<double>(t));
    return SetFunction(m.frame(), std::move(t), SetFunctionKind::belief);
}

/// Pl(A) = sum_{B meets A} m(B) = 1 - Bel(complement A)
inline SetFunction plausibility_values(const MassFunction& m)
{
    auto bel = m.dense();
    subset_zeta(std::span<double>(bel));
    const std::size_t full = m.frame().full().bits();
    std::vector<double> pl(bel.size());
    for (std::size_t a = 0; a < pl.size(); ++a)
        pl[a] = bel[full] - bel[full & ~a];
    return SetFunction(m.frame(), std::move(pl), SetFunctionKind::plausibility);
}

/// Moebius inverse of the plausibility function, mu(A) = sum_{B subset A} (-1)^{|A-B|} Pl(B).
inline SetFunction mobius_plausibility(const MassFunction& m)
{
    auto pl = plausibility_values(m);
    std::vector<double> mu(pl.values().begin(), pl.values().end());
    subset_mobius(std::span<double>(mu));
    return SetFunction(m.frame(), std::move(mu), SetFunctionKind::mobius_plausibility);
}

/// Mass function obtained by Moebius inversion of a dense set function with value(empty) = 0.
inline MassFunction mass_from_set_function(const SetFunction& f, bool pseudo)
{
    std::vector<double> t(f.values().begin(), f.values().end());
    subset_mobius(std::span<double>(t));
    MassFunction::container c;
    for (std::size_t a = 1; a < t.size(); ++a)
        if (t[a] != 0.0)
            c[Subset(static_cast<mask_t>(a))] = t[a];
    if (std::abs(t[0]) > eps)
        throw domain_error("set function has nonzero value on the empty set");
    return MassFunction(f.frame(), std::move(c), pseudo);
}

/// The basic plausibility assignment mu as a pseudo mass function.
inline MassFunction plausibility_assignment(const MassFunction& m)
{
    auto mu = mobius_plausibility(m);
    MassFunction::container c;
    for (std::size_t a = 1; a < mu.values().size(); ++a)
        if (std::abs(mu.values()[a]) > 1e-15)
            c[Subset(static_cast<mask_t>(a))] = mu.values()[a];
    return MassFunction(m.frame(), std::move(c), true);
}

struct SingletonTotals {
    double k_bel; ///< total singleton mass
    double k_pl;  ///< total singleton plausibility
};

inline SingletonTotals singleton_totals(const MassFunction& m)
{
    SingletonTotals t{0.0, 0.0};
    for (const auto& [set, value] : m.focal()) {
        if (set.is_singleton())
            t.k_bel += value;
        t.k_pl += value * static_cast<double>(set.size());
    }
    return t;
}

enum class MassClass { bayesian, consonant, general };

inline const char* to_string(MassClass c)
{
    switch (c) {
    case MassClass::bayesian: return "bayesian";
    case MassClass::consonant: return "consonant";
    case MassClass::general: return "general";
    }
    return "?";
}

/// Bayesian: all focal elements singletons. Consonant: focal elements form a chain under inclusion.
/// A single singleton focal element is reported as bayesian.
inline MassClass classify(const MassFunction& m)
{
    bool bayesian = true;
    for (const auto& [set, value] : m.focal())
        bayesian = bayesian && set.is_singleton();
    if (bayesian)
        return MassClass::bayesian;
    std::vector<Subset> focal;
    for (const auto& [set, value] : m.focal())
        focal.push_back(set);
    std::sort(focal.begin(), focal.end(), [](Subset a, Subset b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < focal.size(); ++i)
        if (!focal[i - 1].is_subset_of(focal[i]))
            return MassClass::general;
    return MassClass::consonant;
}

inline double max_abs_diff(const MassFunction& a, const MassFunction& b)
{
    double r = 0.0;
    for (const auto& [set, v] : a.focal())
        r = std::max(r, std::abs(v - b.mass(set)));
    for (const auto& [set, v] : b.focal())
        r = std::max(r, std::abs(v - a.mass(set)));
    return r;
}

} // namespace intprob
