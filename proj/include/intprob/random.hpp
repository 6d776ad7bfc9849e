#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "belief.hpp"
#include "distribution.hpp"
#include "frame.hpp"

namespace intprob {

struct MassProfile {
    enum class Kind { dense, k_additive, singleton_free };
    Kind kind = Kind::dense;
    std::size_t k = 0; ///< focal size cap for k_additive

    static MassProfile dense() { return {Kind::dense, 0}; }
    static MassProfile k_additive(std::size_t k) { return {Kind::k_additive, k}; }
    static MassProfile singleton_free() { return {Kind::singleton_free, 0}; }
};

/// Parses "dense", "singleton-free" or "k-additive:K".
inline MassProfile parse_profile(const std::string& text)
{
    if (text == "dense")
        return MassProfile::dense();
    if (text == "singleton-free")
        return MassProfile::singleton_free();
    const std::string prefix = "k-additive:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            return MassProfile::k_additive(std::stoul(text.substr(prefix.size())));
        } catch (const std::exception&) {
        }
    }
    throw parse_error("unknown profile '" + text + "' (expected dense, singleton-free or k-additive:K)");
}

/// Random mass function supported on every subset whose size passes `allowed`,
/// with i.i.d. exponential weights normalised to one. Deterministic per seed.
inline MassFunction random_mass_with_sizes(const Frame& frame, std::uint64_t seed,
                                           const std::function<bool(std::size_t)>& allowed)
{
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> weight(1.0);
    std::vector<std::pair<Subset, double>> entries;
    double total = 0.0;
    for (mask_t a = 1; a < frame.subset_count(); ++a) {
        Subset s(a);
        if (!allowed(s.size()))
            continue;
        double w = weight(rng);
        entries.emplace_back(s, w);
        total += w;
    }
    if (entries.empty())
        throw domain_error("random_mass: profile admits no focal element on this frame");
    for (auto& e : entries)
        e.second /= total;
    // Renormalisation error is at ulp scale; fold it into the last entry.
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        sum += entries[i].second;
    entries.back().second = 1.0 - sum;
    return MassFunction(frame, entries);
}

inline MassFunction random_mass(const Frame& frame, std::uint64_t seed, MassProfile profile)
{
    switch (profile.kind) {
    case MassProfile::Kind::dense:
        return random_mass_with_sizes(frame, seed, [](std::size_t) { return true; });
    case MassProfile::Kind::k_additive:
        if (profile.k == 0 || profile.k > frame.size())
            throw domain_error("random_mass: k-additive profile needs 1 <= k <= n");
        return random_mass_with_sizes(frame, seed, [k = profile.k](std::size_t s) { return s <= k; });
    case MassProfile::Kind::singleton_free:
        if (frame.size() < 2)
            throw domain_error("random_mass: singleton-free profile needs n >= 2");
        return random_mass_with_sizes(frame, seed, [](std::size_t s) { return s >= 2; });
    }
    throw domain_error("random_mass: unknown profile");
}

/// Random full-support probability distribution.
inline Distribution random_distribution(const Frame& frame, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> weight(1.0);
    std::vector<double> v(frame.size());
    double total = 0.0;
    for (auto& x : v) {
        x = weight(rng) + 1e-3;
        total += x;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        v[i] /= total;
        sum += v[i];
    }
    v.back() = 1.0 - sum;
    return Distribution(frame, std::move(v));
}

} // namespace intprob
