#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "core.hpp"
#include "frame.hpp"

namespace intprob {

/// A (pseudo-)probability vector over the singletons of a frame.
///
/// Values always sum to one within eps. `proper()` is true when every value is
/// >= -eps; pseudo-probabilities (negative entries) are allowed and flagged,
/// never clamped.
class Distribution {
public:
    Distribution() = default;

    Distribution(Frame frame, std::vector<double> values) : frame_(std::move(frame)), values_(std::move(values))
    {
        if (values_.size() != frame_.size())
            throw domain_error("distribution: expected " + std::to_string(frame_.size()) + " values, got " +
                               std::to_string(values_.size()));
        double total = 0.0;
        for (double v : values_) {
            if (!std::isfinite(v))
                throw domain_error("distribution: non-finite value");
            total += v;
        }
        if (std::abs(total - 1.0) > eps)
            throw domain_error("distribution: values sum to " + std::to_string(total) + ", not 1");
        proper_ = std::all_of(values_.begin(), values_.end(), [](double v) { return v >= -eps; });
    }

    static Distribution uniform(const Frame& frame)
    {
        return Distribution(frame, std::vector<double>(frame.size(), 1.0 / static_cast<double>(frame.size())));
    }

    /// Categorical distribution concentrated on singleton i (a vertex of the probability simplex).
    static Distribution vertex(const Frame& frame, std::size_t i)
    {
        std::vector<double> v(frame.size(), 0.0);
        v.at(i) = 1.0;
        return Distribution(frame, std::move(v));
    }

    const Frame& frame() const { return frame_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    bool proper() const { return proper_; }

    /// Probability of an event (sum over its singletons).
    double probability(Subset a) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (a.contains(i))
                s += values_[i];
        return s;
    }

private:
    Frame frame_;
    std::vector<double> values_;
    bool proper_ = true;
};

inline double max_abs_diff(std::span<const double> a, std::span<const double> b)
{
    double r = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

inline double max_abs_diff(const Distribution& a, const Distribution& b) { return max_abs_diff(a.values(), b.values()); }

/// Affine combination sum_i w_i p_i of distributions on the same frame (weights summing to 1).
inline Distribution affine_combination(std::span<const double> weights, std::span<const Distribution> points)
{
    if (weights.size() != points.size() || points.empty())
        throw domain_error("affine_combination: weights and points differ in length");
    std::vector<double> out(points.front().size(), 0.0);
    for (std::size_t k = 0; k < points.size(); ++k) {
        require_same_frame(points[k].frame(), points.front().frame());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += weights[k] * points[k][i];
    }
    return Distribution(points.front().frame(), std::move(out));
}

} // namespace intprob
