#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace intprob {

using mask_t = std::uint32_t;

/// A subset of a frame, stored as a bit mask: bit i set <=> singleton i is a member.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(mask_t bits) : bits_(bits) {}

    static constexpr Subset empty() { return Subset{}; }
    static constexpr Subset singleton(std::size_t i) { return Subset{mask_t{1} << i}; }
    static constexpr Subset full(std::size_t n) { return Subset{n >= 32 ? ~mask_t{0} : (mask_t{1} << n) - 1}; }

    constexpr mask_t bits() const { return bits_; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
    /// Index of the element of a singleton subset.
    constexpr std::size_t element() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
    constexpr Subset complement(std::size_t n) const { return Subset{~bits_ & full(n).bits_}; }

    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
    friend constexpr auto operator<=>(Subset, Subset) = default;

private:
    mask_t bits_ = 0;
};

/// A finite frame of discernment: n uniquely labelled singletons, 1 <= n <= 24.
class Frame {
public:
    static constexpr std::size_t max_size = 24;

    Frame() = default;

    explicit Frame(std::vector<std::string> labels) : labels_(std::move(labels))
    {
        if (labels_.empty() || labels_.size() > max_size)
            throw size_error("frame size must be in [1, 24], got " + std::to_string(labels_.size()));
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_) {
            if (l.empty())
                throw domain_error("frame labels must be nonempty");
            if (!seen.insert(l).second)
                throw domain_error("duplicate frame label '" + l + "'");
        }
    }

    /// Frame with labels x1..xn.
    static Frame of_size(std::size_t n)
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back("x" + std::to_string(i + 1));
        return Frame(std::move(labels));
    }

    std::size_t size() const { return labels_.size(); }
    std::size_t subset_count() const { return std::size_t{1} << labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    Subset full() const { return Subset::full(size()); }
    Subset complement(Subset a) const { return a.complement(size()); }

    std::optional<std::size_t> index_of(const std::string& label) const
    {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    /// Member labels sorted lexicographically (the serialised form of a subset).
    std::vector<std::string> labels_of(Subset a) const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (a.contains(i))
                out.push_back(labels_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Parses a list of labels; unknown or repeated labels are rejected.
    Subset subset_of(std::span<const std::string> names) const
    {
        Subset s;
        for (const auto& name : names) {
            auto idx = index_of(name);
            if (!idx)
                throw parse_error("unknown label '" + name + "'");
            if (s.contains(*idx))
                throw parse_error("label '" + name + "' repeated in subset");
            s = s | Subset::singleton(*idx);
        }
        return s;
    }

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::vector<std::string> labels_;
};

inline void require_same_frame(const Frame& a, const Frame& b)
{
    if (a != b)
        throw frame_mismatch();
}

/// All subsets in ascending mask order.
inline std::vector<Subset> enumerate_subsets(const Frame& frame, bool include_empty)
{
    std::vector<Subset> out;
    out.reserve(frame.subset_count());
    for (mask_t m = include_empty ? 0 : 1; m < frame.subset_count(); ++m)
        out.emplace_back(m);
    return out;
}

/// Lazily generated orderings of {0..n-1} in lexicographic order.
class PermutationRange {
public:
    static constexpr std::size_t max_size = 10;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<std::size_t>;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() = default;
        explicit iterator(std::size_t n) : current_(n), done_(false) { std::iota(current_.begin(), current_.end(), 0); }

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++()
        {
            done_ = !std::next_permutation(current_.begin(), current_.end());
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return done_ == other.done_; }

    private:
        value_type current_;
        bool done_ = true;
    };

    explicit PermutationRange(std::size_t n) : n_(n)
    {
        if (n > max_size)
            throw size_error("permutations: n = " + std::to_string(n) + " exceeds 10 (factorial blow-up)");
    }

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    std::size_t n_;
};

inline PermutationRange permutations(std::size_t n) { return PermutationRange(n); }
inline PermutationRange permutations(const Frame& frame) { return PermutationRange(frame.size()); }

// Zeta / Moebius transforms over the subset lattice on dense 2^n tables.

/// f(A) <- sum_{B subset A} f(B)
template <typename T>
void subset_zeta(std::span<T> f)
{
    for (std::size_t bit = 1; bit < f.size(); bit <<= 1)
        for (std::size_t a = 0; a < f.size(); ++a)
            if (a & bit)
                f[a] += f[a ^ bit];
}

/// Inverse of subset_zeta: f(A) <- sum_{B subset A} (-1)^{|A-B|} f(B)
template <typename T>
void subset_mobius(std::span<T> f)
{
    for (std::size_t bit = 1; bit < f.size(); bit <<= 1)
        for (std::size_t a = 0; a < f.size(); ++a)
            if (a & bit)
                f[a] -= f[a ^ bit];
}

/// f(A) <- sum_{B superset A} f(B)
template <typename T>
void superset_zeta(std::span<T> f)
{
    for (std::size_t bit = 1; bit < f.size(); bit <<= 1)
        for (std::size_t a = 0; a < f.size(); ++a)
            if (!(a & bit))
                f[a] += f[a | bit];
}

template <typename T>
void superset_mobius(std::span<T> f)
{
    for (std::size_t bit = 1; bit < f.size(); bit <<= 1)
        for (std::size_t a = 0; a < f.size(); ++a)
            if (!(a & bit))
                f[a] -= f[a | bit];
}

} // namespace intprob
