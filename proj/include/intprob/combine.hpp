#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "belief.hpp"
#include "core.hpp"
#include "frame.hpp"

namespace intprob {

/// Unnormalised conjunctive combination. The mass that would land on the empty
/// set is kept apart as `conflict`, so `masses` sums to 1 - conflict.
struct Conjunction {
    Frame frame;
    MassFunction::container masses;
    double conflict = 0.0;
    bool pseudo = false;

    double mass(Subset a) const
    {
        if (a.is_empty())
            return conflict;
        auto it = masses.find(a);
        return it == masses.end() ? 0.0 : it->second;
    }

    /// Normalisation factor k = 1 - conflict.
    double normalization() const { return 1.0 - conflict; }
};

namespace detail {

inline MassFunction::container sparse_from_dense(std::span<const double> t)
{
    MassFunction::container c;
    for (std::size_t a = 1; a < t.size(); ++a)
        if (t[a] != 0.0)
            c[Subset(static_cast<mask_t>(a))] = t[a];
    return c;
}

inline bool prefer_pairwise(const MassFunction& m1, const MassFunction& m2)
{
    const double pairs = static_cast<double>(m1.focal().size()) * static_cast<double>(m2.focal().size());
    const double dense = static_cast<double>(m1.frame().subset_count()) * static_cast<double>(m1.frame().size() + 1);
    return pairs <= dense;
}

inline Conjunction conjunctive_pairwise(const MassFunction& m1, const MassFunction& m2)
{
    Conjunction r{m1.frame(), {}, 0.0, m1.pseudo() || m2.pseudo()};
    for (const auto& [b, mb] : m1.focal())
        for (const auto& [c, mc] : m2.focal()) {
            const Subset a = b & c;
            if (a.is_empty())
                r.conflict += mb * mc;
            else
                r.masses[a] += mb * mc;
        }
    std::erase_if(r.masses, [](const auto& kv) { return kv.second == 0.0; });
    return r;
}

/// Commonality route: Q(A) = sum_{B superset A} m(B) multiplies under the conjunctive rule.
inline Conjunction conjunctive_commonality(const MassFunction& m1, const MassFunction& m2)
{
    auto q1 = m1.dense();
    auto q2 = m2.dense();
    superset_zeta(std::span<double>(q1));
    superset_zeta(std::span<double>(q2));
    for (std::size_t a = 0; a < q1.size(); ++a)
        q1[a] *= q2[a];
    superset_mobius(std::span<double>(q1));
    return Conjunction{m1.frame(), sparse_from_dense(q1), q1[0], m1.pseudo() || m2.pseudo()};
}

inline MassFunction::container disjunctive_pairwise(const MassFunction& m1, const MassFunction& m2)
{
    MassFunction::container c;
    for (const auto& [b, mb] : m1.focal())
        for (const auto& [d, md] : m2.focal())
            c[b | d] += mb * md;
    return c;
}

/// Implicability route: b(A) = sum_{B subset A} m(B) multiplies under the disjunctive rule.
inline MassFunction::container disjunctive_implicability(const MassFunction& m1, const MassFunction& m2)
{
    auto b1 = m1.dense();
    auto b2 = m2.dense();
    subset_zeta(std::span<double>(b1));
    subset_zeta(std::span<double>(b2));
    for (std::size_t a = 0; a < b1.size(); ++a)
        b1[a] *= b2[a];
    subset_mobius(std::span<double>(b1));
    return sparse_from_dense(b1);
}

} // namespace detail

/// m(A) = sum_{B cap C = A} m1(B) m2(C); conflict reported separately. Accepts pseudo inputs.
inline Conjunction conjunctive(const MassFunction& m1, const MassFunction& m2)
{
    require_same_frame(m1.frame(), m2.frame());
    return detail::prefer_pairwise(m1, m2) ? detail::conjunctive_pairwise(m1, m2)
                                           : detail::conjunctive_commonality(m1, m2);
}

/// k(Bel1, Bel2) = 1 - conflict.
inline double normalization_factor(const MassFunction& m1, const MassFunction& m2)
{
    return conjunctive(m1, m2).normalization();
}

/// Normalises a conjunctive result. Throws total_conflict when |1 - conflict| <= eps.
inline MassFunction normalize(const Conjunction& c)
{
    const double k = c.normalization();
    if (std::abs(k) <= eps || (!c.pseudo && k <= eps))
        throw total_conflict(c.conflict);
    MassFunction::container out;
    for (const auto& [set, value] : c.masses)
        out[set] = value / k;
    return MassFunction(c.frame, std::move(out), c.pseudo);
}

/// Dempster's rule: conjunctive combination renormalised by 1 - conflict.
inline MassFunction dempster(const MassFunction& m1, const MassFunction& m2) { return normalize(conjunctive(m1, m2)); }

/// m(A) = sum_{B cup C = A} m1(B) m2(C)
inline MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2)
{
    require_same_frame(m1.frame(), m2.frame());
    auto c = detail::prefer_pairwise(m1, m2) ? detail::disjunctive_pairwise(m1, m2)
                                             : detail::disjunctive_implicability(m1, m2);
    return MassFunction(m1.frame(), std::move(c), m1.pseudo() || m2.pseudo());
}

/// Mass-wise affine combination sum_i w_i m_i, weights summing to one. The result is
/// pseudo whenever a weight is negative or an input is pseudo.
inline MassFunction affine(std::span<const double> weights, std::span<const MassFunction> ms)
{
    if (weights.size() != ms.size() || ms.empty())
        throw domain_error("affine: weights and mass functions differ in length");
    double total = 0.0;
    bool pseudo = false;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        require_same_frame(ms[i].frame(), ms.front().frame());
        total += weights[i];
        pseudo = pseudo || weights[i] < 0.0 || ms[i].pseudo();
    }
    if (std::abs(total - 1.0) > eps)
        throw domain_error("affine: weights sum to " + std::to_string(total) + ", not 1");
    MassFunction::container c;
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (const auto& [set, value] : ms[i].focal())
            c[set] += weights[i] * value;
    return MassFunction(ms.front().frame(), std::move(c), pseudo);
}

inline MassFunction affine(std::initializer_list<double> weights, std::initializer_list<MassFunction> ms)
{
    return affine(std::span<const double>(weights.begin(), weights.size()),
                  std::span<const MassFunction>(ms.begin(), ms.size()));
}

} // namespace intprob
