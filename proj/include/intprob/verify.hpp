#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "belief.hpp"
#include "combine.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"
#include "geometry.hpp"
#include "intervals.hpp"
#include "io.hpp"
#include "random.hpp"
#include "transforms.hpp"

namespace intprob {

/// Residual above which a pair is taken not to commute.
inline constexpr double witness_threshold = 1e-6;
/// Interior mixing weights scanned by the commutation checks.
inline constexpr double alpha_grid[] = {.1, .2, .3, .4, .5, .6, .7, .8, .9};

struct TheoremReport {
    std::string id;
    std::size_t trials = 0;
    double max_residual = 0.0;
    double tolerance = eps;
    bool pass = true;
    std::optional<json> counterexample;
    std::string note;

    /// Records one residual, keeping the inputs of the worst one.
    void record(double residual, const std::function<json()>& inputs)
    {
        if (!std::isnan(max_residual) && !(residual <= max_residual)) {
            max_residual = residual;
            if (!(residual <= tolerance))
                counterexample = inputs();
        }
        pass = max_residual <= tolerance;
    }

    void absorb(const TheoremReport& other)
    {
        trials += other.trials;
        if (!std::isnan(max_residual) && !(other.max_residual <= max_residual)) {
            max_residual = other.max_residual;
            if (other.counterexample)
                counterexample = other.counterexample;
        }
        pass = max_residual <= tolerance;
    }
};

inline json to_json(const TheoremReport& r)
{
    json j{{"id", r.id},
           {"trials", r.trials},
           {"max_residual", std::isfinite(r.max_residual) ? json(r.max_residual) : json(nullptr)},
           {"tolerance", r.tolerance},
           {"pass", r.pass}};
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

namespace detail {

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline std::vector<double> singletons(const MassFunction& m) { return m.singleton_masses(); }

inline std::vector<double> singletons(const Conjunction& c)
{
    std::vector<double> v(c.frame.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c.mass(Subset::singleton(i));
    return v;
}

inline std::vector<double> values(const Distribution& p) { return {p.values().begin(), p.values().end()}; }

inline double max_diff(const Conjunction& a, const Conjunction& b)
{
    double d = std::abs(a.conflict - b.conflict);
    for (const auto& [set, v] : a.masses)
        d = std::max(d, std::abs(v - b.mass(set)));
    for (const auto& [set, v] : b.masses)
        d = std::max(d, std::abs(v - a.mass(set)));
    return d;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Spreads `total` over the singletons with random positive weights.
inline void fill_singletons(const Frame& frame, MassFunction::container& c, double total, std::mt19937_64& rng)
{
    if (total <= 0.0)
        return;
    std::exponential_distribution<double> w(1.0);
    std::vector<double> ws(frame.size());
    double sum = 0.0;
    for (auto& x : ws) {
        x = w(rng) + 1e-3;
        sum += x;
    }
    for (std::size_t i = 0; i < ws.size(); ++i)
        c[Subset::singleton(i)] += total * ws[i] / sum;
}

inline double sum_of(const MassFunction::container& c)
{
    double s = 0.0;
    for (const auto& [set, v] : c)
        s += v;
    return s;
}

} // namespace detail

// ---------------------------------------------------------------------------
// single-instance checks

/// Dempster and conjunctive combination of p with the intersection probability versus with varsigma.
inline TheoremReport check_combination_equivalence(const MassFunction& m, const Distribution& p)
{
    TheoremReport r{"combination_equivalence", 1};
    if (classify(m) == MassClass::bayesian)
        return r;
    const auto pm = MassFunction::from_distribution(p);
    const auto pb = MassFunction::from_distribution(intersection_probability(m));
    const auto vs = varsigma(m).mass;
    std::vector<double> lhs, rhs;
    double residual = 0.0;
    try {
        lhs = detail::singletons(dempster(pb, pm));
        rhs = detail::singletons(dempster(vs, pm));
        residual = detail::max_diff(lhs, rhs);
        residual = std::max(residual, detail::max_diff(detail::singletons(conjunctive(pb, pm)),
                                                       detail::singletons(conjunctive(vs, pm))));
    } catch (const total_conflict&) {
        r.trials = 0;
        r.note = "total conflict, trial skipped";
        return r;
    }
    r.record(residual, [&] {
        return json{{"m", to_json(m)}, {"p", to_json(p)}, {"p_bel_dempster_p", lhs}, {"varsigma_dempster_p", rhs}};
    });
    return r;
}

/// Relative plausibility and Bel give the same Dempster combination with any Bayesian p.
inline TheoremReport check_relative_plausibility_representation(const MassFunction& m, const Distribution& p)
{
    TheoremReport r{"relative_plausibility_representation", 1};
    const auto pm = MassFunction::from_distribution(p);
    try {
        const auto lhs = detail::singletons(dempster(MassFunction::from_distribution(relative_plausibility(m)), pm));
        const auto rhs = detail::singletons(dempster(m, pm));
        r.record(detail::max_diff(lhs, rhs), [&] { return json{{"m", to_json(m)}, {"p", to_json(p)}}; });
    } catch (const total_conflict&) {
        r.trials = 0;
        r.note = "total conflict, trial skipped";
    }
    return r;
}

struct AffineTerms {
    Distribution direct;
    Distribution closed_form;
    std::vector<double> t; ///< T[Bel1, Bel2]
};

/// Both sides of the closed form for the intersection probability of a1 m1 + (1 - a1) m2.
inline AffineTerms affine_formula_terms(const MassFunction& m1, const MassFunction& m2, double a1)
{
    require_same_frame(m1.frame(), m2.frame());
    if (a1 < 0.0 || a1 > 1.0)
        throw domain_error("check_affine_formula: a1 must lie in [0, 1]");
    const double a2 = 1.0 - a1;
    const auto t1 = singleton_totals(m1), t2 = singleton_totals(m2);
    const double d1 = t1.k_pl - t1.k_bel, d2 = t2.k_pl - t2.k_bel;
    if (d1 <= eps || d2 <= eps)
        throw domain_error("check_affine_formula: Bayesian input (D_i = 0)");
    const double b1 = beta(m1).value, b2 = beta(m2).value;
    const auto p1 = intersection_probability(m1), p2 = intersection_probability(m2);
    const auto s1 = m1.singleton_masses(), s2 = m2.singleton_masses();
    const auto pl1 = m1.singleton_plausibilities(), pl2 = m2.singleton_plausibilities();
    const std::size_t n = s1.size();

    std::vector<double> t(n), rhs(n);
    const double w1 = a1 * d1 / (a1 * d1 + a2 * d2), w2 = 1.0 - w1;
    for (std::size_t x = 0; x < n; ++x) {
        const double p21 = s2[x] + b1 * (pl2[x] - s2[x]);
        const double p12 = s1[x] + b2 * (pl1[x] - s1[x]);
        t[x] = (d1 * p21 + d2 * p12) / (d1 + d2);
    }
    for (std::size_t x = 0; x < n; ++x)
        rhs[x] = w1 * (a1 * p1[x] + a2 * t[x]) + w2 * (a1 * t[x] + a2 * p2[x]);
    auto direct = intersection_probability(affine({a1, a2}, {m1, m2}));
    return {std::move(direct), Distribution(m1.frame(), detail::snap_to_one(std::move(rhs))), std::move(t)};
}

inline TheoremReport check_affine_formula(const MassFunction& m1, const MassFunction& m2, double a1)
{
    TheoremReport r{"affine_formula", 1};
    const auto terms = affine_formula_terms(m1, m2, a1);
    double residual = max_abs_diff(terms.direct, terms.closed_form);
    // T must itself be a probability distribution.
    double sum = 0.0;
    for (double v : terms.t) {
        residual = std::max(residual, -v);
        sum += v;
    }
    residual = std::max(residual, std::abs(sum - 1.0));
    if (m1.frame().size() == 2) {
        const Subset theta = m1.frame().full();
        const double w1 = m1.mass(theta), w2 = m2.mass(theta);
        const auto p1 = intersection_probability(m1), p2 = intersection_probability(m2);
        for (std::size_t x = 0; x < 2; ++x)
            residual = std::max(residual, std::abs(terms.t[x] - (w1 * p2[x] + w2 * p1[x]) / (w1 + w2)));
    }
    r.record(residual, [&] {
        return json{{"m1", to_json(m1)},
                    {"m2", to_json(m2)},
                    {"a1", a1},
                    {"direct", to_json(terms.direct)},
                    {"closed_form", to_json(terms.closed_form)}};
    });
    return r;
}

struct CommutationResidual {
    double residual = 0.0;
    double alpha = 0.0; ///< grid weight attaining the residual
};

/// max over the interior grid of |p[a m1 + (1-a) m2] - (a p[m1] + (1-a) p[m2])|_inf
inline CommutationResidual commutation_residual(const MassFunction& m1, const MassFunction& m2)
{
    const auto p1 = intersection_probability(m1), p2 = intersection_probability(m2);
    CommutationResidual out;
    for (double a : alpha_grid) {
        const auto mixed = intersection_probability(affine({a, 1.0 - a}, {m1, m2}));
        double d = 0.0;
        for (std::size_t x = 0; x < p1.size(); ++x)
            d = std::max(d, std::abs(mixed[x] - (a * p1[x] + (1.0 - a) * p2[x])));
        if (d > out.residual)
            out = {d, a};
    }
    return out;
}

/// sigma_l(m1) sigma_k(m2) = sigma_k(m1) sigma_l(m2) for all l, k >= 2.
inline bool sigma_ratio_condition(const MassFunction& m1, const MassFunction& m2, double tol = eps)
{
    const auto s1 = cardinality_profile(m1).sigma, s2 = cardinality_profile(m2).sigma;
    for (std::size_t l = 2; l < s1.size(); ++l)
        for (std::size_t k = l + 1; k < s1.size(); ++k)
            if (std::abs(s1[l] * s2[k] - s1[k] * s2[l]) > tol)
                return false;
    return true;
}

/// Commutation of the intersection probability with affine combination:
/// a pair satisfying either the beta or the relative-uncertainty condition must commute,
/// the sigma-ratio condition must force equal beta, and an observed commuter must satisfy
/// one of the two conditions (up to the witness threshold).
inline TheoremReport check_commutation_criteria(const MassFunction& m1, const MassFunction& m2)
{
    TheoremReport r{"commutation_criteria", 1};
    if (classify(m1) == MassClass::bayesian || classify(m2) == MassClass::bayesian)
        throw domain_error("check_commutation_criteria: Bayesian input");
    const auto c = commutation_residual(m1, m2);
    const double db = std::abs(beta(m1).value - beta(m2).value);
    const double dr = max_abs_diff(relative_uncertainty(m1), relative_uncertainty(m2));
    const bool beta_equal = db <= eps, r_equal = dr <= eps;
    const bool sigma_ratio = sigma_ratio_condition(m1, m2);

    double residual = 0.0;
    if (beta_equal || r_equal)
        residual = c.residual;
    if (sigma_ratio)
        residual = std::max(residual, db);
    if (!beta_equal && !r_equal && c.residual <= eps) {
        const double gap = std::min(db, dr);
        if (gap > witness_threshold)
            residual = std::max(residual, gap);
    }
    r.record(residual, [&] {
        return json{{"m1", to_json(m1)},      {"m2", to_json(m2)},  {"commutation_residual", c.residual},
                    {"alpha", c.alpha},        {"beta_gap", db},      {"r_gap", dr},
                    {"sigma_ratio", sigma_ratio}};
    });
    if (c.residual > witness_threshold) {
        std::ostringstream os;
        os << "non-commutation witness at alpha=" << c.alpha << " residual=" << c.residual;
        r.note = os.str();
    }
    return r;
}

// ---------------------------------------------------------------------------
// constructed pairs

/// Same relative uncertainty, generally different beta: every focal element of size >= 3
/// is split over its pairs (which keeps Pl(x) - m(x)), then rescaled.
inline MassFunction r_equal_partner(const MassFunction& m, std::mt19937_64& rng)
{
    MassFunction::container c;
    const std::size_t n = m.frame().size();
    for (const auto& [set, w] : m.focal()) {
        const std::size_t k = set.size();
        if (k == 1)
            continue;
        if (k == 2) {
            c[set] += w;
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (set.contains(i) && set.contains(j))
                    c[Subset::singleton(i) | Subset::singleton(j)] += w / static_cast<double>(k - 1);
    }
    const double scale = detail::uniform(rng, .2, .9) / detail::sum_of(c);
    for (auto& [set, v] : c)
        v *= scale;
    detail::fill_singletons(m.frame(), c, 1.0 - detail::sum_of(c), rng);
    return MassFunction(m.frame(), std::move(c));
}

/// Same beta, generally different relative uncertainty: mass a on one random pair and b on the
/// whole frame with a / b = (n beta - 1) / (1 - 2 beta).
inline MassFunction beta_equal_partner(const MassFunction& m, std::mt19937_64& rng)
{
    const std::size_t n = m.frame().size();
    const double b = beta(m).value;
    const double total = detail::uniform(rng, .2, .9);
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    if (j >= i)
        ++j;
    const Subset pair = Subset::singleton(i) | Subset::singleton(j);
    MassFunction::container c;
    if (std::abs(1.0 - 2.0 * b) <= 1e-12) {
        c[pair] = total;
    } else {
        const double ratio = (static_cast<double>(n) * b - 1.0) / (1.0 - 2.0 * b);
        c[pair] += total * ratio / (1.0 + ratio);
        c[m.frame().full()] += total / (1.0 + ratio);
    }
    detail::fill_singletons(m.frame(), c, 1.0 - detail::sum_of(c), rng);
    return MassFunction(m.frame(), std::move(c));
}

/// Cardinality profile proportional to that of m on sizes >= 2, with fresh random focal sets.
inline MassFunction sigma_ratio_partner(const MassFunction& m, std::mt19937_64& rng)
{
    const auto sigma = cardinality_profile(m).sigma;
    double upper = 0.0;
    for (std::size_t k = 2; k < sigma.size(); ++k)
        upper += sigma[k];
    const double c = detail::uniform(rng, .2, 1.0) / upper;
    std::exponential_distribution<double> w(1.0);
    MassFunction::container out;
    const Frame& frame = m.frame();
    for (std::size_t k = 2; k < sigma.size(); ++k) {
        if (sigma[k] <= 0.0)
            continue;
        std::vector<std::pair<Subset, double>> sets;
        double sum = 0.0;
        for (mask_t a = 1; a < frame.subset_count(); ++a)
            if (Subset(a).size() == k) {
                sets.emplace_back(Subset(a), w(rng));
                sum += sets.back().second;
            }
        for (const auto& [s, x] : sets)
            out[s] += c * sigma[k] * x / sum;
    }
    detail::fill_singletons(frame, out, 1.0 - detail::sum_of(out), rng);
    return MassFunction(frame, std::move(out));
}

/// m with its singleton labels shuffled; the cardinality profile is unchanged.
inline MassFunction permuted_partner(const MassFunction& m, std::mt19937_64& rng)
{
    std::vector<std::size_t> perm(m.frame().size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    MassFunction::container c;
    for (const auto& [set, v] : m.focal()) {
        Subset image;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (set.contains(i))
                image = image | Subset::singleton(perm[i]);
        c[image] += v;
    }
    return MassFunction(m.frame(), std::move(c));
}

/// Random mass whose focal elements all have size 1 or k.
inline MassFunction two_size_mass(const Frame& frame, std::uint64_t seed, std::size_t k)
{
    return random_mass_with_sizes(frame, seed, [k](std::size_t s) { return s == 1 || s == k; });
}

// ---------------------------------------------------------------------------
// randomized suites

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t n_lo = 2;
    std::size_t n_hi = 6;
};

/// Per-trial context: frame size cycles through [n_lo, n_hi], RNG seeded with seed + trial.
struct Trial {
    std::size_t index;
    Frame frame;
    std::mt19937_64 rng;

    std::uint64_t next_seed() { return rng(); }
    MassFunction mass(MassProfile profile = MassProfile::dense()) { return random_mass(frame, next_seed(), profile); }
    Distribution distribution() { return random_distribution(frame, next_seed()); }
};

namespace detail {

inline TheoremReport run_suite(const std::string& id, double tolerance, const SuiteConfig& cfg,
                               const std::function<TheoremReport(Trial&)>& body)
{
    if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo)
        throw domain_error("suite '" + id + "': bad frame size range");
    TheoremReport total{id, 0, 0.0, tolerance};
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t n = cfg.n_lo + t % (cfg.n_hi - cfg.n_lo + 1);
        Trial trial{t, Frame::of_size(n), std::mt19937_64(cfg.seed + t)};
        try {
            auto one = body(trial);
            one.tolerance = tolerance;
            total.absorb(one);
        } catch (const total_conflict&) {
        } catch (const std::exception& e) {
            TheoremReport failed{id, 1, std::numeric_limits<double>::infinity(), tolerance, false};
            failed.counterexample = json{{"trial", t}, {"seed", cfg.seed + t}, {"n", n}, {"error", e.what()}};
            total.absorb(failed);
        }
    }
    total.pass = total.max_residual <= tolerance;
    return total;
}

/// Wraps a residual computation as a one-trial report.
inline TheoremReport single(const std::string& id, double residual, const std::function<json()>& inputs)
{
    TheoremReport r{id, 1, residual};
    r.pass = residual <= r.tolerance;
    if (!r.pass)
        r.counterexample = inputs();
    return r;
}

} // namespace detail

inline TheoremReport suite_combination_equivalence(const SuiteConfig& cfg)
{
    return detail::run_suite("combination_equivalence", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        return check_combination_equivalence(m, t.distribution());
    });
}

inline TheoremReport suite_relative_plausibility_representation(const SuiteConfig& cfg)
{
    return detail::run_suite("relative_plausibility_representation", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        return check_relative_plausibility_representation(m, t.distribution());
    });
}

inline TheoremReport suite_affine_formula(const SuiteConfig& cfg)
{
    return detail::run_suite("affine_formula", eps, cfg, [](Trial& t) {
        const auto m1 = t.mass(), m2 = t.mass();
        TheoremReport r{"affine_formula", 0};
        for (double a : alpha_grid)
            r.absorb(check_affine_formula(m1, m2, a));
        r.trials = 1;
        return r;
    });
}

/// Constructed pairs that satisfy a commutation condition, cycling through five constructions.
inline TheoremReport suite_commutation_constructed(const SuiteConfig& cfg)
{
    return detail::run_suite("commutation_constructed", eps, cfg, [](Trial& t) {
        switch (t.index % 5) {
        case 0: {
            const auto m = t.mass();
            return check_commutation_criteria(m, r_equal_partner(m, t.rng));
        }
        case 1: {
            const auto m = t.mass();
            return check_commutation_criteria(m, beta_equal_partner(m, t.rng));
        }
        case 2: {
            const auto m = t.mass();
            return check_commutation_criteria(m, sigma_ratio_partner(m, t.rng));
        }
        case 3: {
            const auto p = MassProfile::k_additive(2);
            const auto m1 = t.mass(p), m2 = t.mass(p);
            return check_commutation_criteria(m1, m2);
        }
        default: {
            const auto m = t.mass();
            return check_commutation_criteria(m, permuted_partner(m, t.rng));
        }
        }
    });
}

/// Generic random pairs: the criteria check must hold, and at least 95% must show a witness.
inline TheoremReport suite_noncommutation_witness(const SuiteConfig& cfg)
{
    std::size_t witnesses = 0;
    auto r = detail::run_suite("noncommutation_witness", eps, cfg, [&](Trial& t) {
        const auto m1 = t.mass(), m2 = t.mass();
        auto one = check_commutation_criteria(m1, m2);
        if (commutation_residual(m1, m2).residual > witness_threshold)
            ++witnesses;
        return one;
    });
    const double missing = cfg.trials ? 1.0 - static_cast<double>(witnesses) / static_cast<double>(cfg.trials) : 0.0;
    r.note = "witnesses " + std::to_string(witnesses) + "/" + std::to_string(cfg.trials);
    if (missing > 0.05) {
        r.pass = false;
        r.note += " (below 95%)";
    }
    return r;
}

inline TheoremReport suite_mobius_identity(const SuiteConfig& cfg)
{
    return detail::run_suite("mobius_identity", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto mu = mobius_plausibility(m);
        const std::size_t n = m.frame().size();
        double residual = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            double s = 0.0;
            for (mask_t a = 1; a < m.frame().subset_count(); ++a)
                if (Subset(a).contains(x))
                    s += mu(Subset(a));
            residual = std::max(residual, std::abs(s - m.mass(Subset::singleton(x))));
        }
        double k = 0.0;
        for (const auto& [set, v] : m.focal())
            k += v * static_cast<double>(set.size());
        residual = std::max(residual, std::abs(k - singleton_totals(m).k_pl));
        return detail::single("mobius_identity", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_intersection_forms(const SuiteConfig& cfg)
{
    return detail::run_suite("intersection_forms", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto sys = from_belief(m);
        const auto p = intersection_probability(sys);
        double residual = max_abs_diff(p, intersection_probability_via_uncertainty(sys));
        if (!contains(sys, p))
            residual = std::max(residual, 1.0);
        // p = (1 - beta) k_Bel relBel + beta k_Pl relPl
        const double b = beta(sys).value;
        const auto tt = singleton_totals(m);
        const auto rb = relative_belief(m), rp = relative_plausibility(m);
        for (std::size_t x = 0; x < p.size(); ++x)
            residual = std::max(residual, std::abs(p[x] - ((1 - b) * tt.k_bel * rb[x] + b * tt.k_pl * rp[x])));
        return detail::single("intersection_forms", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_segment_decompositions(const SuiteConfig& cfg)
{
    return detail::run_suite("segment_decompositions", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto tt = singleton_totals(m);
        const auto p = intersection_probability(m);
        const auto rb = relative_belief(m), rp = relative_plausibility(m), ru = relative_uncertainty(m);
        const double ratio = tt.k_bel / tt.k_pl;
        double residual = 0.0;
        for (std::size_t x = 0; x < p.size(); ++x) {
            residual = std::max(residual, std::abs(p[x] - (tt.k_bel * rb[x] + (1 - tt.k_bel) * ru[x])));
            residual = std::max(residual, std::abs(rp[x] - (ratio * rb[x] + (1 - ratio) * ru[x])));
        }
        return detail::single("segment_decompositions", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_beta_reconstruction(const SuiteConfig& cfg)
{
    return detail::run_suite("beta_reconstruction", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const double residual = std::abs(cardinality_profile(m).beta() - beta(m).value);
        return detail::single("beta_reconstruction", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_pignistic_vertex_mean(const SuiteConfig& cfg)
{
    return detail::run_suite("pignistic_vertex_mean", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto vs = permutation_vertices(m);
        std::vector<double> mean(m.frame().size(), 0.0);
        for (const auto& v : vs)
            for (std::size_t x = 0; x < mean.size(); ++x)
                mean[x] += v[x] / static_cast<double>(vs.size());
        const double residual = detail::max_diff(mean, detail::values(pignistic(m)));
        return detail::single("pignistic_vertex_mean", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

/// Lower simplex vertices are proper and lie in the singleton-constraint polytope.
inline TheoremReport suite_lower_simplex_proper(const SuiteConfig& cfg)
{
    return detail::run_suite("lower_simplex_proper", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto ms = m.singleton_masses();
        const auto lo = lower_simplex(m);
        double residual = 0.0;
        for (const auto& v : lo.vertices())
            for (std::size_t x = 0; x < ms.size(); ++x)
                residual = std::max({residual, -v[x], ms[x] - v[x]});
        return detail::single("lower_simplex_proper", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

/// Lower simplex vertices dominate m(x); upper simplex vertices stay below Pl(x).
inline TheoremReport suite_simplex_dominance(const SuiteConfig& cfg)
{
    return detail::run_suite("simplex_dominance", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto ms = m.singleton_masses(), pl = m.singleton_plausibilities();
        const auto lo = lower_simplex(m), up = upper_simplex(m);
        double residual = 0.0;
        for (const auto& v : lo.vertices())
            for (std::size_t x = 0; x < ms.size(); ++x)
                residual = std::max(residual, ms[x] - v[x]);
        for (const auto& v : up.vertices())
            for (std::size_t x = 0; x < pl.size(); ++x)
                residual = std::max(residual, v[x] - pl[x]);
        return detail::single("simplex_dominance", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_rule_linearity(const SuiteConfig& cfg)
{
    return detail::run_suite("rule_linearity", eps, cfg, [](Trial& t) {
        const auto m = t.mass(), m1 = t.mass(), m2 = t.mass();
        const double a = detail::uniform(t.rng, 0.0, 1.0);
        const auto mix = affine({a, 1 - a}, {m1, m2});
        const auto c = conjunctive(m, mix), c1 = conjunctive(m, m1), c2 = conjunctive(m, m2);
        Conjunction expected{m.frame(), {}, a * c1.conflict + (1 - a) * c2.conflict};
        for (const auto& [s, v] : c1.masses)
            expected.masses[s] += a * v;
        for (const auto& [s, v] : c2.masses)
            expected.masses[s] += (1 - a) * v;
        double residual = detail::max_diff(c, expected);
        const auto d = disjunctive(m, mix);
        const auto d_expected = affine({a, 1 - a}, {disjunctive(m, m1), disjunctive(m, m2)});
        residual = std::max(residual, max_abs_diff(d, d_expected));
        return detail::single("rule_linearity", residual, [&] {
            return json{{"m", to_json(m)}, {"m1", to_json(m1)}, {"m2", to_json(m2)}, {"a", a}};
        });
    });
}

inline TheoremReport suite_dempster_affine_gamma(const SuiteConfig& cfg)
{
    return detail::run_suite("dempster_affine_gamma", eps, cfg, [](Trial& t) {
        const auto m = t.mass(), m1 = t.mass(), m2 = t.mass();
        const double a = detail::uniform(t.rng, 0.0, 1.0);
        const double k1 = normalization_factor(m, m1), k2 = normalization_factor(m, m2);
        const double g1 = a * k1 / (a * k1 + (1 - a) * k2);
        const auto lhs = dempster(m, affine({a, 1 - a}, {m1, m2}));
        const auto rhs = affine({g1, 1 - g1}, {dempster(m, m1), dempster(m, m2)});
        return detail::single("dempster_affine_gamma", max_abs_diff(lhs, rhs), [&] {
            return json{{"m", to_json(m)}, {"m1", to_json(m1)}, {"m2", to_json(m2)}, {"a", a}};
        });
    });
}

inline TheoremReport suite_barycentre_combination(const SuiteConfig& cfg)
{
    return detail::run_suite("barycentre_combination", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const double b = beta(m).value;
        const auto lo = barycentre(lower_simplex(m)), up = barycentre(upper_simplex(m));
        const auto p = intersection_probability(m);
        double residual = 0.0;
        for (std::size_t x = 0; x < p.size(); ++x)
            residual = std::max(residual, std::abs(p[x] - (b * up[x] + (1 - b) * lo[x])));
        return detail::single("barycentre_combination", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

/// Masses with focal sizes in {1, k}: pignistic equals the intersection probability.
inline TheoremReport suite_two_size_pignistic(const SuiteConfig& cfg)
{
    return detail::run_suite("two_size_pignistic", eps, cfg, [](Trial& t) {
        const std::size_t k = 2 + t.index % (std::min<std::size_t>(4, t.frame.size()) - 1);
        const auto m = two_size_mass(t.frame, t.next_seed(), k);
        const double residual = max_abs_diff(pignistic(m), intersection_probability(m));
        return detail::single("two_size_pignistic", residual, [&] { return json{{"m", to_json(m)}, {"k", k}}; });
    });
}

/// Affine coordinates of the intersection probability in both simplices equal R.
inline TheoremReport suite_simplex_coordinates(const SuiteConfig& cfg)
{
    return detail::run_suite("simplex_coordinates", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto p = intersection_probability(m);
        const auto r = detail::values(relative_uncertainty(m));
        const double residual = std::max(detail::max_diff(affine_coords(p, lower_simplex(m)), r),
                                         detail::max_diff(affine_coords(p, upper_simplex(m)), r));
        return detail::single("simplex_coordinates", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

/// Special focus of the upper and lower simplices: the intersection probability, at coordinate
/// beta from the upper side and 1 - beta from the lower side.
inline TheoremReport suite_special_focus(const SuiteConfig& cfg)
{
    return detail::run_suite("special_focus", line_tolerance, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto p = intersection_probability(m);
        const double b = beta(m).value;
        const auto lo = lower_simplex(m), up = upper_simplex(m);
        const auto f_ul = special_focus(up, lo), f_lu = special_focus(lo, up);
        double residual = std::numeric_limits<double>::infinity();
        if (f_ul && f_lu && f_ul->common_alpha && f_lu->common_alpha)
            residual = std::max({max_abs_diff(f_ul->point, p), max_abs_diff(f_lu->point, p),
                                 std::abs(*f_ul->common_alpha - b), std::abs(*f_lu->common_alpha - (1 - b))});
        TheoremReport r{"special_focus", 1, 0.0, line_tolerance};
        r.record(residual, [&] { return json{{"m", to_json(m)}}; });
        return r;
    });
}

/// Relative belief and relative plausibility are special foci of the probability simplex with
/// the lower and upper simplex; the coordinates are 1 - 1/k_Bel and 1 - 1/k_Pl.
inline TheoremReport suite_relative_foci(const SuiteConfig& cfg)
{
    return detail::run_suite("relative_foci", line_tolerance, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto tt = singleton_totals(m);
        const auto corners = probability_simplex(m.frame());
        const auto f_lo = special_focus(corners, lower_simplex(m));
        const auto f_up = special_focus(corners, upper_simplex(m));
        double residual = std::numeric_limits<double>::infinity();
        if (f_lo && f_up && f_lo->common_alpha && f_up->common_alpha)
            residual = std::max({max_abs_diff(f_lo->point, relative_belief(m)),
                                 max_abs_diff(f_up->point, relative_plausibility(m)),
                                 std::abs(*f_lo->common_alpha - (1 - 1 / tt.k_bel)),
                                 std::abs(*f_up->common_alpha - (1 - 1 / tt.k_pl))});
        TheoremReport r{"relative_foci", 1, 0.0, line_tolerance};
        r.record(residual, [&] { return json{{"m", to_json(m)}}; });
        return r;
    });
}

/// A special focus has the same affine coordinates in both simplices (under the pairing).
inline TheoremReport suite_special_focus_coordinates(const SuiteConfig& cfg)
{
    return detail::run_suite("special_focus_coordinates", 1e-7, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto corners = probability_simplex(m.frame());
        const std::pair<Simplex, Simplex> pairs[] = {
            {lower_simplex(m), upper_simplex(m)}, {corners, lower_simplex(m)}, {corners, upper_simplex(m)}};
        double residual = 0.0;
        for (const auto& [s, u] : pairs) {
            const auto f = special_focus(s, u);
            if (!f)
                continue;
            const auto a = affine_coords(f->point, s), b = affine_coords(f->point, u);
            for (std::size_t i = 0; i < a.size(); ++i)
                residual = std::max(residual, std::abs(a[i] - b[f->permutation[i]]));
        }
        TheoremReport r{"special_focus_coordinates", 1, 0.0, 1e-7};
        r.record(residual, [&] { return json{{"m", to_json(m)}}; });
        return r;
    });
}

/// Lower simplex vertices are affinely independent for non-Bayesian m.
inline TheoremReport suite_lower_simplex_rank(const SuiteConfig& cfg)
{
    return detail::run_suite("lower_simplex_rank", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const double residual = lower_simplex(m).degenerate() ? 1.0 : 0.0;
        return detail::single("lower_simplex_rank", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_credal_vertices(const SuiteConfig& cfg)
{
    return detail::run_suite("credal_vertices_dominate", eps, cfg, [](Trial& t) {
        const auto m = t.mass();
        const auto bel = belief_values(m);
        double residual = 0.0;
        for (const auto& v : credal_vertices(m))
            for (mask_t a = 1; a < m.frame().subset_count(); ++a)
                residual = std::max(residual, bel(Subset(a)) - v.probability(Subset(a)));
        return detail::single("credal_vertices_dominate", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

inline TheoremReport suite_credal_decomposition(const SuiteConfig& cfg, std::size_t grid_points = 2000)
{
    return detail::run_suite("credal_decomposition", eps, cfg, [grid_points](Trial& t) {
        const auto m = t.mass(t.index % 2 ? MassProfile::dense() : MassProfile::k_additive(2));
        const double residual = credal_decomposition_check(m, grid_points) ? 0.0 : 1.0;
        return detail::single("credal_decomposition", residual, [&] { return json{{"m", to_json(m)}}; });
    });
}

/// Every suite, in a fixed order. Geometry suites run on n >= 3; the grid check on a subset of trials.
inline std::vector<TheoremReport> run_all(std::uint64_t seed, std::size_t trials, std::size_t max_n)
{
    if (max_n > 6)
        throw domain_error("run_all: max_n must be at most 6");
    if (max_n < 2)
        throw domain_error("run_all: max_n must be at least 2");
    std::vector<TheoremReport> out;
    if (trials == 0)
        return out;
    const SuiteConfig all{seed, trials, 2, max_n};
    out.push_back(suite_mobius_identity(all));
    out.push_back(suite_intersection_forms(all));
    out.push_back(suite_segment_decompositions(all));
    out.push_back(suite_beta_reconstruction(all));
    out.push_back(suite_two_size_pignistic(all));
    out.push_back(suite_rule_linearity(all));
    out.push_back(suite_dempster_affine_gamma(all));
    out.push_back(suite_relative_plausibility_representation(all));
    out.push_back(suite_combination_equivalence(all));
    out.push_back(suite_pignistic_vertex_mean(all));
    out.push_back(suite_credal_vertices(all));
    out.push_back(suite_lower_simplex_proper(all));
    out.push_back(suite_simplex_dominance(all));
    out.push_back(suite_barycentre_combination(all));
    out.push_back(suite_lower_simplex_rank(all));
    out.push_back(suite_affine_formula(all));
    out.push_back(suite_commutation_constructed(all));
    out.push_back(suite_credal_decomposition({seed, std::min<std::size_t>(trials, 10), 2, max_n}));
    if (max_n >= 3) {
        const SuiteConfig geo{seed, trials, 3, max_n};
        out.push_back(suite_simplex_coordinates(geo));
        out.push_back(suite_special_focus(geo));
        out.push_back(suite_relative_foci(geo));
        out.push_back(suite_special_focus_coordinates(geo));
        out.push_back(suite_noncommutation_witness(geo));
    }
    return out;
}

} // namespace intprob
