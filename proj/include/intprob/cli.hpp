#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "belief.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"
#include "geometry.hpp"
#include "intervals.hpp"
#include "io.hpp"
#include "random.hpp"
#include "transforms.hpp"
#include "verify.hpp"

namespace intprob::cli {

enum ExitCode : int { ok = 0, parse_failure = 1, domain_failure = 2, verification_failure = 3 };

/// Transform names accepted for mass documents; the first three also apply to interval systems.
inline const std::vector<std::string>& transform_names()
{
    static const std::vector<std::string> names{"intersection", "relative_uncertainty", "PraPl",
                                                "pignistic",    "relative_belief",      "relative_plausibility",
                                                "PrPl",         "PrBel",                "PrNPl"};
    return names;
}

inline Distribution apply_transform(const Document& doc, const std::string& name)
{
    if (std::find(transform_names().begin(), transform_names().end(), name) == transform_names().end())
        throw parse_error("unknown transform '" + name + "'");
    if (const auto* sys = std::get_if<IntervalSystem>(&doc)) {
        if (name == "intersection")
            return intersection_probability(*sys);
        if (name == "relative_uncertainty")
            return relative_uncertainty(*sys);
        if (name == "PraPl")
            return pra_pl_interval(*sys);
        throw domain_error("transform '" + name + "' needs a mass function, not an interval system");
    }
    const auto& m = std::get<MassFunction>(doc);
    if (m.pseudo())
        throw domain_error("transforms need a proper mass function");
    if (name == "intersection")
        return intersection_probability(m);
    if (name == "relative_uncertainty")
        return relative_uncertainty(m);
    if (name == "pignistic")
        return pignistic(m);
    if (name == "relative_belief")
        return relative_belief(m);
    if (name == "relative_plausibility")
        return relative_plausibility(m);
    return sudano(m, parse_sudano(name));
}

namespace detail {

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw parse_error("cannot write '" + path + "'");
    f << text << '\n';
}

template <typename F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return parse_failure;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return domain_failure;
    }
}

inline json vertices_json(const std::vector<Distribution>& vs)
{
    json a = json::array();
    for (const auto& v : vs)
        a.push_back(to_json(v));
    return a;
}

inline json focus_json(const std::optional<FocusResult>& f)
{
    if (!f)
        return nullptr;
    json coords = json::array();
    for (double a : f->line_coordinates)
        coords.push_back(std::isnan(a) ? json(nullptr) : json(a));
    json perm = json::array();
    for (std::size_t i : f->permutation)
        perm.push_back(f->point.frame().label(i));
    return {{"point", to_json(f->point)},
            {"permutation", perm},
            {"line_coordinates", coords},
            {"special", f->special},
            {"common_alpha", f->common_alpha ? json(*f->common_alpha) : json(nullptr)},
            {"degenerate", f->degenerate}};
}

/// Equilateral-triangle coordinates for a point of the ternary simplex.
inline json planar(const Distribution& p)
{
    return json::array({p[1] + 0.5 * p[2], std::sqrt(3.0) / 2.0 * p[2]});
}

} // namespace detail

inline json geometry_document(const MassFunction& m)
{
    const Frame& frame = m.frame();
    if (frame.size() > 8)
        throw size_error("geometry: frame larger than 8");
    if (m.pseudo())
        throw domain_error("geometry: pseudo mass functions have no credal set");
    const auto corners = probability_simplex(frame);
    const auto lo = lower_simplex(m), up = upper_simplex(m);
    const auto credal = credal_vertices(m);
    const bool bayesian = classify(m) == MassClass::bayesian;
    const auto tt = singleton_totals(m);

    json points{{"intersection", to_json(intersection_probability(m))},
                {"pignistic", to_json(pignistic(m))},
                {"relative_plausibility", to_json(relative_plausibility(m))}};
    if (tt.k_bel > eps)
        points["relative_belief"] = to_json(relative_belief(m));
    if (!bayesian)
        points["relative_uncertainty"] = to_json(relative_uncertainty(m));

    json doc{{"frame", frame.labels()},
             {"class", to_string(classify(m))},
             {"degenerate", bayesian},
             {"probability_simplex", detail::vertices_json(corners.vertices())},
             {"credal_vertices", detail::vertices_json(credal)},
             {"lower_simplex", {{"vertices", detail::vertices_json(lo.vertices())}, {"degenerate", lo.degenerate()}}},
             {"upper_simplex", {{"vertices", detail::vertices_json(up.vertices())}, {"degenerate", up.degenerate()}}},
             {"points", points}};
    if (!bayesian)
        doc["beta"] = beta(m).value;

    if (frame.size() >= 2) {
        doc["foci"] = {{"lower_upper", detail::focus_json(special_focus(lo, up))},
                       {"upper_lower", detail::focus_json(special_focus(up, lo))},
                       {"probability_lower", detail::focus_json(special_focus(corners, lo))},
                       {"probability_upper", detail::focus_json(special_focus(corners, up))}};
    }

    if (frame.size() == 3) {
        auto project = [](const std::vector<Distribution>& vs) {
            json a = json::array();
            for (const auto& v : vs)
                a.push_back(detail::planar(v));
            return a;
        };
        json marked = json::object();
        for (auto it = points.begin(); it != points.end(); ++it)
            marked[it.key()] = detail::planar(distribution_from_json(frame, it.value()));
        doc["projection"] = {{"probability_simplex", project(corners.vertices())},
                             {"credal_vertices", project(credal)},
                             {"lower_simplex", project(lo.vertices())},
                             {"upper_simplex", project(up.vertices())},
                             {"points", marked}};
    }
    return doc;
}

inline int cmd_transform(const std::string& input, const std::string& name, const std::string& output,
                         std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto doc = read_document(input);
        const auto p = apply_transform(doc, name);
        detail::write_output(output, to_json(p).dump(), out);
        return ok;
    });
}

inline int cmd_geometry(const std::string& input, const std::string& output, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto doc = read_document(input);
        const auto* m = std::get_if<MassFunction>(&doc);
        if (!m)
            throw domain_error("geometry needs a mass function document");
        detail::write_output(output, geometry_document(*m).dump(2), out);
        return ok;
    });
}

/// One JSON line per report; exit 3 when any report fails.
inline int cmd_verify(std::uint64_t seed, std::size_t trials, std::size_t max_n, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto reports = run_all(seed, trials, max_n);
        bool all = true;
        for (const auto& r : reports) {
            out << to_json(r).dump() << '\n';
            if (!r.pass) {
                all = false;
                err << "FAILED " << r.id << " max_residual=" << std::setprecision(6) << r.max_residual
                    << " tolerance=" << r.tolerance << '\n';
                if (r.counterexample)
                    err << "  counterexample: " << r.counterexample->dump() << '\n';
            }
        }
        return all ? ok : verification_failure;
    });
}

struct Ranked {
    std::string option;
    double expected_utility;
};

/// Expected utility of each option under `p`, best first; ties go to the lexicographically smaller name.
inline std::vector<Ranked> rank_options(const Distribution& p, const json& utilities)
{
    if (!utilities.is_object() || utilities.empty())
        throw parse_error("utilities document must map option names to payoff objects");
    std::vector<Ranked> out;
    for (auto it = utilities.begin(); it != utilities.end(); ++it) {
        if (!it.value().is_object())
            throw parse_error("payoffs for option '" + it.key() + "' must be an object keyed by label");
        double eu = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto& label = p.frame().label(i);
            if (!it.value().contains(label))
                throw domain_error("option '" + it.key() + "' has no payoff for singleton '" + label + "'");
            const auto& v = it.value()[label];
            if (!v.is_number())
                throw parse_error("payoff " + it.key() + "." + label + " must be a number");
            eu += p[i] * v.get<double>();
        }
        out.push_back({it.key(), eu});
    }
    std::stable_sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
        if (a.expected_utility != b.expected_utility)
            return a.expected_utility > b.expected_utility;
        return a.option < b.option;
    });
    return out;
}

inline int cmd_decide(const std::string& input, const std::string& utilities, const std::string& name,
                      std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto doc = read_document(input);
        const auto p = apply_transform(doc, name);
        const auto ranking = rank_options(p, read_json_file(utilities));
        out << std::setprecision(6);
        out << "choice: " << ranking.front().option << " (expected utility " << ranking.front().expected_utility
            << ")\n";
        for (std::size_t i = 0; i < ranking.size(); ++i)
            out << i + 1 << ". " << ranking[i].option << ' ' << ranking[i].expected_utility << '\n';
        return ok;
    });
}

inline int cmd_random(const Frame& frame, std::uint64_t seed, const std::string& profile, const std::string& output,
                      std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto m = random_mass(frame, seed, parse_profile(profile));
        detail::write_output(output, to_json(m).dump(2), out);
        return ok;
    });
}

} // namespace intprob::cli
