#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "belief.hpp"
#include "core.hpp"
#include "distribution.hpp"
#include "frame.hpp"
#include "intervals.hpp"

namespace intprob {

using json = nlohmann::json;

inline json to_json(const Frame& frame, Subset a) { return json(frame.labels_of(a)); }

inline json to_json(const Distribution& p)
{
    json j = json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        j[p.frame().label(i)] = p[i];
    return j;
}

inline json to_json(const MassFunction& m)
{
    json masses = json::array();
    for (const auto& [set, value] : m.focal())
        masses.push_back({{"set", to_json(m.frame(), set)}, {"mass", value}});
    return {{"frame", m.frame().labels()}, {"masses", masses}, {"pseudo", m.pseudo()}};
}

inline json to_json(const IntervalSystem& sys)
{
    json lower = json::object(), upper = json::object();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        lower[sys.frame().label(i)] = sys.lower(i);
        upper[sys.frame().label(i)] = sys.upper(i);
    }
    return {{"frame", sys.frame().labels()}, {"lower", lower}, {"upper", upper}};
}

namespace detail {

inline Frame frame_from_json(const json& j)
{
    if (!j.contains("frame") || !j["frame"].is_array())
        throw parse_error("document has no \"frame\" array");
    std::vector<std::string> labels;
    for (const auto& l : j["frame"]) {
        if (!l.is_string())
            throw parse_error("frame labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    try {
        return Frame(std::move(labels));
    } catch (const size_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(e.what());
    }
}

inline double number(const json& j, const std::string& what)
{
    if (!j.is_number())
        throw parse_error(what + " must be a number");
    return j.get<double>();
}

inline std::vector<double> per_label(const Frame& frame, const json& j, const std::string& what)
{
    if (!j.is_object())
        throw parse_error("\"" + what + "\" must be an object keyed by label");
    std::vector<double> v(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (!j.contains(frame.label(i)))
            throw parse_error("\"" + what + "\" has no entry for '" + frame.label(i) + "'");
        v[i] = number(j[frame.label(i)], what + "." + frame.label(i));
    }
    if (j.size() != frame.size())
        throw parse_error("\"" + what + "\" has labels outside the frame");
    return v;
}

} // namespace detail

inline MassFunction mass_from_json(const json& j)
{
    const Frame frame = detail::frame_from_json(j);
    if (!j.contains("masses") || !j["masses"].is_array())
        throw parse_error("mass document has no \"masses\" array");
    const bool pseudo = j.contains("pseudo") ? j["pseudo"].get<bool>() : false;
    std::vector<std::pair<Subset, double>> entries;
    for (const auto& e : j["masses"]) {
        if (!e.is_object() || !e.contains("set") || !e.contains("mass") || !e["set"].is_array())
            throw parse_error("mass entries need a \"set\" array and a \"mass\" number");
        std::vector<std::string> names;
        for (const auto& l : e["set"]) {
            if (!l.is_string())
                throw parse_error("set members must be label strings");
            names.push_back(l.get<std::string>());
        }
        entries.emplace_back(frame.subset_of(names), detail::number(e["mass"], "mass"));
    }
    return MassFunction(frame, entries, pseudo);
}

inline IntervalSystem intervals_from_json(const json& j)
{
    const Frame frame = detail::frame_from_json(j);
    if (!j.contains("lower") || !j.contains("upper"))
        throw parse_error("interval document needs \"lower\" and \"upper\"");
    return IntervalSystem(frame, detail::per_label(frame, j["lower"], "lower"),
                          detail::per_label(frame, j["upper"], "upper"));
}

inline Distribution distribution_from_json(const Frame& frame, const json& j)
{
    return Distribution(frame, detail::per_label(frame, j, "distribution"));
}

using Document = std::variant<MassFunction, IntervalSystem>;

/// Chooses the document kind by its keys: "masses" or "lower"/"upper".
inline Document document_from_json(const json& j)
{
    if (!j.is_object())
        throw parse_error("document must be a JSON object");
    const bool mass = j.contains("masses");
    const bool intervals = j.contains("lower") || j.contains("upper");
    if (mass == intervals)
        throw parse_error("cannot tell document kind (expected \"masses\" or \"lower\"/\"upper\")");
    try {
        if (mass)
            return mass_from_json(j);
        return intervals_from_json(j);
    } catch (const size_error&) {
        throw;
    } catch (const domain_error& e) {
        throw parse_error(std::string("invalid document: ") + e.what());
    }
}

inline json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

inline Document read_document(const std::string& path)
{
    const json j = read_json_file(path);
    try {
        return document_from_json(j);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed document: ") + e.what());
    }
}

} // namespace intprob
