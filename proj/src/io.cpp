#include "hq/io.hpp"

#include "hq/error.hpp"

#include <fstream>
#include <limits>

namespace hq::io {

namespace {

json condition_json(const Condition& c) { return {{"node", to_json(c.node)}, {"value", to_json(c.value)}}; }

json conditions_json(const std::vector<Condition>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(condition_json(c));
    return out;
}

const char* action_name(ProvenanceEntry::Action a) {
    switch (a) {
        case ProvenanceEntry::Action::MovedToLeft: return "moved_to_left";
        case ProvenanceEntry::Action::MergedDuplicate: return "merged_duplicate";
        case ProvenanceEntry::Action::Implied: return "implied";
    }
    return "?";
}

std::vector<Condition> side_from_json(const json& j, const std::string& name) {
    if (!j.contains(name)) return {};
    const json& list = j.at(name);
    if (!list.is_array()) throw ParseError(name + ": expected a list of conditions");
    std::vector<Condition> out;
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string path = name + "[" + std::to_string(n) + "]";
        const json& item = list[n];
        if (!item.is_object() || !item.contains("node") || !item.contains("value"))
            throw ParseError(path + ": expected an object with \"node\" and \"value\"");
        Condition c{quat_from_json(item.at("node"), path + ".node"), quat_from_json(item.at("value"), path + ".value")};
        for (std::size_t m = 0; m < out.size(); ++m)
            if (out[m].node == c.node)
                throw ParseError(path + ".node: node " + to_string(c.node) + " repeats " + name + "[" +
                                 std::to_string(m) + "].node");
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

json to_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return rat_to_string(r);
}

json to_json(const Quat& q) { return json::array({to_json(q.w), to_json(q.x), to_json(q.y), to_json(q.z)}); }

json to_json(const QPoly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const RawProblem& p) { return {{"left", conditions_json(p.left)}, {"right", conditions_json(p.right)}}; }

json to_json(const ReducedProblem& p) {
    json paired = json::array();
    for (const auto& pc : p.paired)
        paired.push_back(
            {{"alpha", to_json(pc.alpha)}, {"c", to_json(pc.c)}, {"beta", to_json(pc.beta)}, {"d", to_json(pc.d)}});
    json prov = json::array();
    for (const auto& e : p.provenance) {
        json item = {{"action", action_name(e.action)}, {"side", to_string(e.side)}, {"condition", condition_json(e.condition)}};
        if (e.action == ProvenanceEntry::Action::Implied) {
            item["anchor_side"] = to_string(e.anchor_side);
            item["anchors"] = json::array({condition_json(e.anchor1), condition_json(e.anchor2)});
        }
        prov.push_back(std::move(item));
    }
    return {{"paired", paired},
            {"left_only", conditions_json(p.left_only)},
            {"right_only", conditions_json(p.right_only)},
            {"provenance", prov}};
}

json to_json(const SolutionSet& sol) {
    json planes = json::array();
    for (const auto& t : sol.paired_terms)
        planes.push_back({{"basis", json::array({to_json(t.plane.b1), to_json(t.plane.b2)})},
                          {"left_factor", to_json(t.left_factor)},
                          {"right_factor", to_json(t.right_factor)}});
    return {{"particular", to_json(sol.particular)},
            {"planes", planes},
            {"ideal_left", to_json(sol.ideal_left)},
            {"ideal_right", to_json(sol.ideal_right)}};
}

Rat rat_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<unsigned long long>())));
        return Rat(mpz_class(std::to_string(j.get<long long>())));
    }
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw ParseError(path + ": expected an integer or a \"p/q\" string");
}

Quat quat_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) throw ParseError(path + ": expected a quaternion [w, x, y, z]");
    return {rat_from_json(j[0], path + "[0]"), rat_from_json(j[1], path + "[1]"), rat_from_json(j[2], path + "[2]"),
            rat_from_json(j[3], path + "[3]")};
}

QPoly poly_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected a list of quaternion coefficients");
    std::vector<Quat> coeffs;
    for (std::size_t n = 0; n < j.size(); ++n) coeffs.push_back(quat_from_json(j[n], path + "[" + std::to_string(n) + "]"));
    return QPoly(std::move(coeffs));
}

RawProblem problem_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("problem: expected an object with \"left\" and \"right\"");
    for (const auto& [key, value] : j.items())
        if (key != "left" && key != "right") throw ParseError("problem: unknown field \"" + key + "\"");
    return {side_from_json(j, "left"), side_from_json(j, "right")};
}

Quat parse_quat_arg(const std::string& text) {
    const auto start = text.find_first_not_of(" \t");
    if (start != std::string::npos && text[start] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError("quaternion \"" + text + "\": " + e.what());
        }
        return quat_from_json(j, "quaternion");
    }
    return parse_quat(text);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
}

}  // namespace hq::io
