#include "polwalk/certificate.hpp"

#include <sstream>

#include "polwalk/bounds.hpp"
#include "polwalk/errors.hpp"
#include "polwalk/io.hpp"

namespace polwalk {

std::vector<int> walk_itinerary(const PolarizedGraph& g, const Walk& w) {
    std::vector<int> out;
    out.reserve(w.darts.size() + 1);
    for (Dart d : w.darts) out.push_back(g.origin[d]);
    out.push_back(g.origin[w.darts.front()]);
    return out;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

nlohmann::json recipe_json(const FamilyRecipe& r) {
    nlohmann::json j;
    j["kind"] = r.kind;
    if (r.kind != "sum") {
        j["param"] = r.param;
    } else {
        j["parts"] = nlohmann::json::array();
        for (const auto& p : r.parts) j["parts"].push_back(recipe_json(p));
    }
    j["genus"] = r.genus();
    return j;
}

nlohmann::json audit_json(const BoundReport& rep) {
    auto line = [](const BoundLine& l) {
        nlohmann::json j;
        j["applicable"] = l.applicable;
        if (l.applicable) {
            j["ok"] = l.ok;
            j["slack"] = to_string(l.slack);
        }
        return j;
    };
    nlohmann::json j;
    j["spade"] = line(rep.spade);
    j["heart"] = line(rep.heart);
    j["diamond"] = line(rep.diamond);
    j["club_r"] = line(rep.club_r);
    j["diamond_r"] = line(rep.diamond_r);
    return j;
}

nlohmann::json body_from_graph(const PolarizedGraph& g) {
    auto dec = trace_walks(g);
    auto st = graph_stats(g, dec);
    nlohmann::json j;
    j["stats"] = {
        {"S", st.S},         {"A", st.A},
        {"A_r", st.A_r},     {"F", st.F},
        {"chi", st.chi},     {"gamma", st.gamma},
        {"V", std::to_string(2 * st.A) + "/" + std::to_string(st.S)},
        {"V_r", std::to_string(2 * st.A_r) + "/" + std::to_string(st.S)},
        {"parity", st.parity},
        {"ordinary", st.is_ordinary},
        {"condition_C", st.satisfies_C},
    };
    nlohmann::json ell = nlohmann::json::object();
    for (auto [len, count] : st.ell) ell[std::to_string(len)] = count;
    j["stats"]["ell"] = ell;
    nlohmann::json lengths = nlohmann::json::array();
    for (const Walk& w : dec.walks) lengths.push_back(w.length());
    j["walk_lengths"] = lengths;
    if (dec.complete_index) {
        nlohmann::json mc;
        mc["index"] = *dec.complete_index;
        mc["length"] = dec.complete().length();
        mc["itinerary"] = walk_itinerary(g, dec.complete());
        j["complete_walk"] = mc;
    } else {
        j["complete_walk"] = nullptr;
    }
    j["audit"] = audit_json(audit_bounds(st));
    return j;
}

}  // namespace

nlohmann::json make_certificate(const PolarizedGraph& g, const FamilyRecipe* recipe) {
    nlohmann::json j = body_from_graph(g);
    j["version"] = 1;
    j["polgraph"] = split_lines(serialize_polgraph(g));
    if (recipe) j["recipe"] = recipe_json(*recipe);
    return j;
}

std::vector<std::string> verify_certificate(const nlohmann::json& cert) {
    std::vector<std::string> bad;
    if (!cert.contains("version") || cert["version"] != 1) bad.push_back("version");
    if (!cert.contains("polgraph")) {
        bad.push_back("polgraph");
        return bad;
    }
    std::string text;
    for (const auto& line : cert["polgraph"]) text += line.get<std::string>() + "\n";
    PolarizedGraph g;
    try {
        g = parse_polgraph_string(text);
    } catch (const std::runtime_error& e) {
        bad.push_back(std::string("polgraph: ") + e.what());
        return bad;
    }
    nlohmann::json fresh = body_from_graph(g);
    for (const auto& key : {"stats", "walk_lengths", "complete_walk", "audit"}) {
        if (!cert.contains(key) || cert[key] != fresh[key]) bad.push_back(key);
    }
    if (cert.contains("recipe")) {
        long long declared = cert["recipe"].value("genus", -1LL);
        if (declared != fresh["stats"]["gamma"].get<long long>()) bad.push_back("recipe.genus");
    }
    // Round trip: the embedded text must be the normalized serialization.
    if (serialize_polgraph(g) != text) bad.push_back("polgraph normalization");
    return bad;
}

}  // namespace polwalk
