#include "polwalk/io.hpp"

#include <sstream>

#include "polwalk/errors.hpp"

namespace polwalk {

std::string dart_token(Dart d) {
    return std::to_string(edge_of(d)) + ((d & 1) ? "-" : "+");
}

Dart parse_dart_token(const std::string& tok, int edge_count) {
    if (tok.size() < 2) throw input_error("bad dart token '" + tok + "'");
    char sign = tok.back();
    if (sign != '+' && sign != '-') throw input_error("bad dart token '" + tok + "'");
    long long e;
    try {
        size_t pos = 0;
        e = std::stoll(tok.substr(0, tok.size() - 1), &pos);
        if (pos != tok.size() - 1) throw input_error("bad dart token '" + tok + "'");
    } catch (const std::logic_error&) {
        throw input_error("bad dart token '" + tok + "'");
    }
    if (e < 0 || (edge_count >= 0 && e >= edge_count))
        throw input_error("edge id out of range in dart '" + tok + "'");
    return static_cast<Dart>(2 * e + (sign == '-' ? 1 : 0));
}

PolarizedGraph parse_polgraph(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw input_error("empty polgraph input");
    {
        std::istringstream ls(line);
        std::string word, ver;
        ls >> word >> ver;
        if (word != "polgraph" || ver != "1")
            throw input_error("expected header 'polgraph 1'");
    }
    long long S = -1, A = -1;
    for (int i = 0; i < 2; ++i) {
        if (!next_line(line)) throw input_error("truncated polgraph header");
        std::istringstream ls(line);
        std::string key;
        long long val;
        ls >> key >> val;
        if (ls.fail()) throw input_error("bad header line: " + line);
        if (key == "vertices")
            S = val;
        else if (key == "edges")
            A = val;
        else
            throw input_error("unexpected header line: " + line);
    }
    if (S < 1) throw input_error("vertex count must be positive");
    if (A < 0) throw input_error("edge count must be nonnegative");

    std::vector<std::vector<Dart>> rot(S);
    std::vector<char> seen_vertex(S, 0);
    for (long long i = 0; i < S; ++i) {
        if (!next_line(line)) throw input_error("missing vertex line");
        std::istringstream ls(line);
        std::string v_word;
        ls >> v_word;
        if (v_word != "v") throw input_error("expected vertex line, got: " + line);
        std::string idx_tok;
        ls >> idx_tok;
        if (idx_tok.empty() || idx_tok.back() != ':')
            throw input_error("vertex index must end with ':' in line: " + line);
        long long v;
        try {
            v = std::stoll(idx_tok.substr(0, idx_tok.size() - 1));
        } catch (const std::logic_error&) {
            throw input_error("bad vertex index in line: " + line);
        }
        if (v < 0 || v >= S) throw input_error("vertex index out of range: " + idx_tok);
        if (seen_vertex[v]) throw input_error("vertex " + std::to_string(v) + " listed twice");
        seen_vertex[v] = 1;
        std::string tok;
        while (ls >> tok) rot[v].push_back(parse_dart_token(tok, static_cast<int>(A)));
    }
    size_t dart_total = 0;
    for (const auto& r : rot) dart_total += r.size();
    if (dart_total != static_cast<size_t>(2 * A))
        throw input_error("dart count does not match declared edge count");
    return PolarizedGraph::from_rotations(static_cast<int>(S), rot);
}

PolarizedGraph parse_polgraph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_polgraph(in);
}

std::string serialize_polgraph(const PolarizedGraph& g) {
    std::ostringstream out;
    out << "polgraph 1\n";
    out << "vertices " << g.vertices << "\n";
    out << "edges " << g.edge_count() << "\n";
    for (VertexId v = 0; v < g.vertices; ++v) {
        out << "v " << v << ":";
        for (Dart d : g.rotation_of(v)) out << " " << dart_token(d);
        out << "\n";
    }
    return out.str();
}

}  // namespace polwalk
