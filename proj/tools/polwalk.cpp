// polwalk: rotation systems, left walks, bounds, constructions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polwalk/bounds.hpp"
#include "polwalk/certificate.hpp"
#include "polwalk/constructions.hpp"
#include "polwalk/errors.hpp"
#include "polwalk/graph.hpp"
#include "polwalk/io.hpp"
#include "polwalk/ops.hpp"
#include "polwalk/search.hpp"

namespace {

using namespace polwalk;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

PolarizedGraph load_graph(const std::string& path) {
    if (path == "-") return parse_polgraph(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return parse_polgraph(in);
}

std::string load_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

std::string frac(long long num, long long den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

int cmd_info(const std::string& path) {
    PolarizedGraph g = load_graph(path);
    auto dec = trace_walks(g);
    auto st = graph_stats(g, dec);
    std::cout << "S=" << st.S << " A=" << st.A << " A_r=" << st.A_r << " F=" << st.F
              << " chi=" << st.chi << " gamma=" << st.gamma << " V=" << frac(2 * st.A, st.S)
              << " V_r=" << frac(2 * st.A_r, st.S) << "\n";
    std::cout << "walk lengths:";
    for (const Walk& w : dec.walks) std::cout << " " << w.length();
    std::cout << "\n";
    std::cout << "ordinary=" << (st.is_ordinary ? "yes" : "no")
              << " condition_C=" << (st.satisfies_C ? "yes" : "no") << " complete_walk=";
    if (dec.complete_index)
        std::cout << "walk " << *dec.complete_index << " (length "
                  << dec.complete().length() << ")\n";
    else
        std::cout << "none\n";
    return kExitOk;
}

int cmd_walks(const std::string& path) {
    PolarizedGraph g = load_graph(path);
    auto dec = trace_walks(g);
    for (size_t i = 0; i < dec.walks.size(); ++i) {
        const Walk& w = dec.walks[i];
        std::cout << "walk " << i << " length " << w.length();
        if (dec.complete_index && static_cast<int>(i) == *dec.complete_index)
            std::cout << " [complete]";
        std::cout << "\n  darts:";
        for (Dart d : w.darts) std::cout << " " << dart_token(d);
        std::cout << "\n  vertices:";
        for (int v : walk_itinerary(g, w)) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_check_complete(const std::string& path) {
    PolarizedGraph g = load_graph(path);
    auto res = find_complete_walk(g);
    if (!res.walk) {
        std::cerr << "no complete walk (" << res.tau_steps << " tau steps)\n";
        return kExitVerifyFailed;
    }
    std::cout << "complete walk of length " << res.walk->length() << " found in "
              << res.tau_steps << " tau steps (bound " << 4 * g.edge_count() << ")\n";
    return kExitOk;
}

int cmd_reduce(const std::string& path) {
    std::cout << serialize_polgraph(reduce_to_condition_c(load_graph(path)));
    return kExitOk;
}

int cmd_bounds(long long g) {
    std::cout << "b(" << g << ")   = " << bound_b_display(g) << " (display; comparisons are exact)\n";
    if (g >= 1) {
        auto br = bound_br(g);
        std::cout << "b_r(" << g << ") = " << to_string(br.value) << "  terms:";
        for (int i = 0; i < 4; ++i) {
            std::cout << " " << to_string(br.terms[i]);
            if (br.attained[i]) std::cout << "*";
        }
        std::cout << "\n";
        std::cout << "lower bound 12g/(3g+1) = " << to_string(lower_bound_valence(g)) << "\n";
        std::cout << "homotopic caps (S: edges, valence):\n";
        for (long long s = 1; s <= 10; ++s) {
            auto hb = homotopic_bound(s, g);
            std::cout << "  S=" << s << ": " << hb.edge_cap << ", " << to_string(hb.valence_cap)
                      << "\n";
        }
    }
    auto ab = appendix_bounds(g);
    std::cout << "B(g)=" << ab.B << " C(g)=" << ab.C << " C2(g)=" << ab.C2 << "\n";
    return kExitOk;
}

int emit_graph(const PolarizedGraph& g, bool json, const FamilyRecipe* recipe = nullptr) {
    if (json)
        std::cout << make_certificate(g, recipe).dump(2) << "\n";
    else
        std::cout << serialize_polgraph(g);
    return kExitOk;
}

int cmd_construct(const std::string& family, const std::vector<long long>& args, bool json) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw input_error("construct " + family + " expects " + std::to_string(n) +
                              " argument(s)");
    };
    if (family == "monograph") {
        need(1);
        FamilyRecipe leaf{"monograph", args[0], {}};
        return emit_graph(standard_monograph(args[0]), json, json ? &leaf : nullptr);
    }
    if (family == "homotopic") {
        need(2);
        return emit_graph(homotopic_optimal(args[0], args[1]), json);
    }
    if (family == "star") {
        need(1);
        FamilyRecipe leaf{"star", args[0], {}};
        return emit_graph(lower_bound_graph(args[0]), json, json ? &leaf : nullptr);
    }
    if (family == "optimal") {
        need(1);
        FamilyRecipe leaf{"optimal", args[0], {}};
        return emit_graph(genus_optimal(static_cast<int>(args[0])), json, json ? &leaf : nullptr);
    }
    if (family == "ks") {
        need(1);
        FamilyRecipe leaf{"ks", args[0], {}};
        return emit_graph(ks_polarization(static_cast<int>(args[0])), json,
                          json ? &leaf : nullptr);
    }
    if (family == "family") {
        need(1);
        auto res = asymptotic_family(args[0]);
        return emit_graph(res.graph, json, &res.recipe);
    }
    throw input_error("unknown construct family '" + family + "'");
}

int cmd_op(const std::string& verb, const std::vector<std::string>& args) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw input_error("op " + verb + " expects " + std::to_string(n) + " argument(s)");
    };
    if (verb == "contract") {
        need(2);
        PolarizedGraph g = load_graph(args[0]);
        std::cout << serialize_polgraph(contract_edge(g, std::stoi(args[1])).graph);
        return kExitOk;
    }
    if (verb == "blowup") {
        need(4);
        PolarizedGraph g = load_graph(args[0]);
        std::cout << serialize_polgraph(
            blow_up_elementary(g, std::stoi(args[1]), std::stoi(args[2]), std::stoi(args[3]))
                .graph);
        return kExitOk;
    }
    if (verb == "surgery") {
        need(4);
        PolarizedGraph g = load_graph(args[0]);
        Dart e_in = parse_dart_token(args[2], g.edge_count());
        Dart f_out = parse_dart_token(args[3], g.edge_count());
        std::cout << serialize_polgraph(surgery(g, std::stoi(args[1]), e_in, f_out).graph);
        return kExitOk;
    }
    if (verb == "subdivide") {
        need(2);
        PolarizedGraph g = load_graph(args[0]);
        std::cout << serialize_polgraph(subdivide(g, std::stoi(args[1])).graph);
        return kExitOk;
    }
    if (verb == "parallel") {
        if (args.size() < 2) throw input_error("op parallel expects a graph and chain darts");
        PolarizedGraph g = load_graph(args[0]);
        std::vector<Dart> chain;
        for (size_t i = 1; i < args.size(); ++i)
            chain.push_back(parse_dart_token(args[i], g.edge_count()));
        std::cout << serialize_polgraph(add_parallel_edge(g, chain).graph);
        return kExitOk;
    }
    if (verb == "double") {
        need(2);
        PolarizedGraph g = load_graph(args[0]);
        std::cout << serialize_polgraph(double_edge(g, std::stoi(args[1])).graph);
        return kExitOk;
    }
    if (verb == "sum") {
        need(4);
        PolarizedGraph g1 = load_graph(args[0]);
        PolarizedGraph g2 = load_graph(args[1]);
        std::cout << serialize_polgraph(
            connected_sum(g1, std::stoi(args[2]), g2, std::stoi(args[3])).graph);
        return kExitOk;
    }
    throw input_error("unknown op '" + verb + "'");
}

int cmd_verify(const std::string& path) {
    nlohmann::json cert;
    try {
        cert = nlohmann::json::parse(load_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("bad certificate JSON: ") + e.what());
    }
    auto bad = verify_certificate(cert);
    if (bad.empty()) {
        std::cout << "certificate verified\n";
        return kExitOk;
    }
    for (const auto& field : bad) std::cerr << "mismatch: " << field << "\n";
    return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"left walks on polarized graphs"};
    app.require_subcommand(1);

    std::string graph_arg;
    auto* info = app.add_subcommand("info", "print the invariants of a graph");
    info->add_option("graph", graph_arg, "polgraph file or -")->required();

    std::string walks_arg;
    auto* walks = app.add_subcommand("walks", "list all left walks");
    walks->add_option("graph", walks_arg, "polgraph file or -")->required();

    std::string check_arg;
    auto* check = app.add_subcommand("check-complete", "decide complete-walk existence in <= 4A steps");
    check->add_option("graph", check_arg, "polgraph file or -")->required();

    std::string reduce_arg;
    auto* reduce = app.add_subcommand("reduce", "remove short walks (condition C)");
    reduce->add_option("graph", reduce_arg, "polgraph file or -")->required();

    long long bounds_g = 0;
    auto* bounds = app.add_subcommand("bounds", "print the valence bounds for a genus");
    bounds->add_option("genus", bounds_g, "genus")->required();

    std::string construct_family;
    std::vector<long long> construct_args;
    bool construct_json = false;
    auto* construct = app.add_subcommand("construct", "build a catalogue graph");
    construct->add_option("family", construct_family, "monograph|homotopic|star|optimal|ks|family")
        ->required();
    construct->add_option("args", construct_args, "family arguments");
    construct->add_flag("--json", construct_json, "emit a JSON certificate instead of polgraph");

    std::string op_verb;
    std::vector<std::string> op_args;
    auto* op = app.add_subcommand("op", "apply a surgery");
    op->add_option("verb", op_verb, "contract|blowup|surgery|subdivide|parallel|double|sum")
        ->required();
    op->add_option("args", op_args, "operation arguments");

    std::string verify_arg;
    auto* verify = app.add_subcommand("verify", "recompute and check a JSON certificate");
    verify->add_option("certificate", verify_arg, "certificate file or -")->required();

    auto* search = app.add_subcommand("search", "brute-force oracles");
    search->require_subcommand(1);
    long long sg = 0;
    int smax_s = 3, smax_a = 4;
    long long slimit = 50'000'000;
    std::string scache;
    auto* maxvr = search->add_subcommand("max-vr", "maximize V_r over small polarized graphs");
    maxvr->add_option("--genus", sg, "target genus")->required();
    maxvr->add_option("--max-s", smax_s, "vertex cap");
    maxvr->add_option("--max-a", smax_a, "edge cap");
    maxvr->add_option("--limit", slimit, "node budget");
    maxvr->add_option("--cache", scache, "cache directory");
    int rs = 0, ra = 0;
    std::uint64_t rseed = 0;
    auto* random = search->add_subcommand("random", "seeded random polarized graph");
    random->add_option("--s", rs, "vertices")->required();
    random->add_option("--a", ra, "edges")->required();
    random->add_option("--seed", rseed, "seed")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(graph_arg);
        if (walks->parsed()) return cmd_walks(walks_arg);
        if (check->parsed()) return cmd_check_complete(check_arg);
        if (reduce->parsed()) return cmd_reduce(reduce_arg);
        if (bounds->parsed()) return cmd_bounds(bounds_g);
        if (construct->parsed()) return cmd_construct(construct_family, construct_args, construct_json);
        if (op->parsed()) return cmd_op(op_verb, op_args);
        if (verify->parsed()) return cmd_verify(verify_arg);
        if (maxvr->parsed()) {
            SearchBudget b;
            b.max_s = smax_s;
            b.max_a = smax_a;
            b.node_limit = slimit;
            auto res = brute_force_max_vr(sg, b, scache);
            if (res.best)
                std::cout << "max V_r = " << polwalk::to_string(*res.best) << "\n"
                          << res.witness;
            else
                std::cout << "no instance with genus " << sg << " and a complete walk\n";
            if (!res.completed) {
                std::cerr << "budget exhausted: result is a lower bound only\n";
                return kExitVerifyFailed;
            }
            return kExitOk;
        }
        if (random->parsed()) {
            std::cout << serialize_polgraph(random_polarized(rs, ra, rseed));
            return kExitOk;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const structural_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
