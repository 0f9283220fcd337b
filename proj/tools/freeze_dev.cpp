// Temporary dev tool: runs the bounded searches so their results can be
// frozen into constructions.cpp.
#include <chrono>
#include <iostream>

#include "polwalk/constructions.hpp"
#include "polwalk/graph.hpp"
#include "polwalk/io.hpp"

using namespace polwalk;
using Clock = std::chrono::steady_clock;

int main() {
    auto t0 = Clock::now();
    auto g3seq = search_genus3_polygon();
    auto t1 = Clock::now();
    std::cout << "=== genus 3 top sequence ("
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms):\n{";
    for (size_t i = 0; i < g3seq.size(); ++i) std::cout << (i ? ", " : "") << g3seq[i];
    std::cout << "}\n";
    {
        auto res = gluing_quotient(GluingPolygon(6, g3seq));
        auto st = graph_stats(res.graph);
        std::cout << "S'=" << res.corner_classes << " S=" << st.S << " A=" << st.A
                  << " gamma=" << st.gamma << " ordinary=" << st.is_ordinary << "\n";
    }

    auto t2 = Clock::now();
    auto g1 = search_genus1_optimal();
    auto t3 = Clock::now();
    std::cout << "=== genus 1 ("
              << std::chrono::duration_cast<std::chrono::milliseconds>(t3 - t2).count()
              << " ms):\n"
              << serialize_polgraph(g1);
    {
        auto st = graph_stats(g1);
        std::cout << "S=" << st.S << " A=" << st.A << " gamma=" << st.gamma
                  << " ordinary=" << st.is_ordinary << " V=" << to_string(st.V) << "\n";
    }

    auto t4 = Clock::now();
    auto g2 = search_genus2_optimal();
    auto t5 = Clock::now();
    std::cout << "=== genus 2 ("
              << std::chrono::duration_cast<std::chrono::milliseconds>(t5 - t4).count()
              << " ms):\n"
              << serialize_polgraph(g2);
    {
        auto st = graph_stats(g2);
        std::cout << "S=" << st.S << " A=" << st.A << " gamma=" << st.gamma
                  << " ordinary=" << st.is_ordinary << " V=" << to_string(st.V) << "\n";
    }
    return 0;
}
