#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"
#include "polycert/graph.hpp"
#include "polycert/profile.hpp"

using namespace polycert;

namespace {
Graph make(const char* spec) { return construct(GraphSpec::parse(spec)); }
}  // namespace

TEST_CASE("independence profiles match direct search") {
    std::vector<Graph> hosts;
    hosts.push_back(make("cycle(4)"));
    hosts.push_back(make("cycle(7)"));
    hosts.push_back(make("clique(4)"));
    hosts.push_back(make("kdd(3)"));
    hosts.push_back(make("petersen"));
    hosts.push_back(make("copies(cycle(4),2)"));
    for (const Graph& g : hosts) {
        auto p = independence_profile(g);
        CHECK(p.coeffs == oracle::brute_independence_profile(g));
    }
}

TEST_CASE("known profiles") {
    auto pet = independence_profile(make("petersen"));
    CHECK(pet.coeffs == std::vector<Int>{1, 10, 30, 30, 5});
    auto c4 = independence_profile(make("cycle(4)"));
    CHECK(c4.coeffs == std::vector<Int>{1, 4, 2});
    auto k4m = matching_profile(make("clique(4)"));
    CHECK(k4m.coeffs == std::vector<Int>{1, 6, 3});
}

TEST_CASE("matching profile equals independence profile of the line graph") {
    for (const char* s : {"cycle(6)", "petersen", "kdd(3)", "clique(5)"}) {
        Graph g = make(s);
        auto m = matching_profile(g);
        CHECK(m.kind == ProfileKind::Matchings);
        CHECK(m.coeffs == independence_profile(line_graph(g)).coeffs);
        CHECK(m.coeffs == oracle::brute_matching_profile(g));
    }
}

TEST_CASE("profiles multiply over disjoint unions") {
    Graph a = make("cycle(5)");
    Graph b = make("clique(4)");
    auto pa = independence_profile(a).coeffs;
    auto pb = independence_profile(b).coeffs;
    auto pu = independence_profile(disjoint_union(a, b)).coeffs;
    CHECK(pu == convolve(pa, pb));
}

TEST_CASE("prefix agrees with full profile and handles huge unions") {
    Graph g = make("copies(cycle(4),3)");
    auto full = independence_profile(g).coeffs;
    for (long k = 0; k <= 4; ++k) {
        auto pre = independence_prefix(g, k);
        REQUIRE(pre.size() == static_cast<size_t>(k + 1));
        for (long i = 0; i <= k; ++i) CHECK(pre[i] == full[i]);
    }
    // 10^6 vertices, only small k requested
    Graph big = make("copies(cycle(4),250000)");
    auto pre = independence_prefix(big, 2);
    CHECK(pre[0] == 1);
    CHECK(pre[1] == 1000000);
    // i_2 = C(n,2) - |E|
    CHECK(pre[2] == Int(1000000L) * 999999L / 2 - 1000000L);
}

TEST_CASE("polynomial evaluation") {
    auto c4 = independence_profile(make("cycle(4)"));
    CHECK(evaluate(c4, Rat(1)) == Rat(7));
    CHECK(evaluate(c4, Rat(1, 2)) == Rat(7, 2));
    auto k33m = matching_profile(make("kdd(3)"));
    CHECK(evaluate(k33m, Rat(1)) == Rat(34));
}

TEST_CASE("occupancy ratio bounds bracket small cases") {
    // i_t/i_{t+1} for C8: i = 1,8,20,16,2
    auto c8 = independence_profile(make("cycle(8)"));
    for (long t = 0; t <= 2; ++t) {
        if (8 <= 3 * (t + 1)) break;
        auto rb = ratio_bounds(8, 2, t);
        Rat ratio = Rat(c8.coeffs[t]) / Rat(c8.coeffs[t + 1]);
        CHECK(rb.lower <= ratio);
        CHECK(ratio <= rb.upper);
    }
    // cubic hosts on 10 vertices, t small
    for (const Graph& g : corpus::connected_regular(3, 10)) {
        auto p = independence_profile(g);
        for (long t = 0; t <= 1; ++t) {
            auto rb = ratio_bounds(10, 3, t);
            Rat ratio = Rat(p.coeffs[t]) / Rat(p.coeffs[t + 1]);
            CHECK(rb.lower <= ratio);
            CHECK(ratio <= rb.upper);
        }
    }
}
