#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "oracle.hpp"
#include "polycert/canonical.hpp"
#include "polycert/profile.hpp"

using namespace polycert;

namespace {
Graph make(const std::string& spec) { return construct(GraphSpec::parse(spec)); }
}  // namespace

TEST_CASE("cluster types at small excess") {
    const auto& e1 = enumerate_cluster_types(1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].sizes == std::vector<int>{2});
    CHECK(e1[0].support == 2);
    CHECK(e1[0].aut_ordered == 2);
    CHECK(e1[0].ursell_value == Rat(1));
    CHECK(e1[0].embedding_count(5) == 10);  // unordered pairs from 5 labels

    const auto& e2 = enumerate_cluster_types(2);
    REQUIRE(e2.size() == 4);
    // one triple, the pair from excess 1, and two kinds of pair-of-pairs
    int singles = 0, doubles_same = 0, doubles_chain = 0;
    for (const ClusterType& ct : e2) {
        if (ct.sizes == std::vector<int>{3}) {
            ++singles;
            CHECK(ct.ursell_value == Rat(1));
            CHECK(ct.aut_ordered == 6);
        } else if (ct.sizes == std::vector<int>{2, 2} && ct.support == 2) {
            ++doubles_same;
            CHECK(ct.ursell_value == Rat(-1, 2));
            CHECK(ct.aut_ordered == 2);
            CHECK(ct.embedding_count(5) == 10);
        } else if (ct.sizes == std::vector<int>{2, 2} && ct.support == 3) {
            ++doubles_chain;
            CHECK(ct.ursell_value == Rat(-1, 2));
            CHECK(ct.aut_ordered == 1);
            CHECK(ct.embedding_count(5) == 60);
        }
    }
    CHECK(singles == 1);
    CHECK(doubles_same == 1);
    CHECK(doubles_chain == 1);
}

TEST_CASE("types with connected overlap structure only") {
    for (const ClusterType& ct : enumerate_cluster_types(4)) {
        CHECK(ct.incompatibility_graph().connected());
        CHECK(ct.excess >= ct.support - 1);
        long sum = 0;
        for (int s : ct.sizes) sum += s - 1;
        CHECK(ct.excess == sum);
        // sign alternates with the number of polymers
        int m = static_cast<int>(ct.sizes.size());
        CHECK((m % 2 == 1 ? ct.ursell_value > 0 : ct.ursell_value < 0));
    }
}

TEST_CASE("type sum reproduces the direct cluster sum") {
    std::vector<Rat> w(7);
    w[2] = Rat(1, 3);
    w[3] = Rat(-1, 7);
    w[4] = Rat(1, 11);
    w[5] = Rat(2, 13);
    w[6] = Rat(-3, 17);
    for (int k : {3, 4, 5}) {
        for (int max_excess : {1, 2, 3}) {
            Rat via_types = 0;
            for (const ClusterType& ct : enumerate_cluster_types(max_excess)) {
                Rat prod = 1;
                for (int s : ct.sizes) prod *= w[s];
                via_types += Rat(ct.embedding_count(k)) * ct.ursell_value * prod;
            }
            CHECK(via_types == oracle::brute_cluster_sum(k, max_excess, w));
        }
    }
}

TEST_CASE("polymer weights match the defining map sum") {
    SmallGraphCatalog cat(4);
    for (const char* s : {"cycle(4)", "cycle(5)", "clique(4)"}) {
        Graph g = make(s);
        CanonicalExpansion exp(g, cat);
        for (int j = 2; j <= 4; ++j)
            CHECK(exp.polymer_weight(j) == oracle::brute_polymer_weight(j, g));
    }
    SmallGraphCatalog cat3(3);
    Graph pet = make("petersen");
    CanonicalExpansion pexp(pet, cat3);
    for (int j = 2; j <= 3; ++j)
        CHECK(pexp.polymer_weight(j) == oracle::brute_polymer_weight(j, pet));
}

TEST_CASE("pair weight closed form") {
    SmallGraphCatalog cat(2);
    for (const char* s : {"cycle(6)", "petersen", "kdd(4)", "copies(cycle(4),50)"}) {
        Graph g = make(s);
        CanonicalExpansion exp(g, cat);
        CHECK(exp.polymer_weight(2) ==
              Rat(-(exp.degree() + 1)) / exp.order());
    }
}

TEST_CASE("partition sum ties the profile to the polymer ensemble") {
    SmallGraphCatalog cat(5);
    for (const char* s : {"cycle(4)", "cycle(7)", "petersen", "kdd(3)"}) {
        Graph g = make(s);
        CanonicalExpansion exp(g, cat);
        auto prof = independence_profile(g);
        long n = g.order();
        for (long k = 0; k <= std::min<long>(5, static_cast<long>(prof.degree())); ++k) {
            // i_k = n^k / k! * Xi_k
            Rat expected = Rat(prof.at(k)) * Rat(factorial(k)) / rat_pow(Rat(n), k);
            CHECK(exp.exact_xi(k) == expected);
        }
    }
}

TEST_CASE("convergence condition") {
    auto good = kp_check(3, 1600, 2);
    CHECK(good.satisfied);
    CHECK(good.margin > 0);
    // gamma = 3 e^5 * 3/1600, about 0.835
    CHECK(good.gamma_upper > Rat(8, 10));
    CHECK(good.gamma_upper < Rat(9, 10));
    auto bad = kp_check(20, 100, 3);
    CHECK(!bad.satisfied);
    CHECK(bad.margin < 0);
}

TEST_CASE("truncated series encloses the certified log of the exact value") {
    SmallGraphCatalog cat(6);
    Graph g = make("copies(cycle(4),400)");  // n = 1600, d = 2
    CanonicalExpansion exp(g, cat);
    for (long k : {2, 3}) {
        Rat xi = exp.exact_xi(k);
        REQUIRE(xi > 0);
        Interval logxi = Interval::log_of(xi);
        for (int t : {2, 3, 4, 6}) {
            Interval tr = exp.truncated_log_xi(k, t);
            CHECK(tr.lower_rat() <= logxi.upper_rat());
            CHECK(tr.upper_rat() >= logxi.lower_rat());
        }
        // deeper truncation can only help
        Interval wide = exp.truncated_log_xi(k, 2);
        Interval tight = exp.truncated_log_xi(k, 6);
        CHECK(wide.upper_rat() - wide.lower_rat() >=
              tight.upper_rat() - tight.lower_rat());
    }
    CHECK_THROWS_AS(CanonicalExpansion(make("cycle(5)"), cat).truncated_log_xi(3, 4),
                    DivergentRegime);
}

TEST_CASE("dominance: trivial and isomorphic cases") {
    SmallGraphCatalog cat(6);
    Graph a = make("copies(cycle(4),500)");
    Graph b = make("copies(cycle(3),665)");  // 1995 vertices
    // same order needed
    CHECK_THROWS_AS(dominance_certificate(a, make("cycle(4)"), 2, 4, cat),
                    std::invalid_argument);
    auto triv = dominance_certificate(a, disjoint_union(b, make("cycle(5)")), 1, 4, cat);
    CHECK(triv.verdict == Verdict::CertifiedNonstrict);
    CHECK(triv.truncation_diff == 0);
    auto iso = dominance_certificate(a, a, 3, 4, cat);
    CHECK(iso.verdict == Verdict::CertifiedNonstrict);
    CHECK(iso.truncation_diff == 0);
}

TEST_CASE("dominance: second coefficients of regular graphs coincide") {
    SmallGraphCatalog cat(6);
    Graph hn = make("copies(cycle(4),500)");
    Graph g = make("copies(cycle(5),400)");
    auto res = dominance_certificate(hn, g, 2, 6, cat);
    CHECK(res.truncation_diff == 0);
    CHECK(res.verdict != Verdict::CertifiedStrict);
}

TEST_CASE("dominance: square unions strictly beat triangle unions at k=3") {
    SmallGraphCatalog cat(6);
    Graph hn = make("copies(cycle(4),105000)");
    Graph g = make("copies(cycle(3),140000)");
    auto res = dominance_certificate(hn, g, 3, 6, cat);
    CHECK(res.verdict == Verdict::CertifiedStrict);
    CHECK(res.truncation_diff > 0);
    CHECK(res.lower_bound.definitely_positive());
}

TEST_CASE("dominance bound is sound against exact coefficients") {
    SmallGraphCatalog cat(6);
    Graph hn = make("copies(cycle(4),750)");    // n = 3000
    Graph g = make("copies(cycle(3),1000)");
    for (long k : {2, 3}) {
        auto res = dominance_certificate(hn, g, k, 6, cat);
        Rat ih = independence_prefix(hn, k).back();
        Rat ig = independence_prefix(g, k).back();
        Interval true_log = Interval::log_of(ih / ig);
        CHECK(res.lower_bound.lower_rat() <= true_log.upper_rat());
    }
}
