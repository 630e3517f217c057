// Acceptance checks: one pass/fail line per criterion, exit 1 on any failure.
#include <bit>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "polycert/canonical.hpp"
#include "polycert/census.hpp"
#include "polycert/grand.hpp"
#include "polycert/graph.hpp"
#include "polycert/interval.hpp"
#include "polycert/profile.hpp"
#include "polycert/smallgraph.hpp"
#include "polycert/verify.hpp"

using namespace polycert;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << " (" << name << ")";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

Graph make(const std::string& spec) { return construct(GraphSpec::parse(spec)); }

// 1. (n^k/k!) Xi_k equals the exact independence coefficient for k <= 6
void criterion1(const std::vector<corpus::NamedGraph>& corpus, const SmallGraphCatalog& cat) {
    long checked = 0;
    std::string bad;
    for (const auto& [label, g] : corpus) {
        CanonicalExpansion exp(g, cat);
        auto prof = independence_profile(g);
        for (long k = 0; k <= 6; ++k) {
            Rat lhs = rat_pow(Rat(g.order()), k) / Rat(factorial(k)) * exp.exact_xi(k);
            if (lhs != Rat(prof.at(k))) {
                bad = label + " k=" + std::to_string(k);
                break;
            }
            ++checked;
        }
        if (!bad.empty()) break;
    }
    report(1, "polymer identity", bad.empty(),
           bad.empty() ? std::to_string(checked) + " exact equalities" : "mismatch at " + bad);
}

// 2. tree homomorphism densities equal ((d+1)/n)^{|V|-1}
void criterion2(const SmallGraphCatalog& cat) {
    long checked = 0;
    std::string bad;
    for (int d = 2; d <= 5 && bad.empty(); ++d) {
        auto batch = corpus::degree_batch(d);
        if (batch.size() < 20) {
            bad = "batch for d=" + std::to_string(d) + " too small";
            break;
        }
        batch.resize(20);
        for (const Graph& g : batch) {
            long n = g.order();
            for (int j = 1; j <= 6; ++j) {
                std::set<uint32_t> seen;
                for (uint32_t mask : cat.tree_masks(j)) {
                    SmallGraph f{j, mask};
                    if (!seen.insert(canonical_mask(f)).second) continue;
                    Rat expect = rat_pow(Rat(d + 1) / n, j - 1);
                    if (density_t(f, g) != expect) {
                        std::ostringstream os;
                        os << "d=" << d << " j=" << j << " mask=" << mask;
                        bad = os.str();
                        break;
                    }
                    ++checked;
                }
                if (!bad.empty()) break;
            }
            if (!bad.empty()) break;
        }
    }
    report(2, "tree density law", bad.empty(),
           bad.empty() ? std::to_string(checked) + " exact equalities" : bad);
}

// 3. |w(j)| <= j^{j-2} ((d+1)/n)^{j-1}
void criterion3(const std::vector<corpus::NamedGraph>& corpus, const SmallGraphCatalog& cat) {
    long checked = 0;
    std::string bad;
    for (const auto& [label, g] : corpus) {
        CanonicalExpansion exp(g, cat);
        for (int j = 2; j <= 6; ++j) {
            Rat w = exp.polymer_weight(j);
            if (w < 0) w = -w;
            Rat bound = rat_pow(Rat(j), j - 2) * rat_pow(Rat(exp.degree() + 1) / exp.order(), j - 1);
            if (w > bound) {
                bad = label + " j=" + std::to_string(j);
                break;
            }
            ++checked;
        }
        if (!bad.empty()) break;
    }
    report(3, "spanning tree weight bound", bad.empty(),
           bad.empty() ? std::to_string(checked) + " bounds hold" : "violated at " + bad);
}

// 4. truncated series contains the certified log of the exact Xi_k
void criterion4(const SmallGraphCatalog& cat) {
    long checked = 0;
    std::string bad;
    for (const char* spec : {"copies(cycle(4),750)", "copies(cycle(3),1000)",
                             "copies(cycle(5),600)", "copies(kdd(3),500)",
                             "copies(clique(4),750)", "copies(kdd(4),400)"}) {
        Graph g = make(spec);
        CanonicalExpansion exp(g, cat);
        for (long k = 2; k <= 6; ++k) {
            if (!kp_check(k, exp.order(), exp.degree()).satisfied) continue;
            Rat xi = exp.exact_xi(k);
            if (xi <= 0) {
                bad = std::string(spec) + " nonpositive Xi";
                break;
            }
            Interval logxi = Interval::log_of(xi);
            for (int t : {2, 3, 4}) {
                if (!exp.truncated_log_xi(k, t).contains(logxi)) {
                    bad = std::string(spec) + " k=" + std::to_string(k) +
                          " t=" + std::to_string(t);
                    break;
                }
                ++checked;
            }
            if (!bad.empty()) break;
        }
        if (!bad.empty()) break;
    }
    report(4, "truncation containment", bad.empty() && checked > 0,
           bad.empty() ? std::to_string(checked) + " containments" : bad);
}

// 5. Ursell values and exhaustive recomputation on <= 5 vertices
void criterion5() {
    bool ok = ursell(SmallGraph::single_vertex()) == Rat(1) &&
              ursell(SmallGraph::single_edge()) == Rat(-1, 2) &&
              ursell(SmallGraph::path(3)) == Rat(1, 6) &&
              ursell(SmallGraph::cycle(3)) == Rat(1, 3);
    long checked = 0;
    for (int j = 1; j <= 5 && ok; ++j) {
        for (uint32_t m = 0; m < (1u << SmallGraph::pair_count(j)) && ok; ++m) {
            SmallGraph f{j, m};
            if (!f.connected()) continue;
            auto edges = f.edges();
            long signed_count = 0;
            for (uint32_t sub = 0; sub < (1u << edges.size()); ++sub) {
                std::vector<std::pair<int, int>> chosen;
                for (size_t e = 0; e < edges.size(); ++e)
                    if ((sub >> e) & 1) chosen.push_back(edges[e]);
                if (SmallGraph::from_edges(j, chosen).connected())
                    signed_count += (std::popcount(sub) % 2) ? -1 : 1;
            }
            ok = ursell(f) == Rat(signed_count) / Rat(factorial(j));
            ++checked;
        }
    }
    report(5, "cluster coefficients", ok, std::to_string(checked) + " graphs recomputed");
}

// 6. closed-form census constants and minimum orders
void criterion6() {
    bool ok = true;
    for (int d = 2; d <= 5; ++d) {
        Graph kdd = make("kdd(" + std::to_string(d) + ")");
        ok = ok && inj_count(SmallGraph::cycle(4), kdd) == Int(2L * d * d * (d - 1) * (d - 1));
        Graph kq = make("clique(" + std::to_string(d + 1) + ")");
        ok = ok && inj_count(SmallGraph::cycle(3), kq) == Int(static_cast<long>(d + 1) * d * (d - 1));
        ok = ok && moore_vertex_count(d, 4) == 2L * d;
        ok = ok && moore_vertex_count(d, 3) == d + 1L;
    }
    ok = ok && moore_vertex_count(3, 6) == 14 && moore_vertex_count(3, 5) == 10;
    report(6, "census constants", ok, "");
}

// 7. 2-regular dominance by square unions at n in {8, 12}
void criterion7() {
    bool ok = true;
    std::string detail;
    long compared = 0;
    for (int n : {8, 12}) {
        Graph ref = make("copies(kdd(2)," + std::to_string(n / 4) + ")");
        std::vector<std::pair<std::string, Graph>> corp;
        auto regs = corpus::two_regular(n);
        for (size_t i = 0; i < regs.size(); ++i)
            corp.push_back({"n" + std::to_string(n) + "-" + std::to_string(i),
                            std::move(regs[i])});
        auto rep = verify_dominance(corp, ref, ProfileKind::IndependentSets, Direction::Max);
        ok = ok && rep.alarms == 0 && rep.rejected == 0;
        for (const GraphVerdict& gv : rep.graphs) {
            bool triangle_free = !girth(corp[gv.index].second) ||
                                 *girth(corp[gv.index].second) >= 4;
            for (const KComparison& kc : gv.entries) {
                ++compared;
                if (triangle_free && kc.k <= 3 && kc.cmp != 0) ok = false;
                if (triangle_free && !gv.matches_reference && kc.k == 4 && !kc.strict_observed)
                    ok = false;
            }
        }
    }
    // spot values, both from the direct search oracle
    auto c8 = oracle::brute_independence_profile(make("cycle(8)"));
    auto h8 = oracle::brute_independence_profile(make("copies(kdd(2),2)"));
    ok = ok && c8[4] == 2 && h8[4] == 4;
    report(7, "2-regular dominance", ok,
           std::to_string(compared) + " coefficient comparisons, i4(C8)=" + c8[4].get_str() +
               " < i4(H)=" + h8[4].get_str());
}

// 8. matching coefficients equal line graph independence coefficients
void criterion8(const std::vector<corpus::NamedGraph>& corpus) {
    std::string bad;
    long checked = 0;
    for (const auto& [label, g] : corpus) {
        if (matching_profile(g).coeffs != oracle::brute_matching_profile(g)) {
            bad = label;
            break;
        }
        ++checked;
    }
    report(8, "matching line graph identity", bad.empty(),
           bad.empty() ? std::to_string(checked) + " graphs" : "mismatch at " + bad);
}

// 9. strict clique minimization for connected cubic graphs up to 12 vertices
void criterion9() {
    Graph k4 = make("clique(4)");
    std::vector<Rat> lambdas = {Rat(1, 2000), Rat(1, 100), Rat(1, 10)};
    long graphs = 0, strict = 0;
    std::string bad;
    for (int n : {4, 6, 8, 10, 12}) {
        for (const Graph& g : corpus::connected_regular(3, n)) {
            if (isomorphic(g, k4)) continue;
            ++graphs;
            for (const Rat& lambda : lambdas) {
                auto cmp = exact_md_inequality(g, lambda);
                if (!cmp.holds || !cmp.strict) {
                    bad = "n=" + std::to_string(n) + " lambda=" + lambda.get_str();
                    break;
                }
                ++strict;
            }
            auto cert = clique_min_certificate(g, Rat(1, 2000));
            if (cert.verdict == Verdict::CertifiedStrict &&
                !exact_md_inequality(g, Rat(1, 2000)).strict)
                bad = "certificate disagrees with exact check at n=" + std::to_string(n);
            if (!bad.empty()) break;
        }
        if (!bad.empty()) break;
    }
    report(9, "clique minimization", bad.empty() && graphs == 111,
           bad.empty() ? std::to_string(graphs) + " graphs, " + std::to_string(strict) +
                             " strict comparisons"
                       : bad);
}

// 10. monomer-dimer truncation contains the certified exact log, width <= 2nK^-4
void criterion10(const std::vector<corpus::NamedGraph>& corpus) {
    Rat lambda(1, 2000);
    std::string bad;
    long checked = 0;
    for (const auto& [label, g] : corpus) {
        if (!check_regular(g, 3)) continue;
        Interval tr = md_truncated_log(g, lambda, 4);
        Rat z = evaluate(matching_profile(g), lambda);
        Interval logz = Interval::log_of(z);
        if (!tr.contains(logz)) {
            bad = "containment at " + label;
            break;
        }
        auto cfg = clique_min_config(lambda, 3);
        Rat width_bound = Rat(2 * g.order()) * cfg.k_inverse.pow(4).upper_rat();
        // slack for the outward rounding of the exactly computed series terms
        Rat slack = Rat(1) / rat_pow(Rat(2), 80);
        if (tr.upper_rat() - tr.lower_rat() > width_bound + slack) {
            bad = "width at " + label;
            break;
        }
        ++checked;
    }
    report(10, "monomer-dimer truncation", bad.empty() && checked > 0,
           bad.empty() ? std::to_string(checked) + " cubic graphs" : bad);
}

// 11. no CERTIFIED_STRICT against exact equality or reversal
void criterion11(const std::vector<corpus::NamedGraph>& corpus, const SmallGraphCatalog& cat) {
    std::string bad;
    long ran = 0, skipped = 0;
    auto sound = [&](const Graph& hn, const Graph& g, long k, const std::string& label) {
        DominanceResult res;
        try {
            res = dominance_certificate(hn, g, k, 4, cat);
        } catch (const DivergentRegime&) {
            ++skipped;
            return;
        }
        ++ran;
        if (res.verdict != Verdict::CertifiedStrict) return;
        Int ih = independence_prefix(hn, k).back();
        Int ig = independence_prefix(g, k).back();
        if (ih <= ig) bad = label + " k=" + std::to_string(k);
    };
    // small corpus pairs mostly fall outside the convergence regime and are
    // counted as skipped rather than silently dropped
    for (size_t i = 0; i + 1 < corpus.size() && bad.empty(); i += 7) {
        const Graph& a = corpus[i].g;
        const Graph& b = corpus[i + 1].g;
        if (a.order() != b.order() || regular_degree(a) != regular_degree(b)) continue;
        for (long k = 0; k <= 4; ++k) sound(a, b, k, corpus[i].name);
    }
    std::vector<std::pair<std::string, std::string>> big = {
        {"copies(cycle(4),750)", "copies(cycle(3),1000)"},
        {"copies(cycle(4),750)", "copies(cycle(5),600)"},
        {"copies(cycle(4),750)", "copies(cycle(4),750)"},
        {"copies(kdd(3),500)", "copies(clique(4),750)"},
        {"copies(cycle(3),1000)", "copies(cycle(4),750)"},
        {"copies(clique(4),750)", "copies(kdd(3),500)"}};
    for (const auto& [ha, gb] : big) {
        if (!bad.empty()) break;
        Graph hn = make(ha), g = make(gb);
        for (long k = 0; k <= 5; ++k) sound(hn, g, k, ha + " vs " + gb);
    }
    report(11, "certificate soundness", bad.empty() && ran > 0,
           bad.empty() ? std::to_string(ran) + " certificates checked, " +
                             std::to_string(skipped) + " outside the convergence regime"
                       : "unsound strict verdict at " + bad);
}

}  // namespace

int main() {
    auto corpus = corpus::acceptance_corpus();
    SmallGraphCatalog cat(6);
    criterion1(corpus, cat);
    criterion2(cat);
    criterion3(corpus, cat);
    criterion4(cat);
    criterion5();
    criterion6();
    criterion7();
    criterion8(corpus);
    criterion9();
    criterion10(corpus);
    criterion11(corpus, cat);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
