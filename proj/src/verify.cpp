#include "polycert/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "polycert/census.hpp"

namespace polycert {

namespace {

int sign_of(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace

DominanceReport verify_dominance(const std::vector<std::pair<std::string, Graph>>& corpus,
                                 const Graph& reference, ProfileKind kind,
                                 Direction direction, long k_max,
                                 std::optional<int> girth_min) {
    auto dref = regular_degree(reference);
    if (!dref) throw std::invalid_argument("reference graph is not regular");

    DominanceReport rep;
    rep.n = reference.order();
    rep.d = *dref;
    rep.kind = kind;
    rep.direction = direction;

    CoefficientProfile ref_profile = kind == ProfileKind::IndependentSets
                                         ? independence_profile(reference)
                                         : matching_profile(reference);
    rep.reference_profile = ref_profile.coeffs;
    std::optional<int> ref_girth = girth(reference);

    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const auto& [label, g] = corpus[idx];
        GraphVerdict gv;
        gv.index = idx;
        gv.label = label;

        if (g.order() != rep.n) {
            gv.rejected = true;
            gv.reject_reason = "order mismatch";
        } else if (!check_regular(g, rep.d)) {
            gv.rejected = true;
            std::ostringstream os;
            os << "not " << rep.d << "-regular";
            gv.reject_reason = os.str();
        } else if (girth_min) {
            auto gg = girth(g);
            if (gg && *gg < *girth_min) {
                gv.rejected = true;
                gv.reject_reason = "girth below threshold";
            }
        }
        if (gv.rejected) {
            ++rep.rejected;
            rep.graphs.push_back(std::move(gv));
            continue;
        }

        CoefficientProfile profile = kind == ProfileKind::IndependentSets
                                         ? independence_profile(g)
                                         : matching_profile(g);
        gv.matches_reference = isomorphic(g, reference);

        long last = static_cast<long>(std::max(profile.degree(), ref_profile.degree()));
        if (k_max >= 0) last = std::min(last, k_max);
        for (long k = 0; k <= last; ++k) {
            KComparison kc;
            kc.k = k;
            kc.cmp = sign_of(profile.at(k) - ref_profile.at(k));
            kc.alarm = direction == Direction::Max ? kc.cmp > 0 : kc.cmp < 0;
            kc.strict_observed = direction == Direction::Max ? kc.cmp < 0 : kc.cmp > 0;
            kc.strict_expected = direction == Direction::Max && !gv.matches_reference &&
                                 ref_girth && k >= *ref_girth && 2 * k <= rep.n;
            if (kc.alarm) {
                gv.any_alarm = true;
                ++rep.alarms;
            }
            gv.entries.push_back(kc);
        }
        ++rep.accepted;
        rep.graphs.push_back(std::move(gv));
    }
    return rep;
}

std::vector<OptimalityGap> optimality_scan(
    const std::vector<std::pair<std::string, Graph>>& corpus, const Graph& h, int g) {
    auto dref = regular_degree(h);
    if (!dref) throw std::invalid_argument("candidate graph is not regular");
    int d = *dref;
    if (g < 3 || g > kMaxSmallGraphOrder) throw std::invalid_argument("cycle length out of range");
    SmallGraph cg = SmallGraph::cycle(g);
    Rat ref_density = Rat(inj_count(cg, h)) / h.order();

    Graph kdd;
    if (g == 4) kdd = construct(GraphSpec{GraphSpec::Kind::CompleteBipartite, d, 1, nullptr});

    std::vector<OptimalityGap> out;
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const auto& [label, graph] = corpus[idx];
        if (components(graph).size() != 1)
            throw std::invalid_argument("disconnected graph in scan: " + label);
        if (!check_regular(graph, d))
            throw std::invalid_argument("degree mismatch in scan: " + label);
        auto gg = girth(graph);
        if (gg && *gg < g - 1)
            throw std::invalid_argument("girth below scan threshold: " + label);

        OptimalityGap gap;
        gap.index = idx;
        gap.label = label;
        gap.density = Rat(inj_count(cg, graph)) / graph.order();
        gap.reference_density = ref_density;
        gap.gap = ref_density - gap.density;
        gap.equals_reference = isomorphic(graph, h);
        if (g == 4) {
            bool is_kdd = graph.order() == 2 * d && isomorphic(graph, kdd);
            gap.per_vertex_bound_ok =
                is_kdd || gap.density <= Rat(static_cast<long>(d) * (d - 1) * (d - 1) - 1);
        }
        out.push_back(std::move(gap));
    }
    return out;
}

long moore_vertex_count(int d, int g) {
    if (d < 2 || g < 3) throw std::invalid_argument("degree or girth out of range");
    long out = 1;
    if (g % 2) {
        long pw = 1;
        for (int j = 0; j <= (g - 3) / 2; ++j) {
            out += static_cast<long>(d) * pw;
            pw *= d - 1;
        }
    } else {
        long pw = 1;
        for (int j = 0; j <= (g - 4) / 2; ++j) {
            out += static_cast<long>(d) * pw;
            pw *= d - 1;
        }
        out += pw;  // pw = (d-1)^{(g-2)/2} after the loop
    }
    return out;
}

}  // namespace polycert
