#include "polycert/grand.hpp"

#include <algorithm>
#include <sstream>

#include "polycert/profile.hpp"

namespace polycert {

MDClusterTerms MDClusterTerms::compute(const Graph& g) {
    MDClusterTerms t;
    t.edge_count = Int(g.edge_count());
    t.incident_pairs = 0;
    t.claws = 0;
    for (int v = 0; v < g.order(); ++v) {
        long dv = g.degree(v);
        t.incident_pairs += Int(dv * (dv - 1) / 2);
        t.claws += Int(dv * (dv - 1) * (dv - 2) / 6);
    }
    // triangles counted once per edge via common neighborhoods
    Int edge_triangles = 0;  // sum over edges of common neighbors, = 3 * #triangles
    Int center = 0;
    for (auto [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        long common = 0;
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) ++i;
            else if (nu[i] > nv[j]) ++j;
            else { ++common; ++i; ++j; }
        }
        edge_triangles += common;
        center += Int(static_cast<long>(nu.size() - 1)) * Int(static_cast<long>(nv.size() - 1)) - common;
    }
    t.inj_c3 = 2 * edge_triangles;
    t.center_paths = center;
    return t;
}

Rat MDClusterTerms::truncation(const Rat& lambda, int order_max) const {
    if (order_max > 3) throw std::invalid_argument("cluster order beyond supported census");
    Rat out = 0;
    if (order_max >= 1) out += lambda * Rat(edge_count);
    if (order_max >= 2)
        out -= rat_pow(lambda, 2) / 2 * Rat(edge_count + 2 * incident_pairs);
    if (order_max >= 3)
        out += rat_pow(lambda, 3) *
               (Rat(edge_count) / 3 + Rat(2 * incident_pairs) + Rat(2 * claws) +
                Rat(inj_c3) / 3 + Rat(center_paths));
    return out;
}

CliqueMinConfig clique_min_config(const Rat& lambda, int d, int prec) {
    CliqueMinConfig cfg;
    cfg.lambda = lambda;
    cfg.d = d;
    cfg.c = (Interval::exact(96, prec) * Interval::exp_of_long(4, prec)).reciprocal();
    cfg.k_inverse = Interval::exp_of_long(1, prec) *
                    Interval::enclose(lambda * (2 * d - 1), prec);
    if (lambda > 0) {
        Interval one = Interval::exact(1, prec);
        cfg.convergent = (one - cfg.k_inverse).definitely_nonnegative();
        Rat scaled = lambda * int_pow(Int(d), 4);
        cfg.guaranteed_range =
            (cfg.c - Interval::enclose(scaled, prec)).definitely_positive();
    }
    return cfg;
}

Interval md_truncated_log(const Graph& g, const Rat& lambda, int t, int prec) {
    if (lambda == 0) return Interval::exact(0, prec);
    if (lambda < 0) throw std::domain_error("negative fugacity");
    if (t < 1 || t > 4) throw std::invalid_argument("truncation order out of range");
    auto d = regular_degree(g);
    if (!d) throw std::invalid_argument("graph is not regular");
    CliqueMinConfig cfg = clique_min_config(lambda, *d, prec);
    if (!cfg.convergent) {
        std::ostringstream os;
        os << "fugacity outside convergence regime: lambda="
           << lambda.get_str() << " d=" << *d;
        throw DivergentRegime(os.str());
    }
    MDClusterTerms terms = MDClusterTerms::compute(g);
    Rat truncated = terms.truncation(lambda, t - 1);
    Interval tail = Interval::exact(g.order(), prec) *
                    cfg.k_inverse.pow(static_cast<unsigned long>(t));
    return Interval::enclose(truncated, prec) + Interval::symmetric(tail);
}

CliqueMinResult clique_min_certificate(const Graph& g, const Rat& lambda, int prec) {
    auto dopt = regular_degree(g);
    if (!dopt) throw std::invalid_argument("graph is not regular");
    int d = *dopt;
    long n = g.order();
    if (lambda <= 0) throw std::domain_error("fugacity must be positive");

    Graph clique = construct(GraphSpec{GraphSpec::Kind::Clique, d + 1, 1, nullptr});
    for (const auto& comp : components(g))
        if (isomorphic(induced_subgraph(g, comp), clique))
            throw std::invalid_argument("graph has a complete component of order d+1");

    CliqueMinResult res;
    res.config = clique_min_config(lambda, d, prec);
    if (!res.config.convergent) {
        std::ostringstream os;
        os << "fugacity outside convergence regime: lambda="
           << lambda.get_str() << " d=" << d;
        throw DivergentRegime(os.str());
    }
    MDClusterTerms terms = MDClusterTerms::compute(g);
    res.triangle_density = Rat(terms.inj_c3) / n;
    Interval tail2 = Interval::exact(2, prec) * res.config.k_inverse.pow(4);
    Rat l3 = rat_pow(lambda, 3);
    res.sharp_lower =
        Interval::enclose(l3 / 6 * (Rat(d * (d - 1)) - res.triangle_density), prec) -
        tail2;
    res.simple_lower = Interval::enclose(l3 / 3, prec) - tail2;
    res.verdict = res.sharp_lower.definitely_positive() ? Verdict::CertifiedStrict
                                                        : Verdict::Inconclusive;
    return res;
}

MDComparison exact_md_inequality(const Graph& g, const Rat& lambda) {
    if (lambda < 0) throw std::domain_error("negative fugacity");
    auto dopt = regular_degree(g);
    if (!dopt) throw std::invalid_argument("graph is not regular");
    int d = *dopt;
    Graph clique = construct(GraphSpec{GraphSpec::Kind::Clique, d + 1, 1, nullptr});
    Rat zg = evaluate(matching_profile(g), lambda);
    Rat zk = evaluate(matching_profile(clique), lambda);
    Rat lhs = rat_pow(zg, static_cast<unsigned long>(d + 1));
    Rat rhs = rat_pow(zk, static_cast<unsigned long>(g.order()));
    MDComparison cmp;
    cmp.holds = lhs >= rhs;
    cmp.strict = lhs > rhs;
    return cmp;
}

}  // namespace polycert
