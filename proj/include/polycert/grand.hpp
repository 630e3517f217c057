#pragma once

#include "polycert/canonical.hpp"
#include "polycert/graph.hpp"
#include "polycert/interval.hpp"
#include "polycert/rat.hpp"
#include "polycert/verdict.hpp"

namespace polycert {

// Cluster census for the monomer-dimer polymer model (polymers are edges,
// incompatible when incident or identical), enough for order <= 3 truncations.
struct MDClusterTerms {
    Int edge_count;      // order-1 clusters
    Int incident_pairs;  // unordered pairs of distinct edges sharing a vertex
    Int claws;           // unordered triples of distinct edges at one vertex
    Int inj_c3;          // injective triangle maps, 6 per triangle
    Int center_paths;    // 3 distinct edges e-f-g, f meeting both, e,g disjoint

    static MDClusterTerms compute(const Graph& g);

    // sum of cluster terms of order <= order_max (order_max <= 3)
    Rat truncation(const Rat& lambda, int order_max) const;
};

struct CliqueMinConfig {
    Rat lambda;
    int d = 0;
    Interval c;           // 1/(96 e^4)
    Interval k_inverse;   // e lambda (2d-1)
    bool convergent = false;        // K >= 1 conservatively
    bool guaranteed_range = false;  // 0 < lambda < c d^-4 conservatively
};

CliqueMinConfig clique_min_config(const Rat& lambda, int d,
                                  int prec = Interval::kDefaultPrecision);

// Certified enclosure of log Z_G^m(lambda): exact cluster terms of order
// <= t-1 plus the tail bound n K^-t with K = (e lambda (2d-1))^-1.
Interval md_truncated_log(const Graph& g, const Rat& lambda, int t,
                          int prec = Interval::kDefaultPrecision);

struct CliqueMinResult {
    Verdict verdict = Verdict::Inconclusive;
    Rat triangle_density;  // inj(C_3, G) / n
    Interval sharp_lower;  // (lambda^3/6)(d(d-1) - density) - 2 K^-4
    Interval simple_lower; // lambda^3/3 - 2 K^-4
    CliqueMinConfig config;
};

// Certified lower bound on (1/n) log Z_G^m - (1/(d+1)) log Z_{K_{d+1}}^m.
// Requires no component isomorphic to K_{d+1}.
CliqueMinResult clique_min_certificate(const Graph& g, const Rat& lambda,
                                       int prec = Interval::kDefaultPrecision);

struct MDComparison {
    bool holds = false;   // (Z_G^m)^{d+1} >= (Z_{K_{d+1}}^m)^n
    bool strict = false;
};

// Exact integer-power comparison of the per-vertex matching partition
// functions of G and K_{d+1}.
MDComparison exact_md_inequality(const Graph& g, const Rat& lambda);

}  // namespace polycert
