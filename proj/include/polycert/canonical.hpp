#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "polycert/census.hpp"
#include "polycert/graph.hpp"
#include "polycert/interval.hpp"
#include "polycert/rat.hpp"
#include "polycert/smallgraph.hpp"
#include "polycert/verdict.hpp"

namespace polycert {

// Raised when the convergence condition gamma = (d+1) e^5 k / n <= 1 cannot
// be verified conservatively.
struct DivergentRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolymerWeight {
    int j;
    Rat value;
};

// An isomorphism type of ordered polymer tuples, represented on a canonical
// support {0..support-1}.
struct ClusterType {
    std::vector<int> sizes;         // |S_1|,...,|S_m|, enumeration order
    std::vector<uint32_t> pattern;  // polymer subsets as bitmasks over the support
    int support = 0;
    long excess = 0;        // sum(sizes) - m
    long aut_ordered = 1;   // |{sigma : sigma(S_i) = S_i for all i}|
    Rat ursell_value;       // phi of the incompatibility graph

    // number of ordered clusters over a ground set of size k with this type
    Int embedding_count(long k) const;

    SmallGraph incompatibility_graph() const;
};

// All cluster types with excess <= max_excess (results are cached per bound).
const std::vector<ClusterType>& enumerate_cluster_types(int max_excess);

struct KPReport {
    long k = 0;
    long n = 0;
    int d = 0;
    Rat gamma_upper;  // certified upper bound on (d+1) e^5 k / n
    bool satisfied = false;
    Rat margin;  // 1 - gamma_upper
};

KPReport kp_check(long k, long n, int d, int prec = Interval::kDefaultPrecision);

struct DominanceResult {
    Verdict verdict = Verdict::Inconclusive;
    Interval lower_bound;   // certified lower bound on log(i_k(Hn)/i_k(G))
    Rat truncation_diff;    // exact truncated-series difference
    Interval gamma;
    Interval tail;          // 2 k gamma^t
};

class CanonicalExpansion {
public:
    CanonicalExpansion(const Graph& g, const SmallGraphCatalog& catalog,
                       int prec = Interval::kDefaultPrecision);

    long order() const { return n_; }
    int degree() const { return d_; }

    // w_G(S) for |S| = j; depends only on j.  2 <= j <= catalog j_max.
    Rat polymer_weight(int j) const;

    // polymer partition function by direct partition sum; k <= catalog j_max
    Rat exact_xi(long k) const;

    Interval gamma(long k) const;

    // certified enclosure of log Xi_k, truncating at cluster excess t
    Interval truncated_log_xi(long k, int t) const;

    const SmallGraphCatalog& catalog() const { return cat_; }

private:
    const Graph& g_;
    const SmallGraphCatalog& cat_;
    GraphHomContext ctx_;
    long n_;
    int d_;
    int prec_;
    mutable std::map<int, Rat> weights_;

    friend DominanceResult dominance_certificate(const Graph& hn, const Graph& g, long k,
                                                 int t, const SmallGraphCatalog& cat,
                                                 int prec);
};

// Certified lower bound on log(i_k(Hn)/i_k(G)) from the truncated cluster
// expansion difference plus tail bound; never strict unless the bound is
// conservatively positive.
DominanceResult dominance_certificate(const Graph& hn, const Graph& g, long k, int t,
                                      const SmallGraphCatalog& cat,
                                      int prec = Interval::kDefaultPrecision);

}  // namespace polycert
