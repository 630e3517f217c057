#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polycert/graph.hpp"
#include "polycert/rat.hpp"
#include "polycert/smallgraph.hpp"

namespace polycert {

// maps V(F) -> V(G) sending edges to edges; loops=true targets G with a
// self-loop at every vertex
Int hom_count(const SmallGraph& f, const Graph& g, bool loops);

Int inj_count(const SmallGraph& f, const Graph& g);

Int aut_count(const SmallGraph& f);

// subgraph copies: inj / |Aut(F)|
Int sub_count(const SmallGraph& f, const Graph& g);

// hom(F, G with loops) / n^{|V(F)|}
Rat density_t(const SmallGraph& f, const Graph& g);

struct DensityGap {
    SmallGraph f;
    Rat value;
};

// t(F) = t(F, Hn with loops) - t(F, G with loops); both graphs must have the
// same order and degree
DensityGap density_gap(const SmallGraph& f, const Graph& hn, const Graph& g);

// same gap computed on the line graphs
DensityGap tau_gap(const SmallGraph& f, const Graph& hn, const Graph& g);

// All quotients F/pi over unordered partitions pi of V(F), with loops and
// multi-edges dropped, paired with inj(F/pi, G).  Summing the counts gives
// hom(F, G with loops).
std::vector<std::pair<SmallGraph, Int>> contraction_decompose(const SmallGraph& f,
                                                              const Graph& g);

// Caches homomorphism counts into a fixed host graph via its component
// decomposition, so disjoint unions with huge multiplicities stay cheap.
class GraphHomContext {
public:
    explicit GraphHomContext(const Graph& g);

    int order() const { return n_; }
    const Graph& graph() const { return g_; }

    Int hom(const SmallGraph& f, bool loops) const;  // f connected
    Rat density(const SmallGraph& f) const;          // with loops

private:
    const Graph& g_;
    int n_;
    ComponentClasses classes_;
    mutable std::map<std::tuple<int, uint32_t, bool>, Int> memo_;
};

}  // namespace polycert
