#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polycert/graph.hpp"
#include "polycert/rat.hpp"

namespace polycert {

inline constexpr int kMaxSmallGraphOrder = 8;

// Labeled graph on {0..j-1}, edges packed into a bitmask over the C(j,2)
// vertex pairs in lexicographic (min,max) order.
struct SmallGraph {
    int j = 0;
    uint32_t edge_mask = 0;

    static int pair_index(int j, int u, int v);  // u < v
    static int pair_count(int j) { return j * (j - 1) / 2; }

    static SmallGraph from_edges(int j, const std::vector<std::pair<int, int>>& edges);
    static SmallGraph single_vertex() { return {1, 0}; }
    static SmallGraph single_edge() { return from_edges(2, {{0, 1}}); }
    static SmallGraph path(int j);   // j vertices, j-1 edges
    static SmallGraph cycle(int j);  // j >= 3

    bool has_edge(int u, int v) const;
    int edge_count() const;
    bool connected() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degrees() const;
    Graph to_graph() const;
    SmallGraph permuted(const std::vector<int>& perm) const;

    bool operator==(const SmallGraph&) const = default;
};

// Lexicographically smallest edge mask over relabelings (restricted to
// orderings compatible with vertex invariants, which is still a canonical form).
uint32_t canonical_mask(const SmallGraph& f);

// (1/j!) * sum over spanning connected edge subsets of (-1)^{#edges}
Rat ursell(const SmallGraph& f);

struct CatalogRecord {
    uint32_t edge_mask;
    int edge_count;
    Rat ursell;
};

struct IsoClass {
    SmallGraph rep;
    int edge_count;
    long labeled_count;
};

// All connected labeled graphs on {0..j-1} for each j <= j_max, with Ursell
// values, spanning-tree sublists, and an isomorphism-class grouping used to
// batch homomorphism counts.
class SmallGraphCatalog {
public:
    // cache_dir != "": record files are read from / written to that directory
    explicit SmallGraphCatalog(int j_max, const std::string& cache_dir = "");

    int j_max() const { return j_max_; }
    const std::vector<CatalogRecord>& records(int j) const { return records_.at(j); }
    const std::vector<IsoClass>& classes(int j) const { return classes_.at(j); }
    const std::vector<uint32_t>& tree_masks(int j) const { return trees_.at(j); }
    long connected_count(int j) const { return static_cast<long>(records_.at(j).size()); }
    long tree_count(int j) const { return static_cast<long>(trees_.at(j).size()); }

private:
    int j_max_;
    std::vector<std::vector<CatalogRecord>> records_;
    std::vector<std::vector<uint32_t>> trees_;
    std::vector<std::vector<IsoClass>> classes_;

    void build_level(int j, const std::string& cache_dir);
};

}  // namespace polycert
