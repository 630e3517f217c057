#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycert/rat.hpp"

namespace polycert {

// Simple undirected graph, vertices 0..n-1, no loops or multi-edges.
// Immutable once built; construction goes through add_edge / from_edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    long edge_count() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // edges in lexicographic (min,max) order
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
};

// Adjacency of G with a self-loop at every vertex; never materialized.
struct LoopedView {
    const Graph& base;
    bool adjacent(int u, int v) const { return u == v || base.adjacent(u, v); }
};

struct GraphSpec {
    enum class Kind { CompleteBipartite, Clique, Cycle, Heawood, Petersen, DisjointCopies };

    Kind kind = Kind::Heawood;
    int param = 0;  // d for kdd, m for clique, length for cycle
    int count = 1;  // for DisjointCopies
    std::shared_ptr<const GraphSpec> inner;

    int vertex_count() const;
    std::string to_string() const;

    // grammar: kdd(d) | clique(m) | cycle(len) | heawood | petersen | copies(<spec>,c)
    static GraphSpec parse(const std::string& s);
};

Graph construct(const GraphSpec& spec);

struct ComponentSplit {
    Graph g0;    // components not isomorphic to the reference
    Graph gh;    // components isomorphic to the reference
    Rat alpha;   // |V(g0)| / n
};

bool check_regular(const Graph& g, int d);

// If the graph is regular returns the common degree.
std::optional<int> regular_degree(const Graph& g);

// Vertex sets of connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Vertices of the output are the edges of g in lexicographic (min,max) order.
Graph line_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

Graph disjoint_union(const Graph& a, const Graph& b);

ComponentSplit split_by_reference(const Graph& g, const Graph& h);

// Component decomposition up to isomorphism: distinct component shapes with multiplicities.
struct ComponentClasses {
    std::vector<Graph> shapes;
    std::vector<long> multiplicity;
};
ComponentClasses component_classes(const Graph& g);

}  // namespace polycert
