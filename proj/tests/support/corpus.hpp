#pragma once

#include <vector>

#include "polycert/graph.hpp"

namespace polycert::corpus {

// all 2-regular graphs on n vertices up to isomorphism (cycle-length multisets)
std::vector<Graph> two_regular(int n);

// all connected d-regular graphs on n vertices of girth >= min_girth, up to
// isomorphism, by canonical-extension backtracking
std::vector<Graph> connected_regular(int d, int n, int min_girth = 3);

// circulant graph on Z_n with the given positive offsets
Graph circulant(int n, const std::vector<int>& offsets);

// a fixed batch of d-regular graphs (>= 20 for d in {2..5}) of varied orders
std::vector<Graph> degree_batch(int d);

struct NamedGraph {
    std::string name;
    Graph g;
};

// corpus shared by the acceptance checks: connected cubic graphs on <= 10
// vertices, 2-regular graphs on <= 12 vertices, K_{d,d} for d <= 5, Petersen,
// Heawood
std::vector<NamedGraph> acceptance_corpus();

}  // namespace polycert::corpus
