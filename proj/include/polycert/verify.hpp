#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycert/graph.hpp"
#include "polycert/profile.hpp"
#include "polycert/rat.hpp"

namespace polycert {

enum class Direction { Max, Min };

// -1: corpus coefficient below reference, 0: equal, +1: above
struct KComparison {
    long k = 0;
    int cmp = 0;
    bool alarm = false;           // violates the expected direction
    bool strict_expected = false; // reference strictness claim covers this k
    bool strict_observed = false;
};

struct GraphVerdict {
    size_t index = 0;
    std::string label;
    bool rejected = false;
    std::string reject_reason;
    bool matches_reference = false;  // isomorphic to the reference graph
    std::vector<KComparison> entries;
    bool any_alarm = false;
};

struct DominanceReport {
    long n = 0;
    int d = 0;
    ProfileKind kind = ProfileKind::IndependentSets;
    Direction direction = Direction::Max;
    std::vector<Int> reference_profile;
    std::vector<GraphVerdict> graphs;
    long accepted = 0;
    long rejected = 0;
    long alarms = 0;
};

// Exact coefficient-wise comparison of every corpus graph against the
// reference.  k_max < 0 compares the full profiles.  For Min direction a
// minimum-girth filter may be applied; filtered graphs are recorded as
// rejected, not silently dropped.
DominanceReport verify_dominance(const std::vector<std::pair<std::string, Graph>>& corpus,
                                 const Graph& reference, ProfileKind kind,
                                 Direction direction, long k_max = -1,
                                 std::optional<int> girth_min = std::nullopt);

struct OptimalityGap {
    size_t index = 0;
    std::string label;
    Rat density;            // inj(C_g, G) / |V(G)|
    Rat reference_density;  // inj(C_g, H) / |V(H)|
    Rat gap;                // reference - density
    bool equals_reference = false;
    // for g = 4 against K_{d,d}: density <= d(d-1)^2 - 1 per the start-vertex bound
    bool per_vertex_bound_ok = true;
};

// Cycle-density comparison of connected d-regular corpus graphs against a
// candidate extremal graph H at girth parameter g.
std::vector<OptimalityGap> optimality_scan(
    const std::vector<std::pair<std::string, Graph>>& corpus, const Graph& h, int g);

// Minimum order of a d-regular graph of girth g.
long moore_vertex_count(int d, int g);

}  // namespace polycert
