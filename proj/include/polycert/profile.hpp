#pragma once

#include <vector>

#include "polycert/graph.hpp"
#include "polycert/rat.hpp"

namespace polycert {

enum class ProfileKind { IndependentSets, Matchings };

struct CoefficientProfile {
    ProfileKind kind = ProfileKind::IndependentSets;
    std::vector<Int> coeffs;  // coeffs[k], trailing entries nonzero

    Int at(size_t k) const { return k < coeffs.size() ? coeffs[k] : Int(0); }
    size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// coefficient-wise product; kmax >= 0 truncates to degree kmax
std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b, long kmax = -1);

// i_k(G) for all k, exact
CoefficientProfile independence_profile(const Graph& g);

// m_k(G) for all k; computed as i_k(L(G))
CoefficientProfile matching_profile(const Graph& g);

// first kmax+1 independence coefficients; cheap on disjoint unions with many
// repeated components
std::vector<Int> independence_prefix(const Graph& g, long kmax);

Rat evaluate(const CoefficientProfile& p, const Rat& lambda);

struct RatioBounds {
    long t;
    Rat lower, upper;  // brackets i_t(G)/i_{t+1}(G)
};

// valid for d-regular G on n vertices when n > (d+1)t
RatioBounds ratio_bounds(long n, int d, long t);

}  // namespace polycert
