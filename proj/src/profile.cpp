#include "polycert/profile.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace polycert {

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b, long kmax) {
    if (a.empty() || b.empty()) return {};
    size_t deg = a.size() + b.size() - 2;
    if (kmax >= 0) deg = std::min(deg, static_cast<size_t>(kmax));
    std::vector<Int> out(deg + 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (i > deg) break;
        for (size_t j = 0; j < b.size() && i + j <= deg; ++j) out[i + j] += a[i] * b[j];
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

namespace {

std::vector<Int> poly_pow(std::vector<Int> base, long e, long kmax) {
    std::vector<Int> acc{Int(1)};
    while (e > 0) {
        if (e & 1) acc = convolve(acc, base, kmax);
        e >>= 1;
        if (e) base = convolve(base, base, kmax);
    }
    return acc;
}

// independence polynomial of one component (order <= 64), branching on a
// max-degree vertex with memoization on the remaining-vertex bitmask
struct ComponentCounter {
    std::vector<uint64_t> closed;  // closed neighborhoods
    std::unordered_map<uint64_t, std::vector<Int>> memo;

    explicit ComponentCounter(const Graph& g) {
        if (g.order() > 64)
            throw std::runtime_error("component too large for exact profile (> 64 vertices)");
        closed.resize(g.order());
        for (int v = 0; v < g.order(); ++v) {
            closed[v] = 1ull << v;
            for (int u : g.neighbors(v)) closed[v] |= 1ull << u;
        }
    }

    const std::vector<Int>& run(uint64_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<Int> result;
        if (mask == 0) {
            result = {Int(1)};
        } else {
            int best = -1, best_deg = -1;
            for (uint64_t m = mask; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int deg = std::popcount(closed[v] & mask) - 1;
                if (deg > best_deg) {
                    best = v;
                    best_deg = deg;
                }
            }
            std::vector<Int> without = run(mask & ~(1ull << best));
            std::vector<Int> with = run(mask & ~closed[best]);
            result = std::move(without);
            if (result.size() < with.size() + 1) result.resize(with.size() + 1, Int(0));
            for (size_t k = 0; k < with.size(); ++k) result[k + 1] += with[k];
        }
        return memo.emplace(mask, std::move(result)).first->second;
    }
};

std::vector<Int> independence_coeffs(const Graph& g, long kmax) {
    auto cls = component_classes(g);
    std::vector<Int> acc{Int(1)};
    for (size_t i = 0; i < cls.shapes.size(); ++i) {
        ComponentCounter counter(cls.shapes[i]);
        uint64_t full = cls.shapes[i].order() == 64 ? ~0ull : (1ull << cls.shapes[i].order()) - 1;
        std::vector<Int> comp = counter.run(full);
        acc = convolve(acc, poly_pow(std::move(comp), cls.multiplicity[i], kmax), kmax);
    }
    return acc;
}

}  // namespace

CoefficientProfile independence_profile(const Graph& g) {
    return {ProfileKind::IndependentSets, independence_coeffs(g, -1)};
}

CoefficientProfile matching_profile(const Graph& g) {
    return {ProfileKind::Matchings, independence_coeffs(line_graph(g), -1)};
}

std::vector<Int> independence_prefix(const Graph& g, long kmax) {
    auto out = independence_coeffs(g, kmax);
    out.resize(kmax + 1, Int(0));
    return out;
}

Rat evaluate(const CoefficientProfile& p, const Rat& lambda) {
    Rat acc(0);
    for (size_t k = p.coeffs.size(); k-- > 0;) acc = acc * lambda + Rat(p.coeffs[k]);
    acc.canonicalize();
    return acc;
}

RatioBounds ratio_bounds(long n, int d, long t) {
    if (n <= static_cast<long>(d + 1) * t)
        throw std::invalid_argument("ratio_bounds requires n > (d+1)t");
    RatioBounds out;
    out.t = t;
    out.lower = Rat(t + 1, n);
    out.upper = Rat(t + 1, n - (d + 1) * t);
    out.lower.canonicalize();
    out.upper.canonicalize();
    return out;
}

}  // namespace polycert
