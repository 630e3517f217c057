#include "polycert/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycert {

namespace {

std::vector<SmallGraph> small_components(const SmallGraph& f) {
    std::vector<int> comp(f.j, -1);
    int ncomp = 0;
    for (int s = 0; s < f.j; ++s) {
        if (comp[s] >= 0) continue;
        int id = ncomp++;
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < f.j; ++u)
                if (comp[u] < 0 && f.has_edge(u, v)) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
    }
    std::vector<std::vector<int>> verts(ncomp);
    for (int v = 0; v < f.j; ++v) verts[comp[v]].push_back(v);
    std::vector<SmallGraph> out;
    for (const auto& vs : verts) {
        std::vector<int> index(f.j, -1);
        for (size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : f.edges())
            if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
        out.push_back(SmallGraph::from_edges(static_cast<int>(vs.size()), es));
    }
    return out;
}

// Backtracking placement of F's vertices in a connected order; mpz additions
// happen only at internal nodes, leaves are batch-counted in a machine word.
struct HomSearch {
    const Graph& g;
    bool loops;
    bool injective;
    int j;
    std::vector<std::vector<int>> anchors;  // earlier positions adjacent in F
    std::vector<int> images;
    Int total = 0;

    HomSearch(const SmallGraph& f, const Graph& host, bool with_loops, bool inj)
        : g(host), loops(with_loops), injective(inj), j(f.j), anchors(f.j), images(f.j, -1) {
        // BFS order over F (F connected); anchors expressed in order positions
        std::vector<int> order;
        std::vector<char> seen(f.j, 0);
        for (int s = 0; s < f.j; ++s) {
            if (seen[s]) continue;
            std::vector<int> queue{s};
            seen[s] = 1;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                order.push_back(v);
                for (int u = 0; u < f.j; ++u)
                    if (!seen[u] && f.has_edge(u, v)) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
            }
        }
        for (int p = 1; p < f.j; ++p)
            for (int q = 0; q < p; ++q)
                if (f.has_edge(order[p], order[q])) anchors[p].push_back(q);
    }

    bool consistent(int pos, int c, size_t from_anchor) const {
        for (size_t i = from_anchor; i < anchors[pos].size(); ++i) {
            int w = images[anchors[pos][i]];
            bool adj = (c == w) ? loops : g.adjacent(c, w);
            if (!adj) return false;
        }
        if (injective)
            for (int q = 0; q < pos; ++q)
                if (images[q] == c) return false;
        return true;
    }

    void place(int pos) {
        if (pos == j) {
            total += 1;
            return;
        }
        bool last = (pos == j - 1);
        long long leaf = 0;
        auto visit = [&](int c, size_t from_anchor) {
            if (!consistent(pos, c, from_anchor)) return;
            if (last) {
                ++leaf;
            } else {
                images[pos] = c;
                place(pos + 1);
                images[pos] = -1;
            }
        };
        if (anchors[pos].empty()) {
            for (int c = 0; c < g.order(); ++c) visit(c, 0);
        } else {
            int u = images[anchors[pos][0]];
            for (int c : g.neighbors(u)) visit(c, 1);
            if (loops) visit(u, 1);
        }
        if (last) total += static_cast<long>(leaf);
    }

    Int run() {
        if (j == 0) return 1;
        place(0);
        return total;
    }
};

Int hom_connected(const SmallGraph& f, const Graph& g, bool loops) {
    return HomSearch(f, g, loops, false).run();
}

}  // namespace

Int hom_count(const SmallGraph& f, const Graph& g, bool loops) {
    Int total = 1;
    for (const auto& fc : small_components(f)) total *= hom_connected(fc, g, loops);
    return total;
}

Int inj_count(const SmallGraph& f, const Graph& g) {
    return HomSearch(f, g, false, true).run();
}

Int aut_count(const SmallGraph& f) { return inj_count(f, f.to_graph()); }

Int sub_count(const SmallGraph& f, const Graph& g) {
    Int inj = inj_count(f, g);
    Int aut = aut_count(f);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), inj.get_mpz_t(), aut.get_mpz_t());
    if (r != 0) throw std::logic_error("inj count not divisible by |Aut|");
    return q;
}

Rat density_t(const SmallGraph& f, const Graph& g) {
    Rat r(hom_count(f, g, true));
    r /= Rat(int_pow(Int(g.order()), f.j));
    r.canonicalize();
    return r;
}

DensityGap density_gap(const SmallGraph& f, const Graph& hn, const Graph& g) {
    if (hn.order() != g.order())
        throw std::invalid_argument("density_gap: vertex count mismatch");
    DensityGap out{f, density_t(f, hn) - density_t(f, g)};
    out.value.canonicalize();
    return out;
}

DensityGap tau_gap(const SmallGraph& f, const Graph& hn, const Graph& g) {
    Graph lh = line_graph(hn), lg = line_graph(g);
    if (lh.order() != lg.order())
        throw std::invalid_argument("tau_gap: vertex count mismatch after line graph");
    return density_gap(f, lh, lg);
}

std::vector<std::pair<SmallGraph, Int>> contraction_decompose(const SmallGraph& f,
                                                              const Graph& g) {
    std::vector<std::pair<SmallGraph, Int>> out;
    std::vector<int> assign(f.j, 0);
    auto emit = [&](int parts) {
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : f.edges())
            if (assign[u] != assign[v]) es.emplace_back(assign[u], assign[v]);
        SmallGraph q = SmallGraph::from_edges(parts, es);
        out.emplace_back(q, inj_count(q, g));
    };
    // restricted growth strings enumerate unordered partitions of V(F)
    auto rec = [&](auto&& self, int i, int maxed) -> void {
        if (i == f.j) {
            emit(maxed + 1);
            return;
        }
        for (int b = 0; b <= maxed + 1; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(maxed, b));
        }
    };
    if (f.j == 0) return out;
    rec(rec, 1, 0);
    return out;
}

GraphHomContext::GraphHomContext(const Graph& g)
    : g_(g), n_(g.order()), classes_(component_classes(g)) {}

Int GraphHomContext::hom(const SmallGraph& f, bool loops) const {
    Int total = 0;
    for (size_t i = 0; i < classes_.shapes.size(); ++i) {
        auto key = std::make_tuple(static_cast<int>(i) * (kMaxSmallGraphOrder + 1) + f.j,
                                   f.edge_mask, loops);
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, hom_connected(f, classes_.shapes[i], loops)).first;
        total += it->second * classes_.multiplicity[i];
    }
    return total;
}

Rat GraphHomContext::density(const SmallGraph& f) const {
    Rat r(hom(f, true));
    r /= Rat(int_pow(Int(n_), f.j));
    r.canonicalize();
    return r;
}

}  // namespace polycert
