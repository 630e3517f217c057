#include "polycert/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace polycert {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

long Graph::edge_count() const {
    long deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += static_cast<long>(nb.size());
    return deg_sum / 2;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::out_of_range("vertex out of range");
    if (adjacent(u, v)) return;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void Graph::remove_edge(int u, int v) {
    auto drop = [&](int a, int b) {
        auto& nb = adj_[a];
        auto it = std::lower_bound(nb.begin(), nb.end(), b);
        if (it != nb.end() && *it == b) nb.erase(it);
    };
    drop(u, v);
    drop(v, u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int GraphSpec::vertex_count() const {
    switch (kind) {
        case Kind::CompleteBipartite: return 2 * param;
        case Kind::Clique: return param;
        case Kind::Cycle: return param;
        case Kind::Heawood: return 14;
        case Kind::Petersen: return 10;
        case Kind::DisjointCopies: return count * inner->vertex_count();
    }
    throw std::logic_error("bad GraphSpec kind");
}

std::string GraphSpec::to_string() const {
    switch (kind) {
        case Kind::CompleteBipartite: return "kdd(" + std::to_string(param) + ")";
        case Kind::Clique: return "clique(" + std::to_string(param) + ")";
        case Kind::Cycle: return "cycle(" + std::to_string(param) + ")";
        case Kind::Heawood: return "heawood";
        case Kind::Petersen: return "petersen";
        case Kind::DisjointCopies:
            return "copies(" + inner->to_string() + "," + std::to_string(count) + ")";
    }
    throw std::logic_error("bad GraphSpec kind");
}

namespace {

GraphSpec parse_spec(const std::string& s, size_t& pos);

int parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in spec at " + std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
}

void expect(const std::string& s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' in spec at " + std::to_string(pos));
    ++pos;
}

GraphSpec parse_spec(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string word = s.substr(start, pos - start);
    GraphSpec spec;
    if (word == "heawood") {
        spec.kind = GraphSpec::Kind::Heawood;
        return spec;
    }
    if (word == "petersen") {
        spec.kind = GraphSpec::Kind::Petersen;
        return spec;
    }
    if (word == "kdd" || word == "clique" || word == "cycle") {
        expect(s, pos, '(');
        int p = parse_int(s, pos);
        expect(s, pos, ')');
        if (p <= 0) throw std::invalid_argument("spec parameter must be positive");
        if (word == "kdd") spec.kind = GraphSpec::Kind::CompleteBipartite;
        if (word == "clique") spec.kind = GraphSpec::Kind::Clique;
        if (word == "cycle") {
            spec.kind = GraphSpec::Kind::Cycle;
            if (p < 3) throw std::invalid_argument("cycle length must be >= 3");
        }
        spec.param = p;
        return spec;
    }
    if (word == "copies") {
        expect(s, pos, '(');
        auto inner = parse_spec(s, pos);
        expect(s, pos, ',');
        int c = parse_int(s, pos);
        expect(s, pos, ')');
        if (c < 1) throw std::invalid_argument("copy count must be >= 1");
        spec.kind = GraphSpec::Kind::DisjointCopies;
        spec.count = c;
        spec.inner = std::make_shared<GraphSpec>(std::move(inner));
        return spec;
    }
    throw std::invalid_argument("unknown spec keyword '" + word + "'");
}

}  // namespace

GraphSpec GraphSpec::parse(const std::string& s) {
    size_t pos = 0;
    GraphSpec spec = parse_spec(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in spec");
    return spec;
}

Graph construct(const GraphSpec& spec) {
    using Kind = GraphSpec::Kind;
    switch (spec.kind) {
        case Kind::CompleteBipartite: {
            int d = spec.param;
            Graph g(2 * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) g.add_edge(i, d + j);
            return g;
        }
        case Kind::Clique: {
            int m = spec.param;
            Graph g(m);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
            return g;
        }
        case Kind::Cycle: {
            int len = spec.param;
            Graph g(len);
            for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
            return g;
        }
        case Kind::Heawood: {
            // point-line incidence graph of the Fano plane: points 0..6, lines 7..13
            static const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                            {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
            Graph g(14);
            for (int l = 0; l < 7; ++l)
                for (int p : lines[l]) g.add_edge(p, 7 + l);
            return g;
        }
        case Kind::Petersen: {
            Graph g(10);
            for (int i = 0; i < 5; ++i) {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
                g.add_edge(i, 5 + i);
            }
            return g;
        }
        case Kind::DisjointCopies: {
            Graph inner = construct(*spec.inner);
            int h = inner.order();
            auto es = inner.edges();
            Graph g(h * spec.count);
            for (int c = 0; c < spec.count; ++c)
                for (auto [u, v] : es) g.add_edge(c * h + u, c * h + v);
            return g;
        }
    }
    throw std::logic_error("bad GraphSpec kind");
}

bool check_regular(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    int d = g.degree(0);
    return check_regular(g, d) ? std::optional<int>(d) : std::nullopt;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            out[id].push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = id;
                    queue.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    Graph out(static_cast<int>(verts.size()));
    for (int v : verts)
        for (int u : g.neighbors(v))
            if (index[u] >= 0 && index[v] < index[u]) out.add_edge(index[v], index[u]);
    return out;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge closing at depth levels l(u), l(v)
    // gives a cycle of length l(u)+l(v)+1 through the root.
    int n = g.order();
    int best = -1;
    std::vector<int> dist(n, -1), parent(n, -1), touched;
    for (int root = 0; root < n; ++root) {
        for (int v : touched) {
            dist[v] = -1;
            parent[v] = -1;
        }
        touched.clear();
        std::deque<int> queue{root};
        dist[root] = 0;
        touched.push_back(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (u == parent[v]) continue;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    touched.push_back(u);
                    queue.push_back(u);
                } else if (dist[u] >= dist[v]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    Graph out(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) out.add_edge(a, b);
        }
    return out;
}

namespace {

// per-vertex invariant used to prune the isomorphism search
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        int tri = 0;
        for (int u : g.neighbors(v))
            for (int w : g.neighbors(v))
                if (u < w && g.adjacent(u, w)) ++tri;
        inv[v] = {g.degree(v), tri};
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    return inv;
}

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<int>& order,
                   const std::vector<std::vector<int>>& inv_a,
                   const std::vector<std::vector<int>>& inv_b, std::vector<int>& map_ab,
                   std::vector<char>& used, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.order(); ++w) {
        if (used[w] || inv_a[v] != inv_b[w]) continue;
        bool ok = true;
        for (int u : a.neighbors(v)) {
            if (map_ab[u] >= 0 && !b.adjacent(map_ab[u], w)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // also require non-adjacent mapped pairs to stay non-adjacent
            for (size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                if (!a.adjacent(u, v) && b.adjacent(map_ab[u], w)) ok = false;
            }
        }
        if (!ok) continue;
        map_ab[v] = w;
        used[w] = 1;
        if (iso_backtrack(a, b, order, inv_a, inv_b, map_ab, used, pos + 1)) return true;
        map_ab[v] = -1;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    auto inv_a = vertex_invariants(a);
    auto inv_b = vertex_invariants(b);
    {
        auto sa = inv_a;
        auto sb = inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // visit a's vertices so each one touches an earlier one where possible
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int u : a.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
    }
    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);
    return iso_backtrack(a, b, order, inv_a, inv_b, map_ab, used, 0);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

namespace {

// induced_subgraph with a caller-owned scratch index, so extracting every
// component of a huge union stays linear overall
Graph extract_component(const Graph& g, const std::vector<int>& verts,
                        std::vector<int>& index) {
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    Graph out(static_cast<int>(verts.size()));
    for (int v : verts)
        for (int u : g.neighbors(v))
            if (index[v] < index[u]) out.add_edge(index[v], index[u]);
    for (int v : verts) index[v] = -1;
    return out;
}

}  // namespace

ComponentSplit split_by_reference(const Graph& g, const Graph& h) {
    ComponentSplit out;
    std::vector<std::pair<int, int>> e0, eh;
    long n0 = 0, nh = 0;
    std::vector<int> index(g.order(), -1);
    for (const auto& comp : components(g)) {
        Graph c = extract_component(g, comp, index);
        bool matches = isomorphic(c, h);
        auto& edges = matches ? eh : e0;
        long& base = matches ? nh : n0;
        for (auto [u, v] : c.edges())
            edges.emplace_back(base + u, base + v);
        base += c.order();
    }
    out.g0 = Graph::from_edges(static_cast<int>(n0), e0);
    out.gh = Graph::from_edges(static_cast<int>(nh), eh);
    out.alpha = g.order() == 0 ? Rat(0) : Rat(n0, g.order());
    out.alpha.canonicalize();
    return out;
}

ComponentClasses component_classes(const Graph& g) {
    ComponentClasses out;
    std::vector<int> index(g.order(), -1);
    for (const auto& comp : components(g)) {
        Graph c = extract_component(g, comp, index);
        bool found = false;
        for (size_t i = 0; i < out.shapes.size(); ++i) {
            if (isomorphic(out.shapes[i], c)) {
                ++out.multiplicity[i];
                found = true;
                break;
            }
        }
        if (!found) {
            out.shapes.push_back(std::move(c));
            out.multiplicity.push_back(1);
        }
    }
    return out;
}

}  // namespace polycert
