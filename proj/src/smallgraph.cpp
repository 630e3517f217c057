#include "polycert/smallgraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace polycert {

int SmallGraph::pair_index(int j, int u, int v) {
    // (0,1),(0,2),...,(0,j-1),(1,2),...
    return u * (2 * j - u - 1) / 2 + (v - u - 1);
}

SmallGraph SmallGraph::from_edges(int j, const std::vector<std::pair<int, int>>& edges) {
    if (j < 1 || j > kMaxSmallGraphOrder) throw std::invalid_argument("SmallGraph order out of range");
    SmallGraph f{j, 0};
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= j || v >= j)
            throw std::invalid_argument("bad SmallGraph edge");
        if (u > v) std::swap(u, v);
        f.edge_mask |= 1u << pair_index(j, u, v);
    }
    return f;
}

SmallGraph SmallGraph::path(int j) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < j; ++i) es.emplace_back(i, i + 1);
    return from_edges(j, es);
}

SmallGraph SmallGraph::cycle(int j) {
    if (j < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < j; ++i) es.emplace_back(i, (i + 1) % j);
    return from_edges(j, es);
}

bool SmallGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return (edge_mask >> pair_index(j, u, v)) & 1;
}

int SmallGraph::edge_count() const { return std::popcount(edge_mask); }

bool SmallGraph::connected() const {
    if (j == 0) return false;
    int seen = 1, frontier = 1;
    while (frontier) {
        int next = 0;
        for (int v = 0; v < j; ++v) {
            if (!((frontier >> v) & 1)) continue;
            for (int u = 0; u < j; ++u)
                if (u != v && has_edge(u, v)) next |= 1 << u;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1 << j) - 1;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < j; ++u)
        for (int v = u + 1; v < j; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> SmallGraph::degrees() const {
    std::vector<int> deg(j, 0);
    for (auto [u, v] : edges()) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Graph SmallGraph::to_graph() const { return Graph::from_edges(j, edges()); }

SmallGraph SmallGraph::permuted(const std::vector<int>& perm) const {
    SmallGraph out{j, 0};
    for (auto [u, v] : edges()) {
        int a = perm[u], b = perm[v];
        if (a > b) std::swap(a, b);
        out.edge_mask |= 1u << pair_index(j, a, b);
    }
    return out;
}

namespace {

void canon_recurse(const SmallGraph& f, const std::vector<std::vector<int>>& groups,
                   std::vector<int>& perm, std::vector<char>& used, size_t gi, size_t pi,
                   int& next_pos, uint32_t& best) {
    if (gi == groups.size()) {
        best = std::min(best, f.permuted(perm).edge_mask);
        return;
    }
    const auto& grp = groups[gi];
    if (pi == grp.size()) {
        canon_recurse(f, groups, perm, used, gi + 1, 0, next_pos, best);
        return;
    }
    for (int v : grp) {
        if (used[v]) continue;
        used[v] = 1;
        perm[v] = next_pos++;
        canon_recurse(f, groups, perm, used, gi, pi + 1, next_pos, best);
        --next_pos;
        used[v] = 0;
    }
}

}  // namespace

uint32_t canonical_mask(const SmallGraph& f) {
    // invariant per vertex: (degree, sorted neighbor degrees, local triangles)
    auto deg = f.degrees();
    std::vector<std::vector<int>> key(f.j);
    for (int v = 0; v < f.j; ++v) {
        std::vector<int> nd;
        int tri = 0;
        for (int u = 0; u < f.j; ++u) {
            if (!f.has_edge(u, v)) continue;
            nd.push_back(deg[u]);
            for (int w = u + 1; w < f.j; ++w)
                if (f.has_edge(w, v) && f.has_edge(u, w)) ++tri;
        }
        std::sort(nd.begin(), nd.end());
        key[v] = {deg[v], tri};
        key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::map<std::vector<int>, std::vector<int>> grouped;
    for (int v = 0; v < f.j; ++v) grouped[key[v]].push_back(v);
    std::vector<std::vector<int>> groups;
    for (auto& [k, vs] : grouped) groups.push_back(vs);

    uint32_t best = ~0u;
    std::vector<int> perm(f.j);
    std::vector<char> used(f.j, 0);
    int next_pos = 0;
    canon_recurse(f, groups, perm, used, 0, 0, next_pos, best);
    return best;
}

Rat ursell(const SmallGraph& f) {
    int j = f.j;
    int full = (1 << j) - 1;
    // independent[S]: no edge of f inside S
    std::vector<char> independent(full + 1, 1);
    for (auto [u, v] : f.edges())
        for (int s = 0; s <= full; ++s)
            if (((s >> u) & 1) && ((s >> v) & 1)) independent[s] = 0;
    // c[S]: signed count of spanning connected edge subsets on S
    std::vector<long long> c(full + 1, 0);
    for (int s = 1; s <= full; ++s) {
        int v0 = s & -s;
        long long val = independent[s] ? 1 : 0;
        // subtract terms where the component of v0 is a proper subset
        int rest = s & ~v0;
        for (int t = rest; ; t = (t - 1) & rest) {
            int part = t | v0;
            if (part != s && independent[s & ~part]) val -= c[part];
            if (t == 0) break;
        }
        c[s] = val;
    }
    return Rat(Int(static_cast<long>(c[full]))) / Rat(factorial(j));
}

namespace {

std::string cache_file(const std::string& dir, int j) {
    return dir + "/catalog-j" + std::to_string(j) + ".txt";
}

bool load_cache(const std::string& path, int j, std::vector<CatalogRecord>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::string magic;
    int version, jj;
    long count;
    in >> magic >> version >> jj >> count;
    if (magic != "PCCAT" || version != 1 || jj != j) return false;
    out.clear();
    out.reserve(count);
    for (long i = 0; i < count; ++i) {
        unsigned long mask;
        std::string num, den;
        if (!(in >> mask >> num >> den)) return false;
        CatalogRecord rec;
        rec.edge_mask = static_cast<uint32_t>(mask);
        rec.edge_count = std::popcount(rec.edge_mask);
        rec.ursell = Rat(Int(num), Int(den));
        out.push_back(std::move(rec));
    }
    return true;
}

void store_cache(const std::string& path, int j, const std::vector<CatalogRecord>& recs) {
    std::ofstream out(path + ".tmp");
    if (!out) return;
    out << "PCCAT 1 " << j << ' ' << recs.size() << '\n';
    for (const auto& r : recs)
        out << r.edge_mask << ' ' << r.ursell.get_num().get_str() << ' '
            << r.ursell.get_den().get_str() << '\n';
    out.close();
    std::error_code ec;
    std::filesystem::rename(path + ".tmp", path, ec);
}

}  // namespace

SmallGraphCatalog::SmallGraphCatalog(int j_max, const std::string& cache_dir) : j_max_(j_max) {
    if (j_max < 1 || j_max > kMaxSmallGraphOrder)
        throw std::invalid_argument("catalog j_max out of range");
    records_.resize(j_max + 1);
    trees_.resize(j_max + 1);
    classes_.resize(j_max + 1);
    if (!cache_dir.empty()) std::filesystem::create_directories(cache_dir);
    for (int j = 1; j <= j_max; ++j) build_level(j, cache_dir);
}

void SmallGraphCatalog::build_level(int j, const std::string& cache_dir) {
    auto& recs = records_[j];
    bool cached = !cache_dir.empty() && load_cache(cache_file(cache_dir, j), j, recs);
    if (!cached) {
        recs.clear();
        uint32_t top = 1u << SmallGraph::pair_count(j);
        for (uint32_t mask = 0; mask < top; ++mask) {
            SmallGraph f{j, mask};
            if (!f.connected()) continue;
            recs.push_back({mask, f.edge_count(), ursell(f)});
        }
        if (!cache_dir.empty()) store_cache(cache_file(cache_dir, j), j, recs);
    }
    auto& trees = trees_[j];
    std::map<uint32_t, IsoClass> by_canon;
    for (const auto& r : recs) {
        if (r.edge_count == j - 1) trees.push_back(r.edge_mask);
        SmallGraph f{j, r.edge_mask};
        uint32_t canon = canonical_mask(f);
        auto it = by_canon.find(canon);
        if (it == by_canon.end())
            by_canon.emplace(canon, IsoClass{SmallGraph{j, canon}, r.edge_count, 1});
        else
            ++it->second.labeled_count;
    }
    for (auto& [canon, cls] : by_canon) classes_[j].push_back(cls);
}

}  // namespace polycert
