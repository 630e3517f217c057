#include "polycert/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace polycert {

Int ClusterType::embedding_count(long k) const {
    Int f = falling_factorial(Int(k), support);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t(), Int(aut_ordered).get_mpz_t());
    if (r != 0) throw std::logic_error("ordered stabilizer does not divide falling factorial");
    return q;
}

SmallGraph ClusterType::incompatibility_graph() const {
    int m = static_cast<int>(pattern.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (pattern[i] & pattern[j]) edges.push_back({i, j});
    return SmallGraph::from_edges(m, edges);
}

namespace {

bool tuple_connected(const std::vector<uint32_t>& masks) {
    int m = static_cast<int>(masks.size());
    if (m == 0) return false;
    std::vector<char> seen(m, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < m; ++u)
            if (!seen[u] && (masks[v] & masks[u])) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == m;
}

uint32_t map_mask(uint32_t mask, const std::vector<int>& perm) {
    uint32_t out = 0;
    while (mask) {
        int b = __builtin_ctz(mask);
        mask &= mask - 1;
        out |= 1u << perm[b];
    }
    return out;
}

// lexicographically minimal relabeling of the tuple over Sym(support), and the
// number of relabelings fixing every polymer
struct CanonResult {
    std::vector<uint32_t> key;
    long aut_ordered;
};

CanonResult canonical_tuple(const std::vector<uint32_t>& masks, int support) {
    std::vector<int> perm(support);
    std::iota(perm.begin(), perm.end(), 0);
    CanonResult res{masks, 0};
    std::vector<uint32_t> mapped(masks.size());
    do {
        bool fixes_all = true;
        bool smaller = false, larger = false;
        for (size_t i = 0; i < masks.size(); ++i) {
            mapped[i] = map_mask(masks[i], perm);
            if (mapped[i] != masks[i]) fixes_all = false;
            if (!smaller && !larger) {
                if (mapped[i] < res.key[i]) smaller = true;
                else if (mapped[i] > res.key[i]) larger = true;
            }
            if (larger && !fixes_all) break;
        }
        if (fixes_all) ++res.aut_ordered;
        if (smaller) res.key = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

struct TypeEnumerator {
    int max_excess;
    std::map<std::vector<uint32_t>, ClusterType> found;
    std::vector<uint32_t> tuple;

    void consider(int support) {
        if (tuple.empty() || !tuple_connected(tuple)) return;
        CanonResult canon = canonical_tuple(tuple, support);
        if (found.count(canon.key)) return;
        ClusterType ct;
        ct.pattern = canon.key;
        ct.support = support;
        ct.aut_ordered = canon.aut_ordered;
        long excess = 0;
        for (uint32_t m : canon.key) {
            int sz = __builtin_popcount(m);
            ct.sizes.push_back(sz);
            excess += sz - 1;
        }
        ct.excess = excess;
        ct.ursell_value = ursell(ct.incompatibility_graph());
        found.emplace(std::move(canon.key), std::move(ct));
    }

    // extend the tuple with one polymer: any subset of the used labels plus a
    // run of fresh ones (first-appearance normalization keeps labels contiguous)
    void extend(int used, int budget) {
        consider(used);
        if (budget < 1) return;
        int max_size = budget + 1;
        uint32_t used_mask = (used >= 32) ? ~0u : ((1u << used) - 1);
        for (uint32_t old_part = 0;; old_part = (old_part - used_mask) & used_mask) {
            int o = __builtin_popcount(old_part);
            if (o <= max_size) {
                for (int c = std::max(0, 2 - o); o + c <= max_size; ++c) {
                    uint32_t fresh = ((1u << c) - 1) << used;
                    tuple.push_back(old_part | fresh);
                    extend(used + c, budget - (o + c - 1));
                    tuple.pop_back();
                }
            }
            if (old_part == used_mask) break;
        }
    }
};

}  // namespace

const std::vector<ClusterType>& enumerate_cluster_types(int max_excess) {
    if (max_excess < 0 || max_excess > 6)
        throw std::invalid_argument("cluster excess bound out of range");
    static std::mutex mu;
    static std::map<int, std::vector<ClusterType>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_excess);
    if (it != cache.end()) return it->second;

    TypeEnumerator en{max_excess, {}, {}};
    en.extend(0, max_excess);
    std::vector<ClusterType> out;
    out.reserve(en.found.size());
    for (auto& [key, ct] : en.found) out.push_back(std::move(ct));
    std::sort(out.begin(), out.end(), [](const ClusterType& a, const ClusterType& b) {
        if (a.excess != b.excess) return a.excess < b.excess;
        if (a.pattern.size() != b.pattern.size()) return a.pattern.size() < b.pattern.size();
        return a.pattern < b.pattern;
    });
    return cache.emplace(max_excess, std::move(out)).first->second;
}

KPReport kp_check(long k, long n, int d, int prec) {
    if (n <= 0) throw std::invalid_argument("empty graph");
    KPReport rep;
    rep.k = k;
    rep.n = n;
    rep.d = d;
    Interval gamma = Interval::exact(d + 1, prec) * Interval::exp_of_long(5, prec) *
                     Interval::enclose(Rat(k) / n, prec);
    rep.gamma_upper = gamma.upper_rat();
    rep.satisfied = rep.gamma_upper <= 1;
    rep.margin = 1 - rep.gamma_upper;
    return rep;
}

CanonicalExpansion::CanonicalExpansion(const Graph& g, const SmallGraphCatalog& catalog,
                                       int prec)
    : g_(g), cat_(catalog), ctx_(g), n_(g.order()), prec_(prec) {
    auto d = regular_degree(g);
    if (!d) throw std::invalid_argument("graph is not regular");
    d_ = *d;
}

Rat CanonicalExpansion::polymer_weight(int j) const {
    if (j < 2 || j > cat_.j_max())
        throw std::out_of_range("polymer size outside catalog range");
    auto it = weights_.find(j);
    if (it != weights_.end()) return it->second;
    Rat w = 0;
    for (const IsoClass& cls : cat_.classes(j)) {
        Rat term = Rat(cls.labeled_count) * ctx_.density(cls.rep);
        if (cls.edge_count % 2) w -= term;
        else w += term;
    }
    weights_.emplace(j, w);
    return w;
}

Rat CanonicalExpansion::exact_xi(long k) const {
    if (k < 0) throw std::invalid_argument("negative k");
    if (k > cat_.j_max())
        throw std::out_of_range("partition sum needs polymer weights beyond the catalog");
    // sum over integer partitions of k; a partition with m_s parts of size s
    // labels k! / (prod s!^{m_s} m_s!) set partitions, each with weight
    // prod w(s)^{m_s}
    Rat total = 0;
    std::vector<int> parts;
    auto rec = [&](auto&& self, long remaining, int max_part) -> void {
        if (remaining == 0) {
            Rat coeff = Rat(factorial(k));
            Rat wprod = 1;
            int i = 0;
            while (i < static_cast<int>(parts.size())) {
                int s = parts[i];
                int mult = 0;
                while (i < static_cast<int>(parts.size()) && parts[i] == s) {
                    ++mult;
                    ++i;
                }
                coeff /= rat_pow(Rat(factorial(s)), mult) * Rat(factorial(mult));
                if (s >= 2) wprod *= rat_pow(polymer_weight(s), mult);
            }
            total += coeff * wprod;
            return;
        }
        for (int s = std::min<long>(remaining, max_part); s >= 1; --s) {
            parts.push_back(s);
            self(self, remaining - s, s);
            parts.pop_back();
        }
    };
    rec(rec, k, static_cast<int>(k));
    return total;
}

Interval CanonicalExpansion::gamma(long k) const {
    return Interval::exact(d_ + 1, prec_) * Interval::exp_of_long(5, prec_) *
           Interval::enclose(Rat(k) / n_, prec_);
}

Interval CanonicalExpansion::truncated_log_xi(long k, int t) const {
    if (k <= 1) return Interval::exact(0, prec_);
    if (t < 1) throw std::invalid_argument("truncation excess must be positive");
    KPReport kp = kp_check(k, n_, d_, prec_);
    if (!kp.satisfied) {
        std::ostringstream os;
        os << "convergence condition fails: k=" << k << " n=" << n_ << " d=" << d_;
        throw DivergentRegime(os.str());
    }
    Rat truncated = 0;
    for (const ClusterType& ct : enumerate_cluster_types(t - 1)) {
        Rat wprod = 1;
        for (int s : ct.sizes) wprod *= polymer_weight(s);
        truncated += Rat(ct.embedding_count(k)) * ct.ursell_value * wprod;
    }
    Interval tail = Interval::exact(k, prec_) * gamma(k).pow(static_cast<unsigned long>(t));
    return Interval::enclose(truncated, prec_) + Interval::symmetric(tail);
}

namespace {

// isomorphism test for graphs given as unions of small components
bool union_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    ComponentClasses ca = component_classes(a);
    ComponentClasses cb = component_classes(b);
    if (ca.shapes.size() != cb.shapes.size()) return false;
    std::vector<char> used(cb.shapes.size(), 0);
    for (size_t i = 0; i < ca.shapes.size(); ++i) {
        bool matched = false;
        for (size_t j = 0; j < cb.shapes.size(); ++j) {
            if (used[j] || ca.multiplicity[i] != cb.multiplicity[j]) continue;
            if (isomorphic(ca.shapes[i], cb.shapes[j])) {
                used[j] = 1;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace

DominanceResult dominance_certificate(const Graph& hn, const Graph& g, long k, int t,
                                      const SmallGraphCatalog& cat, int prec) {
    if (hn.order() != g.order())
        throw std::invalid_argument("graphs have different orders");
    CanonicalExpansion eh(hn, cat, prec);
    CanonicalExpansion eg(g, cat, prec);
    if (eh.degree() != eg.degree())
        throw std::invalid_argument("graphs have different degrees");

    DominanceResult res;
    res.gamma = eh.gamma(k);
    if (k <= 1) {
        // i_0 and i_1 agree for any two graphs of the same order
        res.truncation_diff = 0;
        res.lower_bound = Interval::exact(0, prec);
        res.tail = Interval::exact(0, prec);
        res.verdict = Verdict::CertifiedNonstrict;
        return res;
    }
    KPReport kp = kp_check(k, hn.order(), eh.degree(), prec);
    if (!kp.satisfied) {
        std::ostringstream os;
        os << "convergence condition fails: k=" << k << " n=" << hn.order()
           << " d=" << eh.degree();
        throw DivergentRegime(os.str());
    }
    if (t < 1) throw std::invalid_argument("truncation excess must be positive");

    Rat diff = 0;
    for (const ClusterType& ct : enumerate_cluster_types(t - 1)) {
        Rat ph = 1, pg = 1;
        for (int s : ct.sizes) {
            ph *= eh.polymer_weight(s);
            pg *= eg.polymer_weight(s);
        }
        if (ph == pg) continue;
        diff += Rat(ct.embedding_count(k)) * ct.ursell_value * (ph - pg);
    }
    res.truncation_diff = diff;
    res.tail = Interval::exact(2 * k, prec) * res.gamma.pow(static_cast<unsigned long>(t));
    res.lower_bound = Interval::enclose(diff, prec) + Interval::symmetric(res.tail);
    if (res.lower_bound.definitely_positive())
        res.verdict = Verdict::CertifiedStrict;
    else if (union_isomorphic(hn, g))
        res.verdict = Verdict::CertifiedNonstrict;
    else
        res.verdict = Verdict::Inconclusive;
    return res;
}

}  // namespace polycert
