#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polycert/canonical.hpp"
#include "polycert/census.hpp"
#include "polycert/graph.hpp"
#include "polycert/graph6.hpp"
#include "polycert/grand.hpp"
#include "polycert/interval.hpp"
#include "polycert/profile.hpp"
#include "polycert/smallgraph.hpp"
#include "polycert/verify.hpp"

using json = nlohmann::json;
using namespace polycert;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw CLI::ValidationError("--lambda", "not a rational: " + s);
    if (q.get_den() <= 0) throw CLI::ValidationError("--lambda", "bad denominator: " + s);
    q.canonicalize();
    return q;
}

std::vector<std::pair<std::string, Graph>> read_corpus(const std::string& path, int max_n) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw InputError("cannot open " + path);
        in = &file;
    }
    std::vector<std::pair<std::string, Graph>> out;
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        out.emplace_back(line, parse_graph6(line, max_n));
    }
    return out;
}

std::string catalog_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("POLYCERT_CATALOG_DIR")) return env;
    return "";
}

json interval_json(const Interval& iv) {
    return json{{"lower", iv.lower_str()}, {"upper", iv.upper_str()}};
}

struct CommonOpts {
    std::string input;
    std::string graph_spec;
    std::string cache_dir;
    int prec = Interval::kDefaultPrecision;
    int j_max = 7;
    int max_n = kDefaultMaxGraph6Order;
};

// either parsed graph6 lines or a single constructed graph
std::vector<std::pair<std::string, Graph>> gather_graphs(const CommonOpts& opts) {
    if (!opts.graph_spec.empty()) {
        GraphSpec spec = GraphSpec::parse(opts.graph_spec);
        std::vector<std::pair<std::string, Graph>> out;
        out.emplace_back(spec.to_string(), construct(spec));
        return out;
    }
    return read_corpus(opts.input, opts.max_n);
}

int run_construct(const std::string& spec_str, const std::string& emit) {
    GraphSpec spec = GraphSpec::parse(spec_str);
    Graph g = construct(spec);
    if (emit == "graph6") {
        std::cout << encode_graph6(g) << "\n";
    } else {
        json out{{"spec", spec.to_string()},
                 {"n", g.order()},
                 {"edges", g.edge_count()}};
        auto d = regular_degree(g);
        out["degree"] = d ? json(*d) : json(nullptr);
        auto gg = girth(g);
        out["girth"] = gg ? json(*gg) : json(nullptr);
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_count(const CommonOpts& opts, const std::string& kind) {
    auto corpus = gather_graphs(opts);
    for (const auto& [label, g] : corpus) {
        CoefficientProfile p = kind == "match" ? matching_profile(g) : independence_profile(g);
        json coeffs = json::array();
        for (const Int& c : p.coeffs) coeffs.push_back(c.get_str());
        std::cout << json{{"graph6", label}, {"kind", kind}, {"coeffs", coeffs}}.dump()
                  << "\n";
    }
    return 0;
}

int run_census(const CommonOpts& opts) {
    auto corpus = gather_graphs(opts);
    SmallGraphCatalog catalog(opts.j_max, catalog_dir(opts.cache_dir));
    std::cout << "graph_id,F_id,hom,inj,sub,t_density_num,t_density_den\n";
    for (const auto& [label, g] : corpus) {
        for (int j = 1; j <= catalog.j_max(); ++j) {
            for (const IsoClass& cls : catalog.classes(j)) {
                std::ostringstream fid;
                fid << "j" << j << "m" << cls.rep.edge_mask;
                Rat t = density_t(cls.rep, g);
                std::cout << label << ',' << fid.str() << ','
                          << hom_count(cls.rep, g, false).get_str() << ','
                          << inj_count(cls.rep, g).get_str() << ','
                          << sub_count(cls.rep, g).get_str() << ','
                          << t.get_num().get_str() << ',' << t.get_den().get_str() << "\n";
            }
        }
    }
    return 0;
}

int run_expand(const CommonOpts& opts, long k, int t) {
    auto corpus = gather_graphs(opts);
    SmallGraphCatalog catalog(opts.j_max, catalog_dir(opts.cache_dir));
    for (const auto& [label, g] : corpus) {
        CanonicalExpansion exp(g, catalog, opts.prec);
        json weights = json::array();
        for (int j = 2; j <= catalog.j_max(); ++j)
            weights.push_back(rat_str(exp.polymer_weight(j)));
        json out{{"graph6", label},
                 {"n", exp.order()},
                 {"d", exp.degree()},
                 {"k", k},
                 {"weights", weights},
                 {"gamma", interval_json(exp.gamma(k))}};
        if (k <= catalog.j_max()) out["exact_xi"] = rat_str(exp.exact_xi(k));
        out["log_xi"] = interval_json(exp.truncated_log_xi(k, t));
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_certify(const CommonOpts& opts, const std::string& ref_spec, long k_min, long k_max,
                int t_flag) {
    GraphSpec spec = GraphSpec::parse(ref_spec);
    Graph ref = construct(spec);
    int t = t_flag;
    if (t <= 0) {
        auto g = girth(ref);
        t = g ? *g : 4;
    }
    auto corpus = gather_graphs(opts);
    SmallGraphCatalog catalog(opts.j_max, catalog_dir(opts.cache_dir));
    for (const auto& [label, g] : corpus) {
        for (long k = k_min; k <= k_max; ++k) {
            DominanceResult res = dominance_certificate(ref, g, k, t, catalog, opts.prec);
            json out{{"graph6", label},
                     {"reference", spec.to_string()},
                     {"k", k},
                     {"t", t},
                     {"verdict", to_string(res.verdict)},
                     {"lower_bound_log_ratio", res.lower_bound.lower_str()},
                     {"truncation_diff", rat_str(res.truncation_diff)},
                     {"gamma", interval_json(res.gamma)},
                     {"tail", res.tail.upper_str()}};
            std::cout << out.dump() << "\n";
        }
    }
    return 0;
}

int run_mdcert(const CommonOpts& opts, const std::string& lambda_str,
               const std::string& mode) {
    Rat lambda = parse_rat(lambda_str);
    auto corpus = gather_graphs(opts);
    for (const auto& [label, g] : corpus) {
        if (mode == "exact") {
            MDComparison cmp = exact_md_inequality(g, lambda);
            std::cout << json{{"graph6", label},
                              {"lambda", rat_str(lambda)},
                              {"holds", cmp.holds},
                              {"strict", cmp.strict}}
                             .dump()
                      << "\n";
        } else {
            CliqueMinResult res = clique_min_certificate(g, lambda, opts.prec);
            std::cout << json{{"graph6", label},
                              {"lambda", rat_str(lambda)},
                              {"verdict", to_string(res.verdict)},
                              {"sharp_lower", res.sharp_lower.lower_str()},
                              {"simple_lower", res.simple_lower.lower_str()},
                              {"triangle_density", rat_str(res.triangle_density)},
                              {"guaranteed_range", res.config.guaranteed_range}}
                             .dump()
                      << "\n";
        }
    }
    return 0;
}

int run_verify(const CommonOpts& opts, const std::string& ref_spec, const std::string& kind,
               const std::string& direction, int girth_min, long k_max) {
    GraphSpec spec = GraphSpec::parse(ref_spec);
    Graph ref = construct(spec);
    auto corpus = read_corpus(opts.input, opts.max_n);
    ProfileKind pk = kind == "match" ? ProfileKind::Matchings : ProfileKind::IndependentSets;
    Direction dir = direction == "min" ? Direction::Min : Direction::Max;
    std::optional<int> gmin;
    if (girth_min > 0) gmin = girth_min;
    DominanceReport rep = verify_dominance(corpus, ref, pk, dir, k_max, gmin);
    for (const GraphVerdict& gv : rep.graphs) {
        json out{{"index", gv.index}, {"graph6", gv.label}};
        if (gv.rejected) {
            out["rejected"] = gv.reject_reason;
        } else {
            out["matches_reference"] = gv.matches_reference;
            json cmps = json::array();
            json alarms = json::array();
            for (const KComparison& kc : gv.entries) {
                cmps.push_back(kc.cmp);
                if (kc.alarm) alarms.push_back(kc.k);
            }
            out["cmp"] = cmps;
            out["alarm_k"] = alarms;
        }
        std::cout << out.dump() << "\n";
    }
    json summary{{"n", rep.n},
                 {"d", rep.d},
                 {"reference", spec.to_string()},
                 {"graphs", rep.graphs.size()},
                 {"accepted", rep.accepted},
                 {"rejected", rep.rejected},
                 {"alarms", rep.alarms}};
    std::cerr << summary.dump() << "\n";
    return rep.alarms > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial profiles and certified cluster expansions for regular graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string spec_str, emit = "graph6", kind = "is", mode = "certify";
    std::string ref_spec, direction = "max", lambda_str = "1/2000";
    long k = 2, k_min = 2, k_max = -1;
    int t = 0, girth_min = 0, jobs = 1;

    auto add_common = [&](CLI::App* sub, bool with_graph = true) {
        sub->add_option("--input", opts.input, "graph6 input file (default: stdin)");
        if (with_graph)
            sub->add_option("--graph", opts.graph_spec,
                            "construct the input graph from a spec string instead of reading graph6");
        sub->add_option("--prec", opts.prec, "interval precision in bits")
            ->check(CLI::Range(16, 4096));
        sub->add_option("--j-max", opts.j_max, "largest polymer size in the catalog")
            ->check(CLI::Range(1, 8));
        sub->add_option("--catalog-dir", opts.cache_dir,
                        "catalog cache directory (default: POLYCERT_CATALOG_DIR)");
        sub->add_option("--max-n", opts.max_n, "largest accepted graph6 order");
    };

    CLI::App* c_construct = app.add_subcommand("construct", "build a named graph");
    c_construct->add_option("--spec", spec_str, "graph spec: kdd(d)|clique(m)|cycle(len)|heawood|petersen|copies(<spec>,c)")
        ->required();
    c_construct->add_option("--emit", emit, "output format")
        ->check(CLI::IsMember({"graph6", "json"}));

    CLI::App* c_count = app.add_subcommand("count", "exact coefficient profiles");
    add_common(c_count);
    c_count->add_option("--kind", kind, "is: independent sets, match: matchings")
        ->check(CLI::IsMember({"is", "match"}));

    CLI::App* c_census = app.add_subcommand("census", "homomorphism census as CSV");
    add_common(c_census);

    CLI::App* c_expand = app.add_subcommand("expand", "polymer weights and certified log Xi_k");
    add_common(c_expand);
    c_expand->add_option("--k", k, "independent set size")->required();
    c_expand->add_option("--t", t, "truncation excess (default 4)");

    CLI::App* c_certify = app.add_subcommand("certify", "coefficient dominance certificates");
    add_common(c_certify);
    c_certify->add_option("--ref", ref_spec, "reference graph spec")->required();
    c_certify->add_option("--k-min", k_min, "smallest k");
    c_certify->add_option("--k-max", k_max, "largest k")->required();
    c_certify->add_option("--t", t, "truncation excess (default: girth of reference)");

    CLI::App* c_mdcert = app.add_subcommand("mdcert", "matching partition function comparisons");
    add_common(c_mdcert);
    c_mdcert->add_option("--lambda", lambda_str, "fugacity as p/q");
    c_mdcert->add_option("--mode", mode, "certify: cluster expansion bound, exact: integer comparison")
        ->check(CLI::IsMember({"certify", "exact"}));

    CLI::App* c_verify = app.add_subcommand("verify", "batch exact dominance verification");
    add_common(c_verify, false);
    c_verify->add_option("--ref", ref_spec, "reference graph spec")->required();
    c_verify->add_option("--kind", kind, "is | match")->check(CLI::IsMember({"is", "match"}));
    c_verify->add_option("--direction", direction, "max | min")
        ->check(CLI::IsMember({"max", "min"}));
    c_verify->add_option("--girth-min", girth_min, "reject graphs of smaller girth");
    c_verify->add_option("--k-max", k_max, "largest compared k (default: all)");
    c_verify->add_option("--jobs", jobs, "worker count (output order is input order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (t == 0) t = 4;
    try {
        if (app.got_subcommand(c_construct)) return run_construct(spec_str, emit);
        if (app.got_subcommand(c_count)) return run_count(opts, kind);
        if (app.got_subcommand(c_census)) return run_census(opts);
        if (app.got_subcommand(c_expand)) return run_expand(opts, k, t);
        if (app.got_subcommand(c_certify))
            return run_certify(opts, ref_spec, k_min, k_max,
                               c_certify->count("--t") ? t : 0);
        if (app.got_subcommand(c_mdcert)) return run_mdcert(opts, lambda_str, mode);
        if (app.got_subcommand(c_verify))
            return run_verify(opts, ref_spec, kind, direction, girth_min, k_max);
    } catch (const Graph6Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const DivergentRegime& e) {
        std::cerr << "divergent regime: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
