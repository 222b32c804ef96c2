// girthkit command-line front end.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "girthkit/generate.hpp"
#include "girthkit/girth_unweighted.hpp"
#include "girthkit/girth_weighted.hpp"
#include "girthkit/hardness.hpp"
#include "girthkit/io.hpp"
#include "girthkit/multilevel.hpp"
#include "girthkit/oracle.hpp"
#include "girthkit/transform.hpp"

using namespace girthkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitContract = 4;

struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    bool json_out = false;
    bool no_timing = false;
    unsigned threads = 0;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json weight_json(Weight w) { return is_finite(w) ? json(w) : json(nullptr); }

std::string weight_text(Weight w) { return is_finite(w) ? std::to_string(w) : "inf"; }

std::string join(const std::vector<Vertex>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    return os.str();
}

// Every reported estimate must be the weight of its witness.
void self_check(const DirectedGraph& g, const GirthResult& r) {
    if (!r.finite()) return;
    if (walk_weight(g, r.witness) != r.estimate)
        throw ContractViolation("witness weight differs from the reported estimate");
}

void emit_result(const Common& c, const GirthResult& r, double elapsed, json extra = json::object()) {
    if (c.json_out) {
        json j;
        j["schema"] = 1;
        j["algorithm"] = r.algorithm;
        j["estimate"] = weight_json(r.estimate);
        j["guarantee"] = r.guarantee == Guarantee::Exact ? "exact" : "factor";
        j["factor"] = r.factor;
        j["witness"] = r.witness;
        j["seed"] = r.seed;
        for (auto& [k, v] : extra.items()) j[k] = v;
        if (!c.no_timing) j["elapsed_ms"] = elapsed;
        std::cout << j.dump() << '\n';
        return;
    }
    std::cout << "algorithm " << r.algorithm << '\n'
              << "estimate " << weight_text(r.estimate) << '\n'
              << "guarantee " << (r.guarantee == Guarantee::Exact ? "exact" : "factor " + std::to_string(r.factor))
              << '\n'
              << "witness " << join(r.witness) << '\n'
              << "seed " << r.seed << '\n';
    for (auto& [k, v] : extra.items()) std::cout << k << ' ' << v.dump() << '\n';
    if (!c.no_timing) std::cout << "elapsed_ms " << std::fixed << std::setprecision(3) << elapsed << '\n';
}

SamplingConstants constants_for(double scale) {
    return scale == 1.0 ? SamplingConstants::defaults() : SamplingConstants::scaled(scale);
}

// ---- bench -------------------------------------------------------------

struct BenchSpec {
    std::string family = "gnm";
    std::vector<std::size_t> sizes{100, 200, 400};
    std::string algo = "approx2eps";
    double eps = 0.25;
    int k = 2;
    int trials = 3;
    std::uint64_t seed = 1;
    double degree = 4.0;
    Weight max_weight = 50;
    bool no_oracle = false;
};

DirectedGraph bench_instance(const BenchSpec& b, std::size_t n, WeightModel w, std::uint64_t seed) {
    if (b.family == "gnm") return directed_gnm(n, static_cast<std::size_t>(b.degree * double(n)), w, seed);
    if (b.family == "cycle") return directed_cycle(n, w, seed);
    if (b.family == "layered") return layered_cycle(n, std::max<std::size_t>(3, n / 10), w, seed);
    if (b.family == "grid") {
        auto side = static_cast<std::size_t>(std::max(2.0, std::round(std::sqrt(double(n)))));
        return bidirected_grid(side, side, w, seed);
    }
    throw Error(Errc::InvalidParameters, "unknown family " + b.family);
}

GirthResult bench_run(const BenchSpec& b, const DirectedGraph& g, std::uint64_t seed, unsigned threads) {
    if (b.algo == "exact") return oracle::exact_girth(g);
    if (b.algo == "approx2") {
        UnweightedOptions o;
        o.threads = threads;
        return girth_approx_unweighted(g, seed, o);
    }
    if (b.algo == "approx2eps") {
        WeightedOptions o;
        o.threads = threads;
        return girth_approx_weighted(g, b.eps, seed, o);
    }
    if (b.algo == "approx2k") {
        MultilevelOptions o;
        o.threads = threads;
        return girth_approx_2k(g, b.k, b.eps, seed, o);
    }
    throw Error(Errc::InvalidParameters, "unknown algorithm " + b.algo);
}

double stated_factor(const BenchSpec& b) {
    if (b.algo == "exact") return 1.0;
    if (b.algo == "approx2") return 2.0;
    if (b.algo == "approx2eps") return 2.0 + b.eps;
    const double beta = multilevel_beta(b.k, b.eps);
    return b.k == 1 ? 2.0 + b.eps : 2.0 * beta * (1.0 + b.eps) * (1.0 + b.eps);
}

int bench(const BenchSpec& b, const Common& c) {
    WeightModel w = b.algo == "approx2" ? WeightModel::unit() : WeightModel::uniform(b.max_weight);
    struct Row {
        std::size_t n, m;
        double median_ms;
        Weight estimate, oracle;
        double ratio;
    };
    std::vector<Row> rows;
    for (std::size_t n : b.sizes) {
        DirectedGraph g = bench_instance(b, n, w, derive_seed(b.seed, Stream::Bench, {n}));
        Weight oracle_w = kInfinity;
        if (!b.no_oracle) {
            if (n > oracle::kDefaultRoundtripCap)
                throw Error(Errc::CapExceeded, "oracle infeasible at n=" + std::to_string(n) + "; pass --no-oracle");
            oracle_w = oracle::exact_girth(g).estimate;
        }
        std::vector<double> times;
        Weight worst = 0;
        for (int t = 0; t < b.trials; ++t) {
            auto t0 = Clock::now();
            GirthResult r = bench_run(b, g, derive_seed(b.seed, Stream::Bench, {n, std::uint64_t(t) + 1}), c.threads);
            times.push_back(ms_since(t0));
            self_check(g, r);
            worst = std::max(worst, r.estimate);
        }
        std::sort(times.begin(), times.end());
        double med = c.no_timing ? 0.0 : times[times.size() / 2];
        double ratio = (!b.no_oracle && is_finite(oracle_w) && is_finite(worst))
                           ? static_cast<double>(worst) / static_cast<double>(oracle_w)
                           : std::nan("");
        rows.push_back({n, g.m(), med, worst, oracle_w, ratio});
    }

    // least-squares slope of log(time) against log(n)
    double slope = std::nan("");
    if (rows.size() >= 2 && !c.no_timing) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto& r : rows) {
            double x = std::log(double(r.n)), y = std::log(std::max(r.median_ms, 1e-6));
            sx += x, sy += y, sxx += x * x, sxy += x * y;
        }
        double k = double(rows.size());
        slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }

    const double factor = stated_factor(b);
    bool within = true;
    for (auto& r : rows)
        if (!std::isnan(r.ratio) && r.ratio > factor + 1e-9) within = false;

    if (c.json_out) {
        json j;
        j["schema"] = 1;
        j["family"] = b.family;
        j["algo"] = b.algo;
        j["seed"] = b.seed;
        j["factor"] = factor;
        j["rows"] = json::array();
        for (auto& r : rows)
            j["rows"].push_back({{"n", r.n}, {"m", r.m}, {"median_ms", r.median_ms}, {"estimate", weight_json(r.estimate)},
                                 {"oracle", weight_json(r.oracle)}, {"ratio", std::isnan(r.ratio) ? json(nullptr) : json(r.ratio)}});
        j["slope"] = std::isnan(slope) ? json(nullptr) : json(slope);
        j["within_factor"] = within;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "n,m,median_ms,estimate,oracle,ratio\n";
        for (auto& r : rows) {
            std::cout << r.n << ',' << r.m << ',' << std::fixed << std::setprecision(3) << r.median_ms << ','
                      << weight_text(r.estimate) << ',' << (b.no_oracle ? "" : weight_text(r.oracle)) << ',';
            if (!std::isnan(r.ratio)) std::cout << std::setprecision(6) << r.ratio;
            std::cout << '\n';
        }
        std::cout << "# seed " << b.seed << '\n';
        if (!std::isnan(slope))
            std::cout << "# loglog_slope " << std::setprecision(4) << slope << " over " << rows.size()
                      << " sizes (desk-scale fit, indicative only)\n";
        std::cout << "# factor " << std::setprecision(6) << factor << (within ? " held" : " VIOLATED") << '\n';
    }
    if (!within) throw ContractViolation("ratio exceeded the stated factor");
    return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::InvalidParameters, "bad size '" + tok + "'");
        out.push_back(std::stoul(tok));
    }
    if (out.empty()) throw Error(Errc::InvalidParameters, "empty --sizes");
    return out;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"girthkit: directed girth approximation and roundtrip spanners"};
    app.require_subcommand(1);
    Common c;
    if (const char* env = std::getenv("GIRTHKIT_THREADS")) c.threads = static_cast<unsigned>(std::atoi(env));
    app.add_flag("--json", c.json_out, "JSON output");
    app.add_flag("--no-timing", c.no_timing, "omit wall-clock fields (byte-identical reruns)");
    app.add_option("--threads", c.threads, "worker threads (default GIRTHKIT_THREADS, else 1)");

    std::string input, out_path, map_path, spanner_path;
    std::uint64_t seed = 1;
    double eps = 0.25, delta = 0.25, stretch = 0, sample_scale = 1.0;
    int k = 2;
    bool strong = false, trace = false, in_degree = false, force_weighted = false, no_reduce = false;

    auto common_opts = [&](CLI::App* s) {
        s->add_flag("--json", c.json_out, "JSON output");
        s->add_flag("--no-timing", c.no_timing, "omit wall-clock fields");
        s->add_option("--threads", c.threads, "worker threads");
    };
    auto seeded = [&](CLI::App* s) {
        s->add_option("--seed", seed, "master seed")->capture_default_str();
        s->add_option("--sample-scale", sample_scale, "multiply the sampling constants")->capture_default_str();
    };

    auto* exact = app.add_subcommand("exact", "exact girth with witness");
    exact->add_option("--input", input, "graph file")->required();
    common_opts(exact);

    auto* a2 = app.add_subcommand("approx2", "2-approximate girth (unit weights)");
    a2->add_option("--input", input, "graph file")->required();
    a2->add_option("--delta", delta, "high-girth exponent")->capture_default_str();
    a2->add_flag("--no-reduce", no_reduce, "skip degree reduction");
    seeded(a2);
    common_opts(a2);

    auto* a2e = app.add_subcommand("approx2eps", "(2+eps)-approximate girth (weighted)");
    a2e->add_option("--input", input, "graph file")->required();
    a2e->add_option("--eps", eps, "epsilon")->capture_default_str();
    a2e->add_flag("--strong-poly", strong, "run on the rescaled instance");
    a2e->add_option("--k", k, "family parameter for --strong-poly")->capture_default_str();
    a2e->add_flag("--no-reduce", no_reduce, "skip degree reduction");
    seeded(a2e);
    common_opts(a2e);

    auto* a2k = app.add_subcommand("approx2k", "(2k+eps)-approximate girth");
    a2k->add_option("--input", input, "graph file")->required();
    a2k->add_option("--k", k, "k >= 1")->capture_default_str();
    a2k->add_option("--eps", eps, "epsilon")->capture_default_str();
    a2k->add_flag("--trace", trace, "per-level set sizes");
    a2k->add_flag("--strong-poly", strong, "run on the rescaled instance");
    seeded(a2k);
    common_opts(a2k);

    auto* sp = app.add_subcommand("spanner", "roundtrip spanner with stretch 5+12eps");
    sp->add_option("--input", input, "graph file")->required();
    sp->add_option("--eps", eps, "epsilon in (0,1]")->capture_default_str();
    sp->add_option("--out", out_path, "spanner graph file");
    seeded(sp);
    common_opts(sp);

    auto* vs = app.add_subcommand("verify-spanner", "check stretch of a spanner file against its host");
    vs->add_option("--input", input, "host graph file")->required();
    vs->add_option("--spanner", spanner_path, "spanner graph file")->required();
    vs->add_option("--stretch", stretch, "stretch bound (default 5+12eps)");
    vs->add_option("--eps", eps, "epsilon for the default stretch")->capture_default_str();
    common_opts(vs);

    auto* rd = app.add_subcommand("reduce", "degree reduction");
    rd->add_option("--input", input, "graph file")->required();
    rd->add_option("--out", out_path, "reduced graph file")->required();
    rd->add_option("--map", map_path, "auxiliary-vertex sidecar")->required();
    rd->add_flag("--in-degree", in_degree, "also bound in-degrees (unit weights)");
    rd->add_flag("--weighted", force_weighted, "zero-weight fan reduction even for unit weights");
    common_opts(rd);

    auto* gen = app.add_subcommand("gen", "generate graphs");
    gen->require_subcommand(1);
    std::size_t gn = 100, gm = 400, rows = 5, cols = 5, layers = 5;
    Weight max_w = 1;
    std::string plant = "yes";
    auto gen_common = [&](CLI::App* s) {
        s->add_option("--seed", seed, "seed")->capture_default_str();
        s->add_option("--out", out_path, "output file (stdout when absent)");
        s->add_option("--max-weight", max_w, "uniform weights 1..M")->capture_default_str();
    };
    auto* g_gnm = gen->add_subcommand("gnm", "uniform random digraph");
    g_gnm->add_option("--n", gn)->required();
    g_gnm->add_option("--m", gm)->required();
    gen_common(g_gnm);
    auto* g_cyc = gen->add_subcommand("cycle", "directed cycle");
    g_cyc->add_option("--n", gn)->required();
    gen_common(g_cyc);
    auto* g_lay = gen->add_subcommand("layered", "Hamiltonian cycle with forward chords between layers");
    g_lay->add_option("--n", gn)->required();
    g_lay->add_option("--k", layers)->required();
    gen_common(g_lay);
    auto* g_grid = gen->add_subcommand("grid", "bidirected grid");
    g_grid->add_option("--rows", rows)->required();
    g_grid->add_option("--cols", cols)->required();
    gen_common(g_grid);
    auto* g_hard = gen->add_subcommand("hard", "girth-gap instance");
    g_hard->add_option("--n", gn)->required();
    g_hard->add_option("--k", k)->required();
    g_hard->add_option("--plant", plant)->check(CLI::IsMember({"yes", "no"}))->capture_default_str();
    g_hard->add_option("--seed", seed, "seed")->capture_default_str();
    g_hard->add_option("--out", out_path, "output file (stdout when absent)");

    BenchSpec bs;
    std::string sizes = "100,200,400";
    auto* bn = app.add_subcommand("bench", "scaling harness");
    bn->add_option("--family", bs.family)->check(CLI::IsMember({"gnm", "cycle", "layered", "grid"}))->capture_default_str();
    bn->add_option("--sizes", sizes, "comma-separated vertex counts")->capture_default_str();
    bn->add_option("--algo", bs.algo)->check(CLI::IsMember({"exact", "approx2", "approx2eps", "approx2k"}))->capture_default_str();
    bn->add_option("--eps", bs.eps)->capture_default_str();
    bn->add_option("--k", bs.k)->capture_default_str();
    bn->add_option("--trials", bs.trials)->check(CLI::PositiveNumber)->capture_default_str();
    bn->add_option("--seed", bs.seed)->capture_default_str();
    bn->add_option("--degree", bs.degree, "m/n for gnm")->capture_default_str();
    bn->add_option("--max-weight", bs.max_weight)->capture_default_str();
    bn->add_flag("--no-oracle", bs.no_oracle, "skip the exact reference");
    common_opts(bn);

    auto* al = app.add_subcommand("alpha", "runtime exponent alpha_k");
    al->add_option("--k", k)->required();
    common_opts(al);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    auto load = [&](const std::string& path) { return read_graph(path); };
    auto t0 = Clock::now();

    if (*exact) {
        DirectedGraph g = load(input);
        GirthResult r = oracle::exact_girth(g);
        self_check(g, r);
        if (c.json_out) {
            json j{{"schema", 1}, {"girth", weight_json(r.estimate)}, {"witness", r.witness}};
            if (!c.no_timing) j["elapsed_ms"] = ms_since(t0);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "girth " << weight_text(r.estimate) << "\nwitness " << join(r.witness) << '\n';
        }
        return 0;
    }
    if (*a2) {
        DirectedGraph g = load(input);
        UnweightedOptions o;
        o.delta = delta;
        o.constants = constants_for(sample_scale);
        o.threads = c.threads;
        o.reduce = !no_reduce;
        GirthResult r = girth_approx_unweighted(g, seed, o);
        self_check(g, r);
        emit_result(c, r, ms_since(t0));
        return 0;
    }
    if (*a2e || (*a2k && strong)) {
        DirectedGraph g = load(input);
        if (strong) {
            MultilevelOptions o;
            o.constants = constants_for(sample_scale);
            o.threads = c.threads;
            const int kk = *a2e && a2e->count("--k") == 0 ? 1 : k;
            StrongPolyResult sr = girth_approx_strong(g, eps, kk, seed, o);
            self_check(g, sr.result);
            json extra{{"W", sr.instance.W}, {"R", sr.instance.R}, {"discarded", sr.instance.discarded.size()},
                       {"scaled_estimate", weight_json(sr.scaled_estimate)}, {"k", kk}};
            emit_result(c, sr.result, ms_since(t0), extra);
            return 0;
        }
        WeightedOptions o;
        o.constants = constants_for(sample_scale);
        o.threads = c.threads;
        o.reduce = !no_reduce;
        GirthResult r = girth_approx_weighted(g, eps, seed, o);
        self_check(g, r);
        emit_result(c, r, ms_since(t0), json{{"eps", eps}});
        return 0;
    }
    if (*a2k) {
        DirectedGraph g = load(input);
        MultilevelOptions o;
        o.constants = constants_for(sample_scale);
        o.threads = c.threads;
        MultilevelTrace tr;
        GirthResult r = girth_approx_2k(g, k, eps, seed, o, &tr);
        self_check(g, r);
        json extra{{"k", k}, {"eps", eps}, {"alpha", tr.alpha.alpha}, {"beta", tr.beta}};
        if (trace) {
            json rows_j = json::array();
            for (const auto& row : tr.rows)
                rows_j.push_back({{"depth", row.depth}, {"u", row.u}, {"side", row.in_side ? "in" : "out"},
                                  {"sizes", row.sizes}, {"split", row.split},
                                  {"action", level_action_name(row.action)}, {"marked_off", row.marked_off}});
            extra["trace"] = rows_j;
            extra["recursions"] = tr.recursions;
        }
        emit_result(c, r, ms_since(t0), extra);
        return 0;
    }
    if (*sp) {
        DirectedGraph g = load(input);
        SpannerOptions o;
        o.constants = constants_for(sample_scale);
        o.threads = c.threads;
        SpannerSubgraph h = build_roundtrip_spanner(g, eps, seed, o);
        std::size_t trees = 0, searches = 0;
        for (const auto& p : h.provenance) (p.kind == ProvenanceKind::LandmarkTree ? trees : searches)++;
        if (!out_path.empty()) {
            std::ostringstream st;
            st << std::setprecision(17) << h.stretch;
            write_graph(out_path, edge_subgraph(g, h.edges),
                        {"spanner stretch " + st.str() + " eps " + std::to_string(eps) + " seed " + std::to_string(seed),
                         "provenance landmark_tree " + std::to_string(trees),
                         "provenance search_tree " + std::to_string(searches)});
        }
        if (c.json_out) {
            json j{{"schema", 1}, {"n", g.n()}, {"m", g.m()}, {"edges", h.edge_count()}, {"stretch", h.stretch},
                   {"eps", eps}, {"landmark_tree_edges", trees}, {"search_tree_edges", searches}, {"seed", seed}};
            if (!c.no_timing) j["elapsed_ms"] = ms_since(t0);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "edges " << h.edge_count() << " of " << g.m() << "\nstretch " << h.stretch
                      << "\nlandmark_tree_edges " << trees << "\nsearch_tree_edges " << searches << "\nseed " << seed
                      << '\n';
        }
        return 0;
    }
    if (*vs) {
        DirectedGraph g = load(input);
        DirectedGraph h = read_graph(spanner_path);
        const double bound = vs->count("--stretch") ? stretch : 5.0 + 12.0 * eps;
        oracle::SpannerCheck chk = oracle::verify_spanner(g, h, bound);
        if (c.json_out) {
            json j{{"schema", 1}, {"ok", chk.ok}, {"stretch", bound}, {"worst_ratio", chk.worst_ratio}};
            if (!chk.ok) j["violation"] = {{"u", chk.u}, {"v", chk.v}, {"rt_h", weight_json(chk.rt_h)}, {"rt_g", chk.rt_g}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (chk.ok ? "ok" : "violated") << "\nworst_ratio " << chk.worst_ratio << '\n';
            if (!chk.ok)
                std::cout << "pair " << chk.u << ' ' << chk.v << " rt_h " << weight_text(chk.rt_h) << " rt_g " << chk.rt_g << '\n';
        }
        return chk.ok ? 0 : kExitContract;
    }
    if (*rd) {
        DirectedGraph g = load(input);
        UnweightedReduceOptions uo;
        uo.reduce_in_degree = in_degree;
        ReducedGraph rg = (g.weighted() || force_weighted) ? reduce_weighted(g) : reduce_unweighted(g, uo);
        write_reduced(rg, out_path, map_path);
        if (c.json_out) {
            json j{{"schema", 1}, {"n", g.n()}, {"m", g.m()}, {"reduced_n", rg.graph.n()}, {"reduced_m", rg.graph.m()},
                   {"scale", rg.scale}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "reduced_n " << rg.graph.n() << "\nreduced_m " << rg.graph.m() << "\nscale " << rg.scale << '\n';
        }
        return 0;
    }
    if (*gen) {
        WeightModel w = max_w <= 1 ? WeightModel::unit() : WeightModel::uniform(max_w);
        DirectedGraph g;
        std::string what;
        if (*g_gnm) g = directed_gnm(gn, gm, w, seed), what = "gnm";
        else if (*g_cyc) g = directed_cycle(gn, w, seed), what = "cycle";
        else if (*g_lay) g = layered_cycle(gn, layers, w, seed), what = "layered";
        else if (*g_grid) g = bidirected_grid(rows, cols, w, seed), what = "grid";
        else g = gap_instance(gn, k, plant == "yes", seed), what = "hard k=" + std::to_string(k) + " plant=" + plant;
        std::vector<std::string> comments{"generated " + what + " seed " + std::to_string(seed)};
        if (out_path.empty()) write_graph(std::cout, g, comments);
        else write_graph(out_path, g, comments);
        if (!out_path.empty() && !c.json_out) std::cerr << "seed " << seed << '\n';
        return 0;
    }
    if (*bn) {
        bs.sizes = parse_sizes(sizes);
        return bench(bs, c);
    }
    if (*al) {
        AlphaExponent a = solve_alpha(k);
        if (c.json_out) {
            std::cout << json{{"schema", 1}, {"k", a.k}, {"alpha", a.alpha}, {"residual", a.residual}}.dump() << '\n';
        } else {
            std::cout << "k " << a.k << "\nalpha " << std::setprecision(15) << a.alpha << "\nresidual " << a.residual << '\n';
        }
        return 0;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return kExitContract;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        switch (e.code()) {
            case Errc::IoError:
            case Errc::ParseError: return kExitIo;
            case Errc::NotAClosedWalk:
            case Errc::NoSplitFound: return kExitContract;
            default: return kExitUsage;
        }
    } catch (const std::logic_error& e) {
        std::cerr << "self-check failed: " << e.what() << '\n';
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
