// Command-line front end: generate graphs and balls, compute count series,
// estimate growth rates, evaluate the co-growth maps, verify the operator
// and scalar identities, and lift functions to universal covers.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cogrowth.hpp"
#include "cogrowth/radial.hpp"

namespace {

using namespace cogrowth;

std::vector<int> parse_int_list(const std::string& text, std::size_t expected,
                                const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected) + " comma-separated integers");
    return out;
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty())
        std::cout << content;
    else
        write_text_file(output_path, content);
}

void emit_json(const std::string& output_path, const Json& j) { emit(output_path, j.dump(2) + "\n"); }

FunctionSpec load_function_spec(const std::string& arg) {
    // inline specs start with a known kind keyword; anything else is a path
    for (const char* prefix : {"ones", "geometric:", "radial:", "dense:", "indicator:"})
        if (arg.rfind(prefix, 0) == 0) return parse_function_spec(arg);
    return function_spec_from_json(load_json(arg));
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string ball, kmn, subdivision_path;
    int cycle = 0, complete = 0;
    bool single_edge = false;
    std::string output;
};

int run_gen(const GenArgs& a) {
    int selected = !a.ball.empty() + !a.kmn.empty() + (a.cycle > 0) + (a.complete > 0) +
                   a.single_edge + !a.subdivision_path.empty();
    if (selected != 1) throw std::invalid_argument("gen: pick exactly one generator");
    Graph g;
    if (!a.ball.empty()) {
        auto klr = parse_int_list(a.ball, 3, "--ball");
        g = generate_tree_ball(klr[0], klr[1], klr[2]).graph;
    } else if (!a.kmn.empty()) {
        auto mn = parse_int_list(a.kmn, 2, "--complete-bipartite");
        g = complete_bipartite(mn[0], mn[1]);
    } else if (a.cycle > 0) {
        g = cycle_graph(a.cycle);
    } else if (a.complete > 0) {
        g = complete_graph(a.complete);
    } else if (a.single_edge) {
        g = complete_bipartite(1, 1);
    } else {
        g = subdivision(graph_from_json(load_json(a.subdivision_path)));
    }
    emit_json(a.output, graph_to_json(g));
    return 0;
}

// ---------------------------------------------------------------------------

struct CountsArgs {
    std::string graph_path, ball;
    int base = 0;
    std::string function;
    std::string kind;
    int r_max = -1;
    bool exact = false;
    bool allow_truncated = false;
    std::string output, plot_data;
};

int run_counts(const CountsArgs& a) {
    if (a.kind != "a" && a.kind != "b") throw std::invalid_argument("--kind must be a or b");
    if (a.r_max < 0) throw std::invalid_argument("--rmax must be >= 0");
    if (a.graph_path.empty() == a.ball.empty())
        throw std::invalid_argument("counts: pass exactly one of --graph / --ball");
    FunctionSpec fspec = load_function_spec(a.function);
    WalkKind kind = (a.kind == "a") ? WalkKind::nbw : WalkKind::walk;

    CountSeries series;
    if (!a.ball.empty()) {
        auto klr = parse_int_list(a.ball, 3, "--ball");
        if (fspec.is_radial()) {
            RadialOptions opt;
            if (a.exact) opt.mode = RadialOptions::Mode::exact;
            RadialProfile profile = fspec.to_radial_profile();
            series = (kind == WalkKind::nbw)
                         ? radial_nbw_counts(klr[0], klr[1], profile, a.r_max, opt)
                         : radial_walk_counts(klr[0], klr[1], profile, a.r_max, opt);
        } else {
            TreeBall ball = generate_tree_ball(klr[0], klr[1], klr[2]);
            VertexFunction f = fspec.to_vertex_function(ball.graph, ball.root);
            series = (kind == WalkKind::nbw)
                         ? nbw_counts(ball, ball.root, f, a.r_max, a.allow_truncated)
                         : walk_counts(ball, ball.root, f, a.r_max, a.allow_truncated);
        }
    } else {
        Graph g = graph_from_json(load_json(a.graph_path));
        if (a.base < 0 || a.base >= g.vertex_count())
            throw std::invalid_argument("--base out of range");
        VertexFunction f = fspec.to_vertex_function(g, a.base);
        series = (kind == WalkKind::nbw) ? nbw_counts(g, a.base, f, a.r_max)
                                         : walk_counts(g, a.base, f, a.r_max);
    }

    bool csv = a.output.size() >= 4 && a.output.substr(a.output.size() - 4) == ".csv";
    emit(a.output, csv ? series_to_csv(series) : series_to_json(series).dump(2) + "\n");
    if (!a.plot_data.empty()) write_text_file(a.plot_data, series_to_plot_csv(series));
    return 0;
}

// ---------------------------------------------------------------------------

struct EstimateArgs {
    std::string series_path, method = "ratio2", window, kind;
    std::string output;
};

int run_estimate(const EstimateArgs& a) {
    CountSeries s = load_series(a.series_path);
    if (!a.kind.empty()) s.kind = (a.kind == "a") ? WalkKind::nbw : WalkKind::walk;
    std::optional<EstimateWindow> window;
    if (!a.window.empty()) {
        auto lohi = parse_int_list(a.window, 2, "--window");
        window = EstimateWindow{lohi[0], lohi[1]};
    }
    GrowthEstimate est = estimate_growth_rate(s, parse_estimate_method(a.method), window);
    emit_json(a.output, estimate_to_json(est, s.kind == WalkKind::nbw ? "alpha" : "beta"));
    return 0;
}

// ---------------------------------------------------------------------------

struct PredictArgs {
    double alpha = -1, beta = -1;
    int d = 0, k = 0, l = 0;
    bool inverse = false;
    std::string output;
};

int run_predict(const PredictArgs& a) {
    bool regular = a.d > 0;
    bool biregular = a.k > 0 || a.l > 0;
    if (regular == biregular)
        throw std::invalid_argument("predict: pass either --d or both --k and --l");
    if (biregular && (a.k <= 0 || a.l <= 0))
        throw std::invalid_argument("predict: --k and --l go together");

    Json j;
    if (!a.inverse) {
        if (a.alpha < 0) throw std::invalid_argument("predict: --alpha required (>= 0)");
        double beta = regular ? cogrowth_regular(a.alpha, a.d)
                              : cogrowth_biregular(a.alpha, a.k, a.l);
        j["alpha"] = a.alpha;
        j["beta"] = beta;
    } else {
        if (a.beta < 0) throw std::invalid_argument("predict: --beta required with --inverse");
        double alpha = regular ? inverse_cogrowth_regular(a.beta, a.d)
                               : inverse_cogrowth_biregular(a.beta, a.k, a.l);
        j["beta"] = a.beta;
        j["alpha"] = alpha;
    }
    if (regular) {
        j["family"] = "regular";
        j["d"] = a.d;
    } else {
        j["family"] = "biregular";
        j["k"] = a.k;
        j["l"] = a.l;
        if (cogrowth_degenerate(a.k, a.l)) j["degenerate"] = true;
    }
    emit_json(a.output, j);
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string identity, graph_path, function;
    double z = 0, t = 0, z1 = 0, z2 = 0, rho = 0, rel_tol = 1e-6;
    int d = 0, k = 0, l = 0, terms = 60;
    std::string output;
};

void print_report_line(const IdentityReport& rep) {
    std::printf("%-18s lhs=%-14.8g rhs=%-14.8g gap=%-12.4g tail=%-12.4g %s\n",
                rep.identity.c_str(), rep.lhs, rep.rhs, rep.abs_gap, rep.tail_bound,
                rep.passed ? "ok" : "FAIL");
}

int run_verify(const VerifyArgs& a) {
    std::vector<IdentityReport> reports;

    auto radial_pair = [&](int k, int l) {
        if (a.function.empty()) throw std::invalid_argument("verify: --function required");
        RadialProfile f = load_function_spec(a.function).to_radial_profile();
        CountSeries as = radial_nbw_counts(k, l, f, a.terms);
        CountSeries bs = radial_walk_counts(k, l, f, a.terms);
        return std::make_pair(as, bs);
    };

    if (a.identity == "resolvent") {
        reports.push_back(
            verify_resolvent_series(graph_from_json(load_json(a.graph_path)), a.z, a.terms));
    } else if (a.identity == "nbw-gen") {
        reports.push_back(
            verify_nbw_generating(graph_from_json(load_json(a.graph_path)), a.t, a.terms));
    } else if (a.identity == "biresolvent") {
        reports.push_back(verify_biresolvent(graph_from_json(load_json(a.graph_path)), a.z1,
                                             a.z2, a.terms));
    } else if (a.identity == "regular-scalar") {
        if (a.d < 2) throw std::invalid_argument("verify: --d required");
        auto [as, bs] = radial_pair(a.d, a.d);
        reports.push_back(eval_regular_scalar_identity(as, bs, a.d, a.rho, a.rel_tol));
    } else if (a.identity == "parity") {
        if (a.d < 2) throw std::invalid_argument("verify: --d required");
        auto [as, bs] = radial_pair(a.d, a.d);
        auto [even, odd] = eval_parity_identities(as, bs, a.d, a.rho, a.rel_tol);
        reports.push_back(even);
        reports.push_back(odd);
    } else if (a.identity == "biregular-scalar") {
        if (a.k < 2 || a.l < 2) throw std::invalid_argument("verify: --k and --l required");
        auto [as, bs] = radial_pair(a.k, a.l);
        reports.push_back(eval_biregular_scalar_identity(as, bs, a.k, a.l, a.rho, a.rel_tol));
    } else {
        throw std::invalid_argument(
            "verify: --identity must be one of resolvent, nbw-gen, biresolvent, "
            "regular-scalar, parity, biregular-scalar");
    }

    bool all_passed = true;
    Json out = Json::array();
    for (const auto& rep : reports) {
        print_report_line(rep);
        out.push_back(identity_report_to_json(rep));
        all_passed = all_passed && rep.passed;
    }
    if (!a.output.empty()) save_json(a.output, reports.size() == 1 ? out[0] : out);
    return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct LiftArgs {
    std::string graph_path, function;
    int base = 0, radius = 0, r_max = -1;
    std::string output, out_cover, out_function;
};

int run_lift(const LiftArgs& a) {
    Graph g = graph_from_json(load_json(a.graph_path));
    if (a.base < 0 || a.base >= g.vertex_count())
        throw std::invalid_argument("--base out of range");
    int r_max = a.r_max >= 0 ? a.r_max : a.radius;
    if (r_max > a.radius)
        throw std::invalid_argument("--rmax must be <= --radius for exact comparison");

    CoverBall cover = universal_cover_ball(g, a.base, a.radius);
    VertexFunction f = load_function_spec(a.function).to_vertex_function(g, a.base);
    VertexFunction lifted = lift_function(f, cover, g);

    CountSeries a_base = nbw_counts(g, a.base, f, r_max);
    CountSeries b_base = walk_counts(g, a.base, f, r_max);
    CountSeries a_cover = nbw_counts(cover, cover.root, lifted, r_max);
    CountSeries b_cover = walk_counts(cover, cover.root, lifted, r_max);

    bool equal_a = a_base.exact == a_cover.exact;
    bool equal_b = b_base.exact == b_cover.exact;

    Json rep;
    rep["base_graph"] = a.graph_path;
    rep["base_vertex"] = a.base;
    rep["cover_radius"] = a.radius;
    rep["cover_vertices"] = cover.vertex_count();
    rep["r_max"] = r_max;
    rep["a_equal"] = equal_a;
    rep["b_equal"] = equal_b;
    rep["a_base"] = series_to_json(a_base)["entries"];
    rep["a_cover"] = series_to_json(a_cover)["entries"];
    rep["b_base"] = series_to_json(b_base)["entries"];
    rep["b_cover"] = series_to_json(b_cover)["entries"];
    emit_json(a.output, rep);

    if (!a.out_cover.empty()) save_json(a.out_cover, graph_to_json(cover.graph));
    if (!a.out_function.empty()) {
        FunctionSpec dense;
        dense.kind = FunctionSpec::Kind::dense;
        dense.values = lifted.values;
        save_json(a.out_function, function_spec_to_json(dense));
    }
    return (equal_a && equal_b) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"walk and non-backtracking walk counts on regular and bi-regular trees,\n"
                 "co-growth maps, and generating-function identity verification"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph or tree ball (JSON)");
    gen_cmd->add_option("--ball", gen.ball, "k,l,R bi-regular tree ball");
    gen_cmd->add_option("--complete-bipartite", gen.kmn, "m,n complete bipartite graph");
    gen_cmd->add_option("--cycle", gen.cycle, "cycle C_n");
    gen_cmd->add_option("--complete", gen.complete, "complete graph K_n");
    gen_cmd->add_flag("--single-edge", gen.single_edge, "the one-edge graph");
    gen_cmd->add_option("--subdivision", gen.subdivision_path, "subdivide the graph in FILE");
    gen_cmd->add_option("-o,--output", gen.output, "output path (default stdout)");

    CountsArgs counts;
    auto* counts_cmd = app.add_subcommand("counts", "compute a count series a_r(f) or b_r(f)");
    counts_cmd->add_option("--graph", counts.graph_path, "graph JSON file");
    counts_cmd->add_option("--ball", counts.ball, "k,l,R tree ball instead of a graph file");
    counts_cmd->add_option("--base", counts.base, "base vertex (graph input)");
    counts_cmd->add_option("--function", counts.function, "function file or inline spec")
        ->required();
    counts_cmd->add_option("--kind", counts.kind, "a (non-backtracking) or b (walks)")
        ->required();
    counts_cmd->add_option("--rmax", counts.r_max, "largest walk length")->required();
    counts_cmd->add_flag("--exact", counts.exact, "force exact arithmetic");
    counts_cmd->add_flag("--allow-truncated", counts.allow_truncated,
                         "permit ball-truncated entries past the exactness horizon");
    counts_cmd->add_option("-o,--output", counts.output,
                           "output path (.csv for CSV, default stdout JSON)");
    counts_cmd->add_option("--plot-data", counts.plot_data, "write r,log_value CSV here");

    EstimateArgs est;
    auto* est_cmd = app.add_subcommand("estimate", "estimate a growth rate from a series file");
    est_cmd->add_option("--series", est.series_path, "CountSeries JSON/CSV file")->required();
    est_cmd->add_option("--method", est.method, "root | ratio | ratio2 | logfit");
    est_cmd->add_option("--window", est.window, "lo,hi sample window (default final 10%)");
    est_cmd->add_option("--kind", est.kind, "override series kind (a|b) for CSV input");
    est_cmd->add_option("-o,--output", est.output, "output path (default stdout)");

    PredictArgs pred;
    auto* pred_cmd = app.add_subcommand("predict", "apply the co-growth map (or its inverse)");
    pred_cmd->add_option("--alpha", pred.alpha, "non-backtracking growth rate");
    pred_cmd->add_option("--beta", pred.beta, "walk growth rate (with --inverse)");
    pred_cmd->add_option("--d", pred.d, "regular tree degree");
    pred_cmd->add_option("--k", pred.k, "bi-regular degree on the root side");
    pred_cmd->add_option("--l", pred.l, "bi-regular degree on the other side");
    pred_cmd->add_flag("--inverse", pred.inverse, "map beta back to alpha");
    pred_cmd->add_option("-o,--output", pred.output, "output path (default stdout)");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "verify a generating-function identity");
    ver_cmd->add_option("--identity", ver.identity,
                        "resolvent | nbw-gen | biresolvent | regular-scalar | parity | "
                        "biregular-scalar")
        ->required();
    ver_cmd->add_option("--graph", ver.graph_path, "graph JSON file (operator identities)");
    ver_cmd->add_option("--function", ver.function, "radial function spec (scalar identities)");
    ver_cmd->add_option("--z", ver.z, "resolvent parameter");
    ver_cmd->add_option("--t", ver.t, "generating-function parameter");
    ver_cmd->add_option("--z1", ver.z1, "bi-resolvent parameter on side U");
    ver_cmd->add_option("--z2", ver.z2, "bi-resolvent parameter on side W");
    ver_cmd->add_option("--rho", ver.rho, "scalar identity parameter");
    ver_cmd->add_option("--d", ver.d, "regular tree degree");
    ver_cmd->add_option("--k", ver.k, "bi-regular root-side degree");
    ver_cmd->add_option("--l", ver.l, "bi-regular other-side degree");
    ver_cmd->add_option("--terms", ver.terms, "series terms to sum");
    ver_cmd->add_option("--rel-tol", ver.rel_tol, "relative tolerance for scalar identities");
    ver_cmd->add_option("-o,--output", ver.output, "write the IdentityReport JSON here");

    LiftArgs lift;
    auto* lift_cmd =
        app.add_subcommand("lift", "lift a function to the universal cover and compare counts");
    lift_cmd->add_option("--graph", lift.graph_path, "base graph JSON file")->required();
    lift_cmd->add_option("--base", lift.base, "base vertex");
    lift_cmd->add_option("--radius", lift.radius, "cover ball radius")->required();
    lift_cmd->add_option("--function", lift.function, "function file or inline spec")
        ->required();
    lift_cmd->add_option("--rmax", lift.r_max, "walk lengths to compare (default radius)");
    lift_cmd->add_option("-o,--output", lift.output, "equality report path (default stdout)");
    lift_cmd->add_option("--out-cover", lift.out_cover, "write the cover ball graph here");
    lift_cmd->add_option("--out-function", lift.out_function, "write the lifted function here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (counts_cmd->parsed()) return run_counts(counts);
        if (est_cmd->parsed()) return run_estimate(est);
        if (pred_cmd->parsed()) return run_predict(pred);
        if (ver_cmd->parsed()) return run_verify(ver);
        if (lift_cmd->parsed()) return run_lift(lift);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}
