#include <catch_amalgamated.hpp>

#include "cogrowth/io.hpp"
#include "cogrowth/radial.hpp"

using namespace cogrowth;

TEST_CASE("graph JSON round-trip") {
    for (const auto& g : {complete_bipartite(3, 4), cycle_graph(6),
                          subdivision(complete_graph(4)),
                          generate_tree_ball(3, 4, 3).graph}) {
        Json j = graph_to_json(g);
        Graph back = graph_from_json(j);
        CHECK(back.adj == g.adj);
        CHECK(back.side == g.side);
        CHECK(graph_to_json(back) == j);  // byte-stable re-emission
    }
    SECTION("expected shape") {
        Json j = graph_to_json(complete_bipartite(1, 1));
        CHECK(j["vertex_count"] == 2);
        CHECK(j["edges"] == Json::array({{0, 1}}));
        CHECK(j["side"] == Json::array({"U", "W"}));
    }
    SECTION("invalid files are rejected") {
        Json j = graph_to_json(cycle_graph(4));
        j["edges"].push_back({0, 0});
        CHECK_THROWS_AS(graph_from_json(j), std::invalid_argument);
    }
}

TEST_CASE("function spec JSON and inline round-trips") {
    std::vector<FunctionSpec> specs;
    {
        FunctionSpec dense;
        dense.kind = FunctionSpec::Kind::dense;
        dense.values = {Rational(1), parse_decimal("0.5"), Rational(0)};
        specs.push_back(dense);
        FunctionSpec radial;
        radial.kind = FunctionSpec::Kind::radial;
        radial.values = {Rational(0), Rational(1), parse_decimal("2.25")};
        specs.push_back(radial);
        FunctionSpec geo;
        geo.kind = FunctionSpec::Kind::geometric;
        geo.base = parse_decimal("1.2");
        specs.push_back(geo);
        FunctionSpec ind;
        ind.kind = FunctionSpec::Kind::indicator;
        ind.vertices = {2, 5};
        specs.push_back(ind);
    }
    for (const auto& f : specs) {
        FunctionSpec back = function_spec_from_json(function_spec_to_json(f));
        CHECK(back.kind == f.kind);
        CHECK(back.values == f.values);
        CHECK(back.base == f.base);
        CHECK(back.vertices == f.vertices);
    }
    SECTION("inline shorthands") {
        CHECK(parse_function_spec("geometric:1.2").base == parse_decimal("1.2"));
        CHECK(parse_function_spec("ones").base == 1);
        CHECK(parse_function_spec("radial:0,0,1").values ==
              std::vector<Rational>{0, 0, 1});
        CHECK(parse_function_spec("indicator:2,5").vertices == std::vector<int>{2, 5});
        CHECK(parse_function_spec("dense:1,0.5").values ==
              std::vector<Rational>{1, parse_decimal("0.5")});
        CHECK_THROWS_AS(parse_function_spec("nope:1"), std::invalid_argument);
    }
    SECTION("resolution against a graph") {
        TreeBall ball = generate_tree_ball(3, 3, 2);
        FunctionSpec geo;
        geo.kind = FunctionSpec::Kind::geometric;
        geo.base = parse_decimal("2");
        VertexFunction f = geo.to_vertex_function(ball.graph, 0);
        for (int v = 0; v < ball.vertex_count(); ++v)
            CHECK(f.values[v] == boost::multiprecision::pow(BigInt(2), unsigned(ball.depth[v])));
        FunctionSpec dense;
        dense.kind = FunctionSpec::Kind::dense;
        dense.values = {1};
        CHECK_THROWS_AS(dense.to_vertex_function(ball.graph), std::invalid_argument);
    }
}

TEST_CASE("count series serialization") {
    CountSeries exact = radial_walk_counts(3, 4, RadialProfile::sphere_indicator(2), 12);
    RadialOptions fl;
    fl.mode = RadialOptions::Mode::floating;
    CountSeries approx = radial_walk_counts(3, 4, RadialProfile::geometric_family(Rational(2)), 12, fl);

    SECTION("JSON round-trip, exact series") {
        CountSeries back = series_from_json(series_to_json(exact));
        CHECK(back.kind == exact.kind);
        CHECK(back.r_max == exact.r_max);
        CHECK(back.exact == exact.exact);
        CHECK(back.logvals == exact.logvals);
        CHECK(back.exact_flags == exact.exact_flags);
        CHECK(series_to_json(back) == series_to_json(exact));
    }
    SECTION("JSON round-trip, floating series keeps log values only") {
        CountSeries back = series_from_json(series_to_json(approx));
        CHECK(!back.has_exact());
        CHECK(back.logvals == approx.logvals);
    }
    SECTION("CSV round-trip") {
        std::string csv = series_to_csv(exact);
        CountSeries back = series_from_csv(csv, exact.kind);
        CHECK(back.exact == exact.exact);
        CHECK(back.logvals == exact.logvals);
        CHECK(series_to_csv(back) == csv);
    }
    SECTION("CSV has the documented columns and -inf markers") {
        std::string csv = series_to_csv(exact);
        CHECK(csv.rfind("r,value,log_value,exact_flag\n", 0) == 0);
        CHECK(csv.find("-inf") != std::string::npos);  // odd entries vanish
        CHECK(csv.find("1,0,-inf,1") != std::string::npos);
    }
    SECTION("plot data emits r,log_value") {
        std::string csv = series_to_plot_csv(exact);
        CHECK(csv.rfind("r,log_value\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == exact.r_max + 2);
    }
    SECTION("zero values round-trip as null/-inf") {
        Json j = series_to_json(exact);
        CHECK(j["entries"][1]["log_value"].is_null());
        CountSeries back = series_from_json(j);
        CHECK(back.log_at(1) == -std::numeric_limits<double>::infinity());
    }
}

TEST_CASE("estimate and identity report JSON") {
    CountSeries b = radial_walk_counts(3, 3, RadialProfile::geometric_family(Rational(1)), 30);
    GrowthEstimate est = estimate_growth_rate(b, EstimateMethod::ratio2);
    Json j = estimate_to_json(est, "beta");
    CHECK(j.contains("beta"));
    CHECK(j["method"] == "ratio2");
    CHECK(j["window"].size() == 2);
    CHECK(j.contains("residual"));

    IdentityReport rep = verify_resolvent_series(complete_graph(4), 4.0, 40);
    Json rj = identity_report_to_json(rep);
    CHECK(rj["identity"] == "resolvent-series");
    CHECK(rj["passed"] == true);
    CHECK(rj["params"].contains("z"));
    for (const char* key : {"lhs", "rhs", "abs_gap", "rel_gap", "tail_bound"})
        CHECK(rj.contains(key));
}
