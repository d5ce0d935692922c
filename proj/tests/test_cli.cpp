#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cogrowth/io.hpp"

using namespace cogrowth;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = fs::temp_directory_path() / ("cogrowth_cli_" + std::to_string(counter++) + ".out");
    std::string cmd = std::string(COGROWTH_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    return {code, ss.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("cli: gen writes spec-format graph files") {
    fs::path k34 = temp_file("cli_k34.json");
    auto res = run_cli("gen --complete-bipartite 3,4 -o " + k34.string());
    REQUIRE(res.exit_code == 0);
    Graph g = graph_from_json(load_json(k34.string()));
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 12);
    REQUIRE(biregular_degrees(g).has_value());

    auto ball = run_cli("gen --ball 3,4,2");
    REQUIRE(ball.exit_code == 0);
    CHECK(graph_from_json(Json::parse(ball.stdout_text)).vertex_count() == 13);

    auto sub = run_cli("gen --complete 4 -o " + temp_file("cli_k4.json").string());
    REQUIRE(sub.exit_code == 0);
    auto subdiv = run_cli("gen --subdivision " + temp_file("cli_k4.json").string());
    REQUIRE(subdiv.exit_code == 0);
    CHECK(graph_from_json(Json::parse(subdiv.stdout_text)).vertex_count() == 10);
    fs::remove(k34);
    fs::remove(temp_file("cli_k4.json"));
}

TEST_CASE("cli: counts matches the documented example") {
    auto res = run_cli("counts --ball 3,3,6 --function geometric:1.0 --kind b --rmax 6");
    REQUIRE(res.exit_code == 0);
    CountSeries s = series_from_json(Json::parse(res.stdout_text));
    REQUIRE(s.has_exact());
    std::vector<Rational> expect = {1, 3, 9, 27, 81, 243, 729};
    CHECK(s.exact == expect);
}

TEST_CASE("cli: counts -> estimate round-trip through files") {
    fs::path series = temp_file("cli_series.json");
    auto res = run_cli("counts --ball 3,4,0 --function ones --kind a --rmax 400 -o " +
                       series.string());
    REQUIRE(res.exit_code == 0);
    auto est = run_cli("estimate --series " + series.string() + " --method ratio2");
    REQUIRE(est.exit_code == 0);
    Json j = Json::parse(est.stdout_text);
    REQUIRE(j.contains("alpha"));
    CHECK_THAT(j["alpha"].get<double>(),
               Catch::Matchers::WithinRel(std::sqrt(6.0), 1e-9));

    // CSV output path works too
    fs::path csv = temp_file("cli_series.csv");
    auto res2 = run_cli("counts --ball 3,3,0 --function radial:1 --kind b --rmax 50 -o " +
                        csv.string());
    REQUIRE(res2.exit_code == 0);
    auto est2 = run_cli("estimate --series " + csv.string() + " --kind b --window 30,48");
    REQUIRE(est2.exit_code == 0);
    Json j2 = Json::parse(est2.stdout_text);
    CHECK(j2.contains("beta"));
    fs::remove(series);
    fs::remove(csv);
}

TEST_CASE("cli: plot data flag") {
    fs::path plot = temp_file("cli_plot.csv");
    auto res = run_cli("counts --ball 3,3,4 --function ones --kind b --rmax 4 --plot-data " +
                       plot.string() + " -o " + temp_file("cli_sink.json").string());
    REQUIRE(res.exit_code == 0);
    std::ifstream in(plot);
    std::string header;
    std::getline(in, header);
    CHECK(header == "r,log_value");
    fs::remove(plot);
    fs::remove(temp_file("cli_sink.json"));
}

TEST_CASE("cli: predict") {
    auto res = run_cli("predict --alpha 2 --d 3");
    REQUIRE(res.exit_code == 0);
    Json j = Json::parse(res.stdout_text);
    CHECK_THAT(j["beta"].get<double>(), Catch::Matchers::WithinRel(3.0, 1e-12));

    auto bi = run_cli("predict --alpha 1.0 --k 3 --l 4");
    CHECK_THAT(Json::parse(bi.stdout_text)["beta"].get<double>(),
               Catch::Matchers::WithinRel(std::sqrt(2.0) + std::sqrt(3.0), 1e-12));

    auto inv = run_cli("predict --inverse --beta 3.0 --d 3");
    CHECK_THAT(Json::parse(inv.stdout_text)["alpha"].get<double>(),
               Catch::Matchers::WithinRel(2.0, 1e-12));

    auto degen = run_cli("predict --alpha 0.5 --k 2 --l 2");
    CHECK(Json::parse(degen.stdout_text)["degenerate"] == true);

    CHECK(run_cli("predict --alpha 2").exit_code != 0);             // missing family
    CHECK(run_cli("predict --alpha 2 --d 3 --k 3 --l 4").exit_code != 0);
}

TEST_CASE("cli: verify exit codes and reports") {
    fs::path k34 = temp_file("cli_verify_k34.json");
    REQUIRE(run_cli("gen --complete-bipartite 3,4 -o " + k34.string()).exit_code == 0);

    fs::path report = temp_file("cli_verify_report.json");
    auto ok = run_cli("verify --identity biresolvent --graph " + k34.string() +
                      " --z1 6 --z2 5 --terms 80 -o " + report.string());
    CHECK(ok.exit_code == 0);
    Json rj = load_json(report.string());
    CHECK(rj["passed"] == true);
    CHECK(rj["abs_gap"].get<double>() <= 1e-8);

    auto scalar = run_cli(
        "verify --identity regular-scalar --d 3 --function radial:0,0,1 --rho 3 --terms 200");
    CHECK(scalar.exit_code == 0);

    auto parity = run_cli(
        "verify --identity parity --d 3 --function radial:0,0,1 --rho 3 --terms 200");
    CHECK(parity.exit_code == 0);

    auto bireg = run_cli(
        "verify --identity biregular-scalar --k 3 --l 4 --function radial:1 --rho 2 "
        "--terms 400");
    CHECK(bireg.exit_code == 0);

    // precondition violation (z inside the spectrum) exits 1
    auto bad = run_cli("verify --identity resolvent --graph " + k34.string() +
                       " --z 1.0 --terms 20");
    CHECK(bad.exit_code == 1);

    // unknown flags exit 2
    CHECK(run_cli("verify --identity resolvent --nonsense").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    fs::remove(k34);
    fs::remove(report);
}

TEST_CASE("cli: lift compares base and cover series") {
    fs::path k4 = temp_file("cli_lift_k4.json");
    REQUIRE(run_cli("gen --complete 4 -o " + k4.string()).exit_code == 0);
    fs::path cover = temp_file("cli_lift_cover.json");
    fs::path lifted = temp_file("cli_lift_fn.json");
    auto res = run_cli("lift --graph " + k4.string() +
                       " --base 0 --radius 6 --function indicator:1 --rmax 6 --out-cover " +
                       cover.string() + " --out-function " + lifted.string());
    REQUIRE(res.exit_code == 0);
    Json j = Json::parse(res.stdout_text);
    CHECK(j["a_equal"] == true);
    CHECK(j["b_equal"] == true);
    CHECK(j["cover_vertices"].get<int>() == generate_tree_ball(3, 3, 6).vertex_count());

    Graph cg = graph_from_json(load_json(cover.string()));
    CHECK(cg.vertex_count() == j["cover_vertices"].get<int>());
    FunctionSpec fn = function_spec_from_json(load_json(lifted.string()));
    CHECK(fn.kind == FunctionSpec::Kind::dense);
    CHECK(static_cast<int>(fn.values.size()) == cg.vertex_count());
    fs::remove(k4);
    fs::remove(cover);
    fs::remove(lifted);
}

TEST_CASE("cli: ball truncation is opt-in") {
    // non-radial function on a ball: r past the horizon needs the flag
    auto denied = run_cli("counts --ball 3,3,3 --function indicator:1 --kind b --rmax 5");
    CHECK(denied.exit_code == 1);
    auto allowed = run_cli(
        "counts --ball 3,3,3 --function indicator:1 --kind b --rmax 5 --allow-truncated");
    REQUIRE(allowed.exit_code == 0);
    CountSeries s = series_from_json(Json::parse(allowed.stdout_text));
    CHECK(s.exact_flags[3]);
    CHECK(!s.exact_flags[4]);

    // lift refuses comparisons past the cover radius
    fs::path k4 = temp_file("cli_trunc_k4.json");
    REQUIRE(run_cli("gen --complete 4 -o " + k4.string()).exit_code == 0);
    CHECK(run_cli("lift --graph " + k4.string() +
                  " --base 0 --radius 4 --function ones --rmax 6")
              .exit_code == 1);
    fs::remove(k4);
}

TEST_CASE("cli: identical invocations are byte-identical") {
    auto a = run_cli("counts --ball 3,4,5 --function geometric:1.25 --kind b --rmax 5");
    auto b = run_cli("counts --ball 3,4,5 --function geometric:1.25 --kind b --rmax 5");
    CHECK(a.stdout_text == b.stdout_text);
    auto c = run_cli("predict --alpha 1.7320508 --k 4 --l 5");
    auto d = run_cli("predict --alpha 1.7320508 --k 4 --l 5");
    CHECK(c.stdout_text == d.stdout_text);
}
