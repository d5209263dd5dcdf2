// CLI surface: in-process run_cli round trips -- exit codes, table goldens,
// JSON shapes, the resource guard, and the on-disk result cache.

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <striphom/cli.hpp>

using namespace striphom;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_raw(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Default runner: caching disabled so a stray STRIPHOM_CACHE in the
// environment cannot replay stored results into the assertions.
RunResult run(std::vector<std::string> args) {
    args.emplace_back("--no-cache");
    return run_raw(std::move(args));
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Scratch directory removed at scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("striphom-cli-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::vector<fs::path> entries(const fs::path& dir) {
    std::vector<fs::path> v;
    for (const auto& e : fs::directory_iterator(dir)) v.push_back(e.path());
    std::sort(v.begin(), v.end());
    return v;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::trunc);
    out << text;
}

}  // namespace

TEST_CASE("help requests exit 0 and usage errors exit 2") {
    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--help"}).out, "complex"));
    CHECK(run({"homology", "betti", "--help"}).code == 0);

    RunResult no_sub = run({});
    CHECK(no_sub.code == 2);
    CHECK(contains(no_sub.err, "subcommand"));

    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"complex", "stats"}).code == 2);  // --n is required
    CHECK(run({"complex", "stats", "--n", "3", "--variant", "weird"}).code == 2);
    CHECK(run({"complex", "stats", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(run({"fid", "verify", "--n", "3"}).code == 2);  // --dim is required
    CHECK(run({"fid", "verify", "--n", "3", "--dim", "1", "--property", "nope"}).code == 2);
    CHECK(run({"export", "boundary", "--n", "3"}).code == 2);  // --dim is required
    CHECK(run({"repro", "figure", "--id", "5"}).code == 2);    // not a known scenario

    RunResult too_deep = run({"complex", "stats", "--n", "3", "--dim", "7"});
    CHECK(too_deep.code == 2);
    CHECK(contains(too_deep.err, "exceeds maximum"));
    CHECK(contains(too_deep.err, "error:"));
}

TEST_CASE("complex stats prints counts, totals, and the euler characteristic") {
    RunResult full = run({"complex", "stats", "--n", "3"});
    CHECK(full.code == 0);
    CHECK(full.err.empty());
    CHECK(full.out ==
          "complex: cell(3,2)\n"
          "max dimension: 1\n"
          "dim 0: 6 cells\n"
          "dim 1: 12 cells\n"
          "total: 18\n"
          "euler characteristic: -6\n");

    RunResult desc = run({"complex", "stats", "--n", "3", "--variant", "desc"});
    CHECK(desc.out ==
          "complex: desc(3,2)\n"
          "max dimension: 1\n"
          "dim 0: 6 cells\n"
          "dim 1: 6 cells\n"
          "total: 12\n"
          "euler characteristic: 0\n");

    // --dim restricts the listing and drops the aggregate lines
    RunResult one = run({"complex", "stats", "--n", "3", "--dim", "1"});
    CHECK(one.out ==
          "complex: cell(3,2)\n"
          "max dimension: 1\n"
          "dim 1: 12 cells\n");

    json j = json::parse(run({"complex", "stats", "--n", "3", "--format", "json"}).out);
    CHECK(j["command"] == "complex stats");
    CHECK(j["spec"]["n"] == 3);
    CHECK(j["spec"]["w"] == 2);
    CHECK(j["spec"]["variant"] == "full");
    CHECK(j["max_dimension"] == 1);
    CHECK(j["counts"]["0"] == "6");
    CHECK(j["counts"]["1"] == "12");
    CHECK(j["total"] == "18");
    CHECK(j["euler_characteristic"] == "-6");

    json j0 = json::parse(
        run({"complex", "stats", "--n", "3", "--dim", "0", "--format", "json"}).out);
    CHECK(j0["counts"].size() == 1);
    CHECK_FALSE(j0.contains("total"));

    // counts are closed-form, so large levels stay cheap and unguarded
    RunResult big = run({"complex", "stats", "--n", "12"});
    CHECK(big.code == 0);
    CHECK(contains(big.out, "total: 111607372800\n"));
}

TEST_CASE("homology betti reports ranks and torsion") {
    RunResult r = run({"homology", "betti", "--n", "3", "--variant", "desc"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "homology: desc(3,2)\n"
          "dim 0: cells 6, betti 1\n"
          "dim 1: cells 6, betti 1\n"
          "torsion: none\n");

    RunResult skip = run({"homology", "betti", "--n", "3", "--variant", "desc", "--no-torsion"});
    CHECK(contains(skip.out, "torsion: not computed\n"));

    json j = json::parse(
        run({"homology", "betti", "--n", "3", "--variant", "desc", "--format", "json"}).out);
    CHECK(j["command"] == "homology betti");
    CHECK(j["betti"] == json::array({1, 1}));
    CHECK(j["cells"] == json::array({6, 6}));
    CHECK(j["torsion_computed"] == true);
    CHECK(j["torsion"] == json::array({json::array(), json::array()}));

    json jf = json::parse(run({"homology", "betti", "--n", "3", "--format", "json"}).out);
    CHECK(jf["betti"] == json::array({1, 7}));
}

TEST_CASE("morse critical lists critical cells") {
    RunResult r = run({"morse", "critical", "--n", "3", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "critical cells: cell(3,2)\n"
          "dim 0: 1\n"
          "  3|2|1\n"
          "dim 1: 7\n"
          "  3|1 2\n"
          "  2|1 3\n"
          "  2 3|1\n"
          "  1|3 2\n"
          "  1|2 3\n"
          "  1 2|3\n"
          "  1 3|2\n"
          "total: 8\n");

    json j = json::parse(run({"morse", "critical", "--n", "3", "--list", "--format", "json"}).out);
    CHECK(j["counts"]["0"] == 1);
    CHECK(j["counts"]["1"] == 7);
    CHECK(j["cells"]["1"].size() == 7);

    // descending variant at width 4: one vertex class and the dim-3 block
    json jd = json::parse(
        run({"morse", "critical", "--n", "7", "--w", "4", "--variant", "desc", "--format", "json"})
            .out);
    CHECK(jd["counts"]["0"] == 1);
    CHECK(jd["counts"]["3"] == 71);
    CHECK(jd["counts"]["5"] == 0);
}

TEST_CASE("morse audit passes on small complexes") {
    RunResult r = run({"morse", "audit", "--n", "3", "--homology"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "morse audit: cell(3,2)\n"
          "acyclicity: ok\n"
          "  note: cell(3,2): 5 gradient pairs, 8 critical cells\n"
          "homology cross-check: ok\n"
          "  note: cell(3,2): betti = 1 7\n"
          "result: PASS\n");

    json j = json::parse(
        run({"morse", "audit", "--n", "4", "--variant", "desc", "--format", "json"}).out);
    CHECK(j["pass"] == true);
}

TEST_CASE("the resource guard refuses oversized enumerations") {
    RunResult r = run({"homology", "betti", "--n", "9"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "resource guard: full variant with n = 9 > 8"));
    CHECK(contains(r.err, "use --force to override"));

    // cell-count estimate branch: desc(11,1) has 11! = 39916800 > 10^7 cells
    RunResult big = run({"morse", "critical", "--n", "11", "--w", "1", "--variant", "desc"});
    CHECK(big.code == 3);
    CHECK(contains(big.err, "exceeds 10^7"));

    // --force is accepted on guarded commands (harmless at small sizes)
    CHECK(run({"homology", "betti", "--n", "3", "--force"}).code == 0);

    // unguarded commands ignore size: stats is closed-form
    CHECK(run({"complex", "stats", "--n", "12"}).code == 0);
}

TEST_CASE("the result cache stores, replays, and survives corruption") {
    TempDir td;
    std::vector<std::string> args = {"homology", "betti",      "--n",     "3",
                                     "--variant", "desc",      "--cache-dir", td.str()};
    RunResult first = run_raw(args);
    CHECK(first.code == 0);
    CHECK(first.err.empty());

    auto files = entries(td.path);
    REQUIRE(files.size() == 1);
    CHECK(files[0].filename().string().size() == 16 + 5);  // hex16 digest + ".json"
    json stored = json::parse(std::ifstream(files[0]));
    CHECK(stored["exit"] == 0);
    CHECK(stored["output"] == first.out);
    CHECK(contains(stored["request"].get<std::string>(), "homology betti"));
    CHECK(contains(stored["request"].get<std::string>(), "n=3"));

    // hit: replayed byte for byte, nothing recomputed or rewritten
    RunResult second = run_raw(args);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
    CHECK(second.err.empty());

    // corrupt entry: warn, recompute, rewrite
    write_file(files[0], "{ not json");
    RunResult third = run_raw(args);
    CHECK(third.code == 0);
    CHECK(third.out == first.out);
    CHECK(contains(third.err, "warning: corrupt cache entry"));
    CHECK(contains(third.err, "recomputing"));
    json rewritten = json::parse(std::ifstream(files[0]));
    CHECK(rewritten["output"] == first.out);

    // digest collision with a different request: detected via the stored text
    write_file(files[0],
               json{{"request", "bogus"}, {"exit", 0}, {"output", "hijacked\n"}}.dump());
    RunResult fourth = run_raw(args);
    CHECK(fourth.out == first.out);
    CHECK(contains(fourth.err, "request mismatch"));

    // distinct requests get distinct entries; format is part of the key
    RunResult json_run = run_raw({"homology", "betti", "--n", "3", "--variant", "desc",
                                  "--format", "json", "--cache-dir", td.str()});
    CHECK(json_run.code == 0);
    CHECK(entries(td.path).size() == 2);
}

TEST_CASE("the cache respects --no-cache and skips guard refusals") {
    TempDir td;
    RunResult r = run_raw({"homology", "betti", "--n", "3", "--cache-dir", td.str(),
                           "--no-cache"});
    CHECK(r.code == 0);
    CHECK(entries(td.path).empty());

    // guard refusal exits before the cache: no entry appears
    RunResult guard = run_raw({"homology", "betti", "--n", "9", "--cache-dir", td.str()});
    CHECK(guard.code == 3);
    CHECK(entries(td.path).empty());

    // verification failures (exit 1) are cached and replayed
    std::vector<std::string> fail_args = {"fid", "verify",    "--n",       "4",
                                          "--w", "3",         "--variant", "desc",
                                          "--dim", "1",       "--property", "generation",
                                          "--cache-dir", td.str()};
    RunResult fail1 = run_raw(fail_args);
    CHECK(fail1.code == 1);
    CHECK(entries(td.path).size() == 1);
    RunResult fail2 = run_raw(fail_args);
    CHECK(fail2.code == 1);
    CHECK(fail2.out == fail1.out);
}

TEST_CASE("basis show prints the factorization and cycle") {
    RunResult r = run({"basis", "show", "--n", "5", "--cell", "2|5 3|1 4"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "cell: 2|5 3|1 4\n"
          "complex: cell(5,2)\n"
          "dimension: 2\n"
          "factors: Wheel(2; 5 3), Pair(1 4)\n"
          "barriers: 2\n"
          "z(e) = 2|5 3|1 4 + 2|5 3|4 1 - 3 2|5|1 4 - 3 2|5|4 1 - 3|5 2|1 4 - 3|5 2|4 1"
          " - 5 3|2|1 4 - 5 3|2|4 1 + 5 2|3|1 4 + 5 2|3|4 1 + 5|3 2|1 4 + 5|3 2|4 1\n"
          "terms: 12\n");

    json j = json::parse(
        run({"basis", "show", "--n", "5", "--cell", "2|5 3|1 4", "--format", "json"}).out);
    CHECK(j["barriers"] == 2);
    CHECK(j["dimension"] == 2);
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["kind"] == "wheel");
    CHECK(j["factors"][0]["labels"] == json::array({2, 3, 5}));
    CHECK(j["factors"][0]["first_block"] == 0);
    CHECK(j["factors"][0]["block_span"] == 2);
    CHECK(j["factors"][1]["kind"] == "pair");
    CHECK(j["z"]["terms"].size() == 12);

    // non-critical and off-complex cells are rejected
    RunResult bad = run({"basis", "show", "--n", "3", "--cell", "3 2|1"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "error:"));
    CHECK(run({"basis", "show", "--n", "3", "--cell", "3 2 1"}).code == 2);
}

TEST_CASE("basis reduce accepts inline chains and chain files") {
    const std::string chain =
        R"({"n":2,"dim":1,"terms":[{"symbol":"1 2","coeff":1},{"symbol":"2 1","coeff":1}]})";
    RunResult r = run({"basis", "reduce", "--n", "2", "--chain", chain});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input: 2 terms, dimension 1\n"
          "coordinates (1 basis cycles):\n"
          "  +1 z(1 2)\n");

    RunResult zero = run({"basis", "reduce", "--n", "2", "--chain",
                          R"({"n":2,"dim":1,"terms":[]})"});
    CHECK(zero.out ==
          "input: 0 terms, dimension -1\n"
          "coordinates (0 basis cycles):\n"
          "  (zero)\n");

    json j = json::parse(
        run({"basis", "reduce", "--n", "2", "--chain", chain, "--format", "json"}).out);
    CHECK(j["input_terms"] == 2);
    CHECK(j["dimension"] == 1);
    REQUIRE(j["coordinates"].size() == 1);
    CHECK(j["coordinates"][0]["cell"] == "1 2");
    CHECK(j["coordinates"][0]["coeff"] == 1);

    TempDir td;
    fs::path chain_path = td.path / "chain.json";
    // same chain, different formatting and key order
    write_file(chain_path,
               "{ \"dim\": 1, \"n\": 2, \"terms\": [ {\"coeff\": 1, \"symbol\": \"1 2\"},\n"
               "  {\"coeff\": 1, \"symbol\": \"2 1\"} ] }\n");
    RunResult from_file = run({"basis", "reduce", "--n", "2", "--chain-file",
                               chain_path.string()});
    CHECK(from_file.out == r.out);

    // inline and file input normalize to one cache entry
    fs::path cache = td.path / "cache";
    fs::create_directories(cache);
    run_raw({"basis", "reduce", "--n", "2", "--chain", chain, "--cache-dir", cache.string()});
    run_raw({"basis", "reduce", "--n", "2", "--chain-file", chain_path.string(), "--cache-dir",
             cache.string()});
    CHECK(entries(cache).size() == 1);

    // exactly one chain source; cycles only; matching n
    CHECK(run({"basis", "reduce", "--n", "2"}).code == 2);
    CHECK(run({"basis", "reduce", "--n", "2", "--chain", chain, "--chain-file",
               chain_path.string()})
              .code == 2);
    CHECK(run({"basis", "reduce", "--n", "2", "--chain",
               R"({"n":2,"dim":1,"terms":[{"symbol":"1 2","coeff":1}]})"})
              .code == 2);
    CHECK(run({"basis", "reduce", "--n", "3", "--chain", chain}).code == 2);
    CHECK(run({"basis", "reduce", "--n", "2", "--chain-file",
               (td.path / "missing.json").string()})
              .code == 2);
}

TEST_CASE("fid act applies morphisms to classes") {
    RunResult r = run({"fid", "act", "--n", "3", "--class", "1|3 2", "--morphism",
                       "n=3;m=4;phi=1,2,3;colors=4:1;d=2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "class at level 3 (dimension 1, 2 colors):\n"
          "  +1 z(1|3 2)\n"
          "morphism: n=3;m=4;phi=1,2,3;colors=4:1;d=2\n"
          "image at level 4:\n"
          "  +1 z(1|3 2|4)\n");

    // hexagon orientation reversal under the transposition (2 3)
    RunResult hex = run({"fid", "act", "--n", "3", "--variant", "desc", "--class", "1|3 2",
                         "--morphism", "n=3;m=3;phi=1,3,2;colors=;d=2"});
    CHECK(hex.code == 0);
    CHECK(contains(hex.out, "image at level 3:\n  -1 z(1|3 2)\n"));

    json j = json::parse(run({"fid", "act", "--n", "3", "--class", "1|3 2", "--morphism",
                              "n=3;m=4;phi=1,2,3;colors=4:1;d=2", "--format", "json"})
                             .out);
    CHECK(j["image_spec"]["n"] == 4);
    REQUIRE(j["image"].size() == 1);
    CHECK(j["image"][0]["cell"] == "1|3 2|4");
    CHECK(j["image"][0]["coeff"] == 1);

    // class loaded from a coordinate file
    TempDir td;
    fs::path cls = td.path / "class.json";
    write_file(cls, R"({"n":3,"w":2,"variant":"full","dim":1,
                        "coords":[{"symbol":"1|3 2","coeff":-2}]})");
    RunResult file_r = run({"fid", "act", "--n", "3", "--class", cls.string(), "--morphism",
                            "n=3;m=3;phi=1,2,3;colors=;d=2"});
    CHECK(file_r.code == 0);
    CHECK(contains(file_r.out, "image at level 3:\n  -2 z(1|3 2)\n"));

    // file spec must match the requested spec
    RunResult mismatch = run({"fid", "act", "--n", "4", "--class", cls.string(), "--morphism",
                              "n=4;m=4;phi=1,2,3,4;colors=;d=2"});
    CHECK(mismatch.code == 2);
    CHECK(contains(mismatch.err, "class file is for"));

    CHECK(run({"fid", "act", "--n", "3", "--class", "1|3 2", "--morphism", "garbage"}).code ==
          2);
    // level mismatch between class and morphism
    CHECK(run({"fid", "act", "--n", "3", "--class", "1|3 2", "--morphism",
               "n=4;m=5;phi=1,2,3,4;colors=5:1;d=2"})
              .code == 2);
}

TEST_CASE("fid verify runs property suites") {
    RunResult r = run({"fid", "verify", "--n", "2", "--dim", "1", "--property", "commute"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "fid verify: cell(2,2), dim 1\n"
          "commute: ok\n"
          "  note: cell(2,2) dim 1: [i_k][sigma] = [sigma~][i_k] on 4 (cell, permutation,"
          " color) triples\n"
          "result: PASS\n");

    RunResult all = run({"fid", "verify", "--n", "2", "--dim", "1", "--property", "all",
                         "--pairs", "20", "--seed", "7"});
    CHECK(all.code == 0);
    CHECK(contains(all.out, "commute: ok"));
    CHECK(contains(all.out, "unordered: ok"));
    CHECK(contains(all.out, "functor: ok"));
    CHECK(contains(all.out, "generation: ok"));
    CHECK(contains(all.out, "barriers: ok"));
    CHECK(contains(all.out, "result: PASS"));

    // same seed, same transcript
    RunResult again = run({"fid", "verify", "--n", "2", "--dim", "1", "--property", "all",
                           "--pairs", "20", "--seed", "7"});
    CHECK(again.out == all.out);

    // generation needs (w-1) | dim on the descending variant
    RunResult fail = run({"fid", "verify", "--n", "4", "--w", "3", "--variant", "desc",
                          "--dim", "1", "--property", "generation"});
    CHECK(fail.code == 1);
    CHECK(contains(fail.out, "generation: FAILED"));
    CHECK(contains(fail.out, "result: FAIL\n"));

    json j = json::parse(run({"fid", "verify", "--n", "3", "--dim", "1", "--property",
                              "commute", "--format", "json"})
                             .out);
    CHECK(j["pass"] == true);
    CHECK(j["properties"]["commute"]["ok"] == true);
    CHECK(j["properties"]["commute"]["issues"].empty());
}

TEST_CASE("export boundary emits COO and JSON matrices") {
    RunResult r = run({"export", "boundary", "--n", "2", "--dim", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "2 2 4\n"
          "1 1 1\n"
          "1 2 -1\n"
          "2 1 -1\n"
          "2 2 1\n");

    // coordinate-matrix is an alias for the COO text form
    RunResult coo = run({"export", "boundary", "--n", "2", "--dim", "1", "--format",
                         "coordinate-matrix"});
    CHECK(coo.out == r.out);

    json j = json::parse(
        run({"export", "boundary", "--n", "2", "--dim", "1", "--format", "json"}).out);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 2);
    CHECK(j["entries"] ==
          json::array({json::array({1, 1, 1}), json::array({1, 2, -1}),
                       json::array({2, 1, -1}), json::array({2, 2, 1})}));

    CHECK(run({"export", "boundary", "--n", "2", "--dim", "0"}).code == 2);
}

TEST_CASE("repro figure scenarios all pass") {
    for (int id : {2, 6, 7, 8, 9, 10, 11, 12, 13, 14}) {
        RunResult r = run({"repro", "figure", "--id", std::to_string(id)});
        CAPTURE(id);
        CHECK(r.code == 0);
        std::string tail = "repro figure " + std::to_string(id) + ": PASS\n";
        REQUIRE(r.out.size() >= tail.size());
        CHECK(r.out.substr(r.out.size() - tail.size()) == tail);
    }

    json j = json::parse(run({"repro", "figure", "--id", "12", "--format", "json"}).out);
    CHECK(j["command"] == "repro figure");
    CHECK(j["id"] == 12);
    CHECK(j["pass"] == true);
    CHECK(j["issues"].empty());
}
