#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vbf/bfun.hpp"
#include "vbf/cli.hpp"
#include "vbf/coxeter.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace vbf;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("vbfun_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("conj prints the canonical factorization") {
    const CliRun r = run({"--no-cache", "conj", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "(s + 2/3) (s + 1)^2 (s + 4/3)\n");
    CHECK(r.err.empty());

    CHECK(run({"--no-cache", "conj", "0"}).out == "1\n");
    CHECK(run({"--no-cache", "conj", "1"}).out == "1\n");
}

TEST_CASE("text and json encode the same roots") {
    BFunctionEngine engine;
    for (int n = 2; n <= 6; ++n) {
        const std::string ns = std::to_string(n);
        const CliRun text = run({"--no-cache", "conj", ns});
        const CliRun json = run({"--no-cache", "--json", "conj", ns});
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        const FactoredBPoly expected = engine.conjectured(n);
        CHECK(text.out == expected.str() + "\n");
        CHECK(FactoredBPoly::from_json(nlohmann::json::parse(json.out)) == expected);
    }
}

TEST_CASE("local classifies points, including off the divisor") {
    CHECK(run({"--no-cache", "local", "5", "5", "7"}).out == "(s + 1)\n");
    CHECK(run({"--no-cache", "local", "1", "2", "3"}).out == "1\n");
    CHECK(run({"--no-cache", "local", "1/2", "2/4", "9"}).out == "(s + 1)\n");
    // negative rational coordinates look like flags but are values
    CHECK(run({"--no-cache", "local", "-1/2", "-1/2", "0"}).out == "(s + 1)\n");
}

TEST_CASE("blowup and upper bound verbs") {
    CHECK(run({"--no-cache", "blowup", "3"}).out == "(s + 1/3) (s + 2/3) (s + 1)^2\n");
    CHECK(run({"--no-cache", "upper", "3"}).out == "(s + 2/3) (s + 1)^2 (s + 4/3) (s + 2)\n");
}

TEST_CASE("opdam text, json, and the conjectural-coverage note") {
    const CliRun a2 = run({"--no-cache", "opdam", "A2"});
    CHECK(a2.code == 0);
    CHECK(a2.out == "(s + 5/6) (s + 1) (s + 7/6)\n");

    const CliRun a2j = run({"--no-cache", "--json", "opdam", "A2"});
    const nlohmann::json j = nlohmann::json::parse(a2j.out);
    CHECK(j["label"] == "A2");
    CHECK(j["rank"] == 2);
    CHECK(j["crystallographic"] == true);
    CHECK(FactoredBPoly::from_json(j["b"]) == opdam_b(coxeter_datum("A2")));

    const CliRun h3 = run({"--no-cache", "opdam", "H3"});
    CHECK(h3.code == 0);
    CHECK(h3.out.find("conjectural") != std::string::npos);
    const CliRun h3j = run({"--no-cache", "--json", "opdam", "H3"});
    CHECK(nlohmann::json::parse(h3j.out)["crystallographic"] == false);
}

TEST_CASE("jump verb") {
    CHECK(run({"jump", "3"}).out == "2/3\n");
    const CliRun j = run({"--json", "jump", "4"});
    CHECK(nlohmann::json::parse(j.out) == nlohmann::json({{"num", 1}, {"den", 2}}));
}

TEST_CASE("check runs the suite and reports per check") {
    const CliRun r = run({"--no-cache", "check", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=2:") != std::string::npos);
    CHECK(r.out.find("n=4:") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const CliRun rj = run({"--no-cache", "--json", "check", "3"});
    const nlohmann::json arr = nlohmann::json::parse(rj.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
    CHECK(arr[0]["n"] == 2);
    CHECK(arr[1]["checks"]["symmetry"] == true);
    CHECK(arr[1]["checks"]["budur"] == true);
}

TEST_CASE("verify-lemmas prints the identity table with the k=2 diagnostic") {
    const CliRun r = run({"verify-lemmas", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gradient cofactors") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("k=2") != std::string::npos);
    CHECK(r.out.find("differs from") != std::string::npos);  // the documented mismatch

    const CliRun rj = run({"--json", "verify-lemmas", "4"});
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j["gradient_cofactors"] == true);
    CHECK(j["triangular_form"] == true);
    CHECK(j["pivot_residue"] == true);
    CHECK(j["cofactor_residues"]["3"] == true);
    CHECK(j["cofactor_residues"]["4"] == true);
    CHECK(j["cofactor_k2"]["matches"] == false);
    CHECK(j["cofactor_k2"]["actual"] == "6");
    CHECK(j["cofactor_k2"]["expected"] == "5");
}

TEST_CASE("oracle verb") {
    const CliRun r = run({"oracle", "x1^2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("b(s) = (s + 1/2) (s + 1)\n") == 0);

    const CliRun rj = run({"--json", "oracle", "x1*y1", "--order", "2"});
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j["found"] == true);
    CHECK(j["fully_factored"] == true);
    CHECK(FactoredBPoly::from_json(j["b"]) == FactoredBPoly::from_root(Rational(-1), 2));

    const CliRun none = run({"oracle", "x1*y1*(x1+y1)", "--order", "3"});
    CHECK(none.code == 0);
    CHECK(none.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with no stdout") {
    for (const std::vector<std::string> bad :
         {std::vector<std::string>{"frobnicate", "3"},
          {"conj"},
          {"conj", "x"},
          {"conj", "3", "4"},
          {"local", "1", "notanumber"},
          {"opdam", "Q9"},
          {"blowup", "1"},
          {"jump", "13"},
          {"oracle", "x1 +"},
          {"oracle", "7"},
          {"--cache"},
          {"--bogus", "conj", "3"}}) {
        const CliRun r = run(bad);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("help goes to stdout and exits zero") {
    const CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("usage:") != std::string::npos);
}

TEST_CASE("cache round trip and determinism") {
    TempDir tmp;
    const std::string cache = (tmp.path / "cache.json").string();

    const CliRun first = run({"--cache", cache, "conj", "6"});
    CHECK(first.code == 0);
    REQUIRE(std::filesystem::exists(cache));

    // the file parses, has the version tag, and round-trips entries
    const BxiCache loaded = BxiCache::load(cache);
    BFunctionEngine engine;
    CHECK(loaded.entries.at(6) == engine.conjectured(6));
    CHECK(loaded.entries.count(2) == 1);

    // a warm cache must give the identical answer
    const CliRun second = run({"--cache", cache, "conj", "6"});
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    // and serve larger queries seeded from it
    const CliRun bigger = run({"--cache", cache, "conj", "7"});
    CHECK(bigger.out == run({"--no-cache", "conj", "7"}).out);
}

TEST_CASE("unknown cache versions are rejected") {
    TempDir tmp;
    const std::string cache = (tmp.path / "cache.json").string();
    {
        std::ofstream f(cache);
        f << R"({"version": 99, "entries": {}})";
    }
    const CliRun r = run({"--cache", cache, "conj", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("version") != std::string::npos);

    {
        std::ofstream f(cache);
        f << "not json at all";
    }
    CHECK(run({"--cache", cache, "conj", "3"}).code == 2);
}
