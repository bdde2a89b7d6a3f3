#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "dehn/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dehn::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    const Run r = run_cli(args);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("order: text and json") {
    const Run r = run_cli({"order", "--category", "diff", "--n", "14"});
    CHECK(r.exit_code == dehn::cli::kExitOk);
    CHECK(r.out.find("finite of order 4") != std::string::npos);
    CHECK(r.out.find("--") != std::string::npos);  // provenance lines

    const json j = run_json({"order", "--category", "diff", "--n", "14"});
    CHECK(j["status"] == "ok");
    CHECK(j["command"] == "order");
    CHECK(j["value"]["order"]["kind"] == "finite");
    CHECK(j["value"]["order"]["order"] == "4");
    CHECK_FALSE(j["provenance"].empty());

    const json odd = run_json({"order", "--category", "symp", "--n", "3"});
    CHECK(odd["value"]["order"]["kind"] == "infinite");

    const json amb = run_json({"order", "--category", "diff", "--n", "62"});
    CHECK(amb["value"]["order"]["kind"] == "ambiguous");
    CHECK(amb["value"]["order"]["candidates"] == json::array({"4", "8"}));
}

TEST_CASE("matrix: twist power") {
    const json j = run_json({"matrix", "--n", "4", "--power", "2"});
    CHECK(j["status"] == "ok");
    CHECK(j["value"]["matrix"]["entries"] == json::array({json::array({"1", "0"}),
                                                          json::array({"0", "1"})}));
    const json j1 = run_json({"matrix", "--n", "4"});
    CHECK(j1["value"]["epsilon"] == -1);
    CHECK(j1["value"]["a"] == "-1");
    CHECK(j1["value"]["matrix"]["entries"] ==
          json::array({json::array({"-1", "-1"}), json::array({"0", "1"})}));
}

TEST_CASE("ac-bounds: documented example shape") {
    const json j = run_json({"ac-bounds", "--n", "4"});
    CHECK(j["status"] == "ok");
    CHECK(j["value"]["lower"] == "6");
    CHECK(j["value"]["upper"] == "384");
    CHECK_FALSE(j["provenance"].empty());
}

TEST_CASE("cited tables always come with provenance") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"kervaire", "--dim", "29"},
             {"bott", "--i", "7"},
             {"bott", "--i", "7", "--space", "o-mod-u"},
             {"harris", "--n", "6"},
             {"contact-class", "--k", "9", "--n", "4"},
         }) {
        const json j = run_json(args);
        CHECK(j["status"] == "ok");
        REQUIRE(j.contains("provenance"));
        CHECK_FALSE(j["provenance"].empty());
    }
}

TEST_CASE("json round-trips on a golden input per subcommand") {
    const std::vector<std::vector<std::string>> golden = {
        {"order", "--category", "homeo", "--n", "8"},
        {"matrix", "--n", "2", "--power", "3"},
        {"enumerate-actions", "--n", "6"},
        {"boundary", "--k", "4", "--n", "4"},
        {"arf", "--l", "6"},
        {"sphere-type", "--k", "3", "--n", "8"},
        {"kervaire", "--dim", "125"},
        {"chi-r", "--n", "8"},
        {"bott", "--i", "11"},
        {"harris", "--n", "8"},
        {"contact-class", "--k", "7", "--n", "6"},
        {"ac-bounds", "--n", "6"},
        {"ac-consistent", "--n", "4"},
        {"cross-selftest", "--dim", "3", "--samples", "50", "--rotation-samples", "20"},
    };
    for (const auto& args : golden) {
        const json j = run_json(args);
        CHECK(j["status"] == "ok");
        CHECK(j["command"] == args[0]);
        // Emit and reparse: the tree survives unchanged.
        CHECK(json::parse(j.dump()) == j);
    }
}

TEST_CASE("specific golden values") {
    const json sphere = run_json({"sphere-type", "--k", "3", "--n", "8"});
    CHECK(sphere["value"]["invariants"]["sphere_type"] == "kervaire_sphere");

    const json boundary = run_json({"boundary", "--k", "4", "--n", "4"});
    CHECK(boundary["value"]["homology"]["h_n"]["free_rank"] == 1);
    CHECK(boundary["value"]["homology"]["h_n"]["torsion"].empty());
    CHECK(boundary["value"]["homology"]["h_n_plus_1"]["free_rank"] == 1);

    const json kerv = run_json({"kervaire", "--dim", "125"});
    CHECK(kerv["value"]["status"] == "unknown");

    const json chi = run_json({"chi-r", "--n", "8"});
    CHECK(chi["value"]["group"]["torsion"] == json::array({"2", "2"}));

    const json cons = run_json({"ac-consistent", "--n", "4"});
    CHECK(cons["value"]["orders"] == json::array({"48", "96", "192", "384"}));

    const json selftest = run_json(
        {"cross-selftest", "--dim", "7", "--samples", "40", "--rotation-samples", "10"});
    CHECK(selftest["value"]["all_passed"] == true);
}

TEST_CASE("exit codes") {
    // Unknown subcommand: usage, 64.
    CHECK(run_cli({"frobnicate"}).exit_code == dehn::cli::kExitUsage);
    CHECK(run_cli({}).exit_code == dehn::cli::kExitUsage);
    // Missing required option: usage, 64.
    CHECK(run_cli({"order", "--n", "4"}).exit_code == dehn::cli::kExitUsage);
    // Precondition violations: 2.
    CHECK(run_cli({"order", "--category", "diff", "--n", "1"}).exit_code ==
          dehn::cli::kExitPrecondition);
    CHECK(run_cli({"order", "--category", "ac", "--n", "4"}).exit_code ==
          dehn::cli::kExitPrecondition);
    CHECK(run_cli({"kervaire", "--dim", "6"}).exit_code == dehn::cli::kExitPrecondition);
    CHECK(run_cli({"contact-class", "--k", "3", "--n", "4"}).exit_code ==
          dehn::cli::kExitPrecondition);
    CHECK(run_cli({"arf", "--l", "5"}).exit_code == dehn::cli::kExitPrecondition);
    CHECK(run_cli({"boundary", "--k", "1", "--n", "4"}).exit_code ==
          dehn::cli::kExitPrecondition);
    CHECK(run_cli({"chi-r", "--n", "7"}).exit_code == dehn::cli::kExitPrecondition);
    // Help is a success.
    CHECK(run_cli({"--help"}).exit_code == dehn::cli::kExitOk);
}

TEST_CASE("error envelope in json mode") {
    std::ostringstream out, err;
    const int code =
        dehn::cli::run({"kervaire", "--dim", "6", "--json"}, out, err);
    CHECK(code == dehn::cli::kExitPrecondition);
    const json j = json::parse(out.str());
    CHECK(j["status"] == "error");
    CHECK(j["command"] == "kervaire");
    CHECK_FALSE(j["error"].get<std::string>().empty());
}

TEST_CASE("text error goes to stderr") {
    const Run r = run_cli({"harris", "--n", "5"});
    CHECK(r.exit_code == dehn::cli::kExitPrecondition);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") != std::string::npos);
}
