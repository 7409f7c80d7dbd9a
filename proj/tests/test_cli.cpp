#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include <series_forge/cli.hpp>
#include <series_forge/serialize.hpp>

#include "generators.hpp"

using namespace series_forge;
using series_forge::cli::run_cli;
using Json = nlohmann::ordered_json;

namespace
{

struct CliRun
{
    int code;
    std::string out;
    std::string err;

    [[nodiscard]] Json json() const { return Json::parse(out); }
};

CliRun run(const std::vector<std::string> &args, std::map<std::string, std::string> env = {})
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err, [&](const std::string &name) -> std::optional<std::string> {
        const auto it = env.find(name);
        if (it == env.end()) {
            return std::nullopt;
        }
        return it->second;
    });
    return {code, out.str(), err.str()};
}

std::string temp_config(const std::string &body)
{
    const auto path = std::filesystem::temp_directory_path() / ("series_forge_cfg_" + std::to_string(::getpid()) + ".txt");
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST(CliExpand, ArcsinSquaredVerified)
{
    const CliRun r = run({"expand", "arcsin-pow", "--m", "2", "--order", "10", "--verify"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["verification"]["status"], "pass");
    EXPECT_TRUE(j["verification"]["first_mismatch"].is_null());
    const Json &c = j["series"]["coeffs"];
    EXPECT_EQ(j["series"]["ring"], "Q");
    EXPECT_EQ(j["series"]["order"], 10);
    EXPECT_EQ(c[0], "1");
    EXPECT_EQ(c[2], "1/3");
    EXPECT_EQ(c[4], "8/45");
    EXPECT_EQ(c[1], "0");
}

TEST(CliExpand, ArctanOddReciprocals)
{
    const CliRun r = run({"expand", "arctan-pow", "--n", "1", "--order", "8"});
    ASSERT_EQ(r.code, 0);
    const Json c = r.json()["coeffs"];
    const std::vector<std::string> expected{"0", "1", "0", "-1/3", "0", "1/5", "0", "-1/7", "0"};
    ASSERT_EQ(c.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(c[i], expected[i]) << i;
    }
}

TEST(CliExpand, UsageErrors)
{
    EXPECT_EQ(run({"expand", "arccot-pow"}).code, 2);
    EXPECT_EQ(run({"expand"}).code, 2);
    EXPECT_EQ(run({"expand", "gamma-arcsinh", "--m", "1"}).code, 2);
    EXPECT_EQ(run({"expand", "arcsin-pow", "--m", "0"}).code, 2);
    EXPECT_EQ(run({"expand", "arcsin-pow", "--m", "5", "--order", "3"}).code, 2);
    EXPECT_EQ(run({"expand", "arcsin-pow", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"expand", "arcsin-pow", "--m", "two"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliExpand, HelpExitsZero)
{
    const CliRun r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("expand"), std::string::npos);
}

TEST(CliExpand, CsvAndPlain)
{
    const CliRun csv = run({"expand", "arcsin-pow", "--m", "2", "--order", "4", "--format", "csv", "--verify"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "index,coefficient\n0,1\n1,0\n2,1/3\n3,0\n4,8/45\n");
    EXPECT_EQ(Json::parse(csv.err)["status"], "pass");

    const CliRun plain = run({"expand", "arcsin-pow", "--m", "2", "--order", "4", "--format", "plain", "--verify"});
    ASSERT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("t^2: 1/3\n"), std::string::npos);
    EXPECT_EQ(plain.out.find("t^1:"), std::string::npos);
    EXPECT_NE(plain.out.find("verification: pass"), std::string::npos);
}

TEST(CliExpand, ArccosUsesPiRing)
{
    const CliRun r = run({"expand", "arccos-pow", "--m", "1", "--order", "3"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_EQ(j["ring"], "Q[pi]");
    // arccos t = pi/2 - t - t^3/6 - ...
    EXPECT_EQ(j["coeffs"][0], Json::array({"0", "1/2"}));
    EXPECT_EQ(j["coeffs"][1], Json::array({"-1"}));
    EXPECT_EQ(j["coeffs"][2], Json::array());
    EXPECT_EQ(j["coeffs"][3], Json::array({"-1/6"}));
}

TEST(CliExpand, EveryFamilyVerifies)
{
    for (const auto &f : family_table) {
        const int p = std::max(1, f.min_param) + 1;
        const CliRun r = run({"expand", std::string(f.name), "--m", std::to_string(p), "--order", "12", "--verify"});
        EXPECT_EQ(r.code, 0) << f.name << r.err;
        EXPECT_EQ(r.json()["verification"]["status"], "pass") << f.name;
    }
}

TEST(CliConfigPrecedence, FileThenEnvThenFlag)
{
    const auto path = temp_config("# defaults\norder = 6\nformat=csv\n");
    // file only
    CliRun r = run({"--config", path, "expand", "arctanh-pow"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 16), "index,coefficien");
    EXPECT_NE(r.out.find("\n6,"), std::string::npos);
    EXPECT_EQ(r.out.find("\n7,"), std::string::npos);
    // env beats file
    r = run({"--config", path, "expand", "arctanh-pow"}, {{"SERIES_FORGE_ORDER", "8"}});
    EXPECT_NE(r.out.find("\n8,"), std::string::npos);
    EXPECT_EQ(r.out.find("\n9,"), std::string::npos);
    // flags beat both
    r = run({"--config", path, "expand", "arctanh-pow", "--order", "5", "--format", "json"},
            {{"SERIES_FORGE_ORDER", "8"}});
    EXPECT_EQ(r.json()["order"], 5);
    std::filesystem::remove(path);
}

TEST(CliConfigPrecedence, BadSettingsAreUsageErrors)
{
    EXPECT_EQ(run({"expand", "arcsin-pow"}, {{"SERIES_FORGE_ORDER", "3"}}).code, 2);
    EXPECT_EQ(run({"expand", "arcsin-pow"}, {{"SERIES_FORGE_ORDER", "many"}}).code, 2);
    EXPECT_EQ(run({"--config", "/nonexistent/series_forge.cfg", "expand", "arcsin-pow"}).code, 2);
    const auto path = temp_config("colour=blue\n");
    EXPECT_EQ(run({"--config", path, "expand", "arcsin-pow"}).code, 2);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"expand", "arcsin-pow"}, {{"SERIES_FORGE_ORDER", "4"}}).json()["order"], 4);
}

TEST(CliVerify, QVanishingPasses)
{
    const CliRun r = run({"verify", "--ids", "q-vanishing"});
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = r.json();
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 1U);
    EXPECT_EQ(j[0]["id"], "q-vanishing");
    EXPECT_EQ(j[0]["status"], "pass");
    EXPECT_TRUE(j[0]["first_counterexample"].is_null());
    EXPECT_GT(j[0]["checks"].get<long>(), 0);
}

TEST(CliVerify, ExpansionIdsAndBounds)
{
    const CliRun r = run({"verify", "--ids", "expansion:arcsin-pow,sprugnoli", "--bound", "sprugnoli_n=6", "--order", "8"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    const Json j = r.json();
    ASSERT_EQ(j.size(), 2U);
    EXPECT_EQ(j[0]["id"], "expansion:arcsin-pow");
    EXPECT_EQ(j[0]["checks"], 6);
    EXPECT_NE(j[0]["swept_range"].get<std::string>().find("order 8"), std::string::npos);
    EXPECT_EQ(j[1]["id"], "sprugnoli");
}

TEST(CliVerify, UnknownIdOrBoundIsUsageError)
{
    EXPECT_EQ(run({"verify", "--ids", "q-vanishing,nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "--ids", "expansion:arccot-pow"}).code, 2);
    EXPECT_EQ(run({"verify", "--ids", "q13", "--bound", "q_max"}).code, 2);
    EXPECT_EQ(run({"verify", "--ids", "q13", "--bound", "width=3"}).code, 2);
}

TEST(CliVerify, FailureExitsOne)
{
    const CliRun r = run({"verify", "--ids", "q2-square,q13", "--rhs-bias", "1/7"});
    EXPECT_EQ(r.code, 1);
    const Json j = r.json();
    for (const auto &rep : j) {
        EXPECT_EQ(rep["status"], "fail");
        ASSERT_TRUE(rep["first_counterexample"].is_object());
        EXPECT_NE(rep["first_counterexample"]["lhs"], rep["first_counterexample"]["rhs"]);
    }
}

TEST(CliBell, SmallestCase)
{
    const CliRun r = run({"bell", "--n", "1", "--k", "1"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_EQ(j["closed_form"], "1/3");
    EXPECT_EQ(j["definition"], "1/3");
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(run({"bell", "--n", "2", "--k", "1"}).json()["closed_form"], "9/5");
    EXPECT_EQ(run({"bell", "--n", "1", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"bell", "--n", "1"}).code, 2);
}

TEST(CliPi, ThirtyTerms)
{
    const CliRun r = run({"pi", "--m", "1", "--terms", "30"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_NEAR(j["value"].get<double>(), 1.0471975512, 1e-10);
    EXPECT_EQ(j["partial_sums"].size(), 30U);
    EXPECT_EQ(j["partial_sums"][0].get<double>(), 1.0);
    EXPECT_GE(j["est_error"].get<double>(), 0.0);
    EXPECT_EQ(run({"pi", "--m", "0"}).code, 2);
}

TEST(CliLogsine, AllMethodsAgree)
{
    const CliRun r = run({"logsine", "--j", "3", "--k", "1", "--theta", "pi/3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    ASSERT_EQ(j["values"].size(), 3U);
    for (const auto &v : j["values"]) {
        EXPECT_NEAR(v["value"].get<double>(), 0.26147309606666755425, 1e-8) << v["method"];
        EXPECT_TRUE(v.contains("est_error"));
    }
    EXPECT_EQ(j["values"][2]["method"], "series");
    EXPECT_FALSE(j["values"][2]["slow"].get<bool>());
}

TEST(CliLogsine, SingleMethodAndKZero)
{
    CliRun r = run({"logsine", "--j", "3", "--k", "0", "--theta", "pi", "--method", "quad"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["method"], "quad");
    EXPECT_NEAR(r.json()["value"].get<double>(), -2.5838563900249850146, 1e-10);
    // "all" silently skips the series route for k = 0
    r = run({"logsine", "--j", "2", "--k", "0", "--theta", "pi/3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["values"].size(), 2U);
    EXPECT_NEAR(r.json()["values"][0]["value"].get<double>(), 1.01494160640965362502, 1e-10);
    EXPECT_EQ(run({"logsine", "--j", "2", "--k", "0", "--theta", "1", "--method", "series"}).code, 2);
    EXPECT_EQ(run({"logsine", "--j", "2", "--k", "2", "--theta", "1"}).code, 2);
    EXPECT_EQ(run({"logsine", "--j", "2", "--k", "1", "--theta", "4"}).code, 2);
    EXPECT_EQ(run({"logsine", "--j", "2", "--k", "1", "--theta", "pie"}).code, 2);
    EXPECT_EQ(run({"logsine", "--j", "2", "--k", "1", "--theta", "1", "--method", "simpson"}).code, 2);
}

TEST(CliLogsine, SlowFlagNearPi)
{
    const CliRun r = run({"logsine", "--j", "3", "--k", "1", "--theta", "pi", "--method", "series"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.json()["slow"].get<bool>());
}

TEST(ThetaParsing, Forms)
{
    using cli::parse_theta;
    EXPECT_DOUBLE_EQ(parse_theta("pi"), std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_theta("pi/3"), std::numbers::pi / 3);
    EXPECT_DOUBLE_EQ(parse_theta("2*pi/3"), 2 * std::numbers::pi / 3);
    EXPECT_DOUBLE_EQ(parse_theta("2pi/3"), 2 * std::numbers::pi / 3);
    EXPECT_DOUBLE_EQ(parse_theta(" 0.5 "), 0.5);
    EXPECT_THROW(parse_theta("pi/0"), cli::UsageError);
    EXPECT_THROW(parse_theta("3x"), cli::UsageError);
}

TEST(Serialization, CliOutputRoundTrips)
{
    for (const auto &f : family_table) {
        const CliRun r = run({"expand", std::string(f.name), "--m", std::to_string(std::max(2, f.min_param)), "--order", "9"});
        ASSERT_EQ(r.code, 0);
        const Json parsed = Json::parse(r.out);
        EXPECT_EQ(to_json(series_from_json(parsed)).dump(2) + "\n", r.out) << f.name;
    }
}

TEST(Serialization, RandomSeriesRoundTrip)
{
    sf_test::Gen g(77);
    for (int i = 0; i < 200; ++i) {
        const int order = g.integer(0, 12);
        const AnySeries a = g.series(order);
        const std::string text = to_json(a).dump();
        EXPECT_EQ(to_json(series_from_json(Json::parse(text))).dump(), text);

        std::vector<PiPoly> pv;
        for (int k = 0; k <= order; ++k) {
            pv.push_back(g.pi_poly());
        }
        const AnySeries b = Series<PiPoly>(pv, order);
        const std::string tb = to_json(b).dump();
        const AnySeries back = series_from_json(Json::parse(tb));
        EXPECT_EQ(std::get<Series<PiPoly>>(back), std::get<Series<PiPoly>>(b));
        EXPECT_EQ(to_json(back).dump(), tb);
    }
}

TEST(Serialization, MalformedInputRejected)
{
    EXPECT_THROW(series_from_json(Json::parse(R"({"order":1,"ring":"Q","coeffs":["1"]})")), std::invalid_argument);
    EXPECT_THROW(series_from_json(Json::parse(R"({"order":0,"ring":"Z","coeffs":["1"]})")), std::invalid_argument);
    EXPECT_THROW(series_from_json(Json::parse(R"({"order":0,"ring":"Q","coeffs":[1]})")), std::invalid_argument);
    EXPECT_THROW(series_from_json(Json::parse(R"({"order":0,"ring":"Q","coeffs":["1/0"]})")), std::invalid_argument);
    EXPECT_THROW(series_from_json(Json::parse(R"([1,2])")), std::invalid_argument);
}
