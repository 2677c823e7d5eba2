#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hqc/cli.hpp"

using namespace hqc;
using namespace hqc::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hqc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("compute") {
    auto o = run_cli({"compute", "--r", "1", "--q", "1", "--genus", "0", "--mu", "2"});
    CHECK(o.code == kExitOk);
    auto recs = lines(o.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["m"] == 1);
    CHECK(recs[0]["value"] == "1/2");
    CHECK(recs[0]["mu"] == "2");

    o = run_cli({"compute", "--r", "1", "--q", "1", "--genus", "0", "--mu", "1"});
    CHECK(o.code == kExitOk);
    CHECK(lines(o.out)[0]["m"] == 0);
    CHECK(lines(o.out)[0]["value"] == "1");

    o = run_cli({"compute", "--r", "1", "--q", "2", "--genus", "0", "--mu", "1"});
    CHECK(o.code == kExitInvalid);
    CHECK(o.err.find("q divides |mu|") != std::string::npos);

    o = run_cli({"compute", "--r", "2", "--q", "1", "--genus", "0", "--mu", "2"});
    CHECK(o.code == kExitInvalid);
    CHECK(o.err.find("Riemann-Hurwitz") != std::string::npos);

    o = run_cli({"compute", "--mu", "2,x"});
    CHECK(o.code == kExitInvalid);
    o = run_cli({"compute"});
    CHECK(o.code == kExitInvalid);
    o = run_cli({"frobnicate"});
    CHECK(o.code == kExitInvalid);
    o = run_cli({"compute", "--mu", "1", "--out", "xml"});
    CHECK(o.code == kExitInvalid);
}

TEST_CASE("csv output quotes the partition") {
    auto o = run_cli({"compute", "--r", "1", "--q", "1", "--genus", "0", "--mu", "2,1", "--out", "csv"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.rfind("r,q,g,mu,m,value\n1,1,0,\"2,1\",", 0) == 0);
}

TEST_CASE("table") {
    auto o = run_cli({"table", "--r", "1", "--q", "1", "--genus", "0", "--max-degree", "2"});
    CHECK(o.code == kExitOk);
    auto recs = lines(o.out);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0]["mu"] == "1");
    CHECK(recs[1]["mu"] == "2");
    CHECK(recs[2]["mu"] == "1,1");

    o = run_cli({"table", "--r", "1", "--q", "3", "--max-degree", "2"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.empty());

    const auto table = table_records(2, 1, 2, 3, 1);
    for (const auto& rec : table) {
        CHECK((2 * rec.g - 2 + rec.mu.length() + rec.mu.size()) % 2 == 0);
        CHECK(rec.m == (2 * rec.g - 2 + rec.mu.length() + rec.mu.size()) / 2);
    }
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& a = table[i - 1];
        const auto& b = table[i];
        const bool ordered = a.mu.size() < b.mu.size() ||
                             (a.mu.size() == b.mu.size() && (a.g < b.g || (a.g == b.g && a.mu > b.mu)));
        CHECK(ordered);
    }
}

TEST_CASE("output is independent of the worker count") {
    const auto serial = run_cli({"table", "--r", "2", "--q", "2", "--genus", "2", "--max-degree", "6"});
    const auto parallel = run_cli({"table", "--r", "2", "--q", "2", "--genus", "2", "--max-degree", "6", "--jobs", "4"});
    CHECK(serial.code == kExitOk);
    CHECK(serial.out == parallel.out);
    CHECK(!serial.out.empty());
}

TEST_CASE("records round-trip") {
    for (const auto& rec : table_records(1, 2, 2, 6, 1)) {
        CHECK(record_from_json(json::parse(to_json(rec).dump())) == rec);
    }
    CHECK_THROWS_AS(record_from_json(json{{"r", 1}}), std::invalid_argument);
}

TEST_CASE("verify") {
    auto o = run_cli({"verify", "--check", "all", "--r", "1", "--q", "1", "--order", "30"});
    CHECK(o.code == kExitOk);
    const auto results = lines(o.out);
    CHECK(results.size() == 6);
    for (const auto& r : results) CHECK(r["passed"] == true);

    o = run_cli({"verify", "--check", "spectral", "--r", "3", "--q", "2", "--order", "40"});
    CHECK(o.code == kExitOk);
    o = run_cli({"verify", "oracle", "--max-degree", "5"});
    CHECK(o.code == kExitOk);
    CHECK(lines(o.out)[0]["check"] == "oracle");
    o = run_cli({"verify", "quantum", "--r", "2", "--q", "3", "--order", "30", "--out", "csv"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("quantum,2,3,pass") != std::string::npos);
    o = run_cli({"verify", "--check", "semiclassical", "--r", "2", "--q", "2", "--order", "40", "--raw"});
    CHECK(o.code == kExitOk);
    o = run_cli({"verify", "--check", "nonsense"});
    CHECK(o.code == kExitInvalid);
    o = run_cli({"verify", "--check", "spectral", "--q", "3", "--order", "2"});
    CHECK(o.code == kExitInvalid);
}
