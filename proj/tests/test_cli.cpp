#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace hyperpi;
using cli::RunConfig;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

TEST_CASE("parse verify with a fixed point", "[cli]") {
    const auto config =
        cli::parse_args({"verify", "--identity", "cor1uno1", "--param", "b=2"});
    REQUIRE(config.mode == RunConfig::Mode::verify);
    REQUIRE(config.identity == "cor1uno1");
    REQUIRE(config.params.size() == 1);
    REQUIRE(config.params[0].name == "b");
    REQUIRE(config.params[0].start == 2.0);
    REQUIRE(config.params[0].count == 1);
    REQUIRE(config.tol == 1e-11);
    REQUIRE(config.format == RunConfig::Format::pretty);
}

TEST_CASE("parse sweep with ranges", "[cli]") {
    const auto config = cli::parse_args({"sweep", "--identity", "tesiA",
                                         "--param", "a=1.1:2:4", "--param",
                                         "b=2.5:4:3", "--format", "csv"});
    REQUIRE(config.mode == RunConfig::Mode::sweep);
    REQUIRE(config.params.size() == 2);
    REQUIRE(config.params[0].count == 4);
    REQUIRE(config.params[1].count == 3);
    REQUIRE(config.format == RunConfig::Format::csv);

    std::ostringstream out;
    REQUIRE(cli::run(config, out) == 0);
    std::stringstream lines(out.str());
    std::string line;
    int rows = -1;  // header
    while (std::getline(lines, line)) ++rows;
    REQUIRE(rows == 12);  // 4x3 grid
}

TEST_CASE("parse list", "[cli]") {
    const auto config = cli::parse_args({"list"});
    REQUIRE(config.mode == RunConfig::Mode::list);
    std::ostringstream out;
    REQUIRE(cli::run(config, out) == 0);
    REQUIRE(out.str().find("tesiA") != std::string::npos);
    REQUIRE(out.str().find("th46pi") != std::string::npos);
}

TEST_CASE("usage errors", "[cli]") {
    REQUIRE_THROWS_AS(cli::parse_args({"verify", "--bogus"}), UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"verify", "--identity", "nosuch",
                                       "--param", "b=2"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"verify"}), UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"sweep", "--identity", "tesiA",
                                       "--param", "b=5:2:3"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"sweep", "--identity", "tesiA",
                                       "--param", "b=1:2:0"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"sweep", "--identity", "tesiA",
                                       "--param", "q=2"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"verify", "--identity", "tesiA",
                                       "--param", "b=x"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"verify", "--identity", "tesiA",
                                       "--tol", "0.01"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"sweep", "--identity", "all"}),
                      UsageError);
    REQUIRE_THROWS_AS(cli::parse_args({"frobnicate"}), UsageError);
}

TEST_CASE("verify emits one ok row and exits zero", "[cli]") {
    const auto config = cli::parse_args({"verify", "--identity", "cor1uno1",
                                         "--param", "b=2", "--format", "csv"});
    std::ostringstream out;
    REQUIRE(cli::run(config, out) == 0);
    std::stringstream lines(out.str());
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    const auto fields = split_csv_line(row);
    REQUIRE(fields[0] == "cor1uno1");
    REQUIRE(fields[1].empty());  // one-parameter identity
    REQUIRE(std::strtod(fields[4].c_str(), nullptr) < 1e-8);
    REQUIRE(fields[5] == "ok");
}

TEST_CASE("domain exclusions are not failures", "[cli]") {
    const auto config =
        cli::parse_args({"verify", "--identity", "ipcomlunotesi", "--param",
                         "a=0.7", "--param", "b=1.0", "--format", "csv"});
    std::ostringstream out;
    REQUIRE(cli::run(config, out) == 0);
    REQUIRE(out.str().find("out_of_domain") != std::string::npos);
}

TEST_CASE("byte-stable output across runs", "[cli]") {
    // 9-point default grid goes through the parallel sweep path.
    const auto config = cli::parse_args(
        {"verify", "--identity", "tesiA", "--default-grid", "--format", "csv"});
    std::ostringstream first, second;
    cli::run(config, first);
    cli::run(config, second);
    REQUIRE(first.str() == second.str());
    REQUIRE_FALSE(first.str().empty());
}

TEST_CASE("csv numeric fields round-trip at 17 significant digits", "[cli]") {
    const auto config = cli::parse_args({"sweep", "--identity", "koro3",
                                         "--param", "b=1.3:4:5", "--format",
                                         "csv"});
    std::ostringstream out;
    cli::run(config, out);
    std::stringstream lines(out.str());
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto fields = split_csv_line(line);
        for (std::size_t i : {2u, 3u, 4u}) {
            REQUIRE(i < fields.size());
            if (fields[i].empty()) continue;
            const double parsed = std::strtod(fields[i].c_str(), nullptr);
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", parsed);
            REQUIRE(fields[i] == buf);
        }
        ++rows;
    }
    REQUIRE(rows == 5);
}

TEST_CASE("json schema carries records and a summary", "[cli]") {
    const auto config = cli::parse_args({"verify", "--identity", "koro3",
                                         "--param", "b=2", "--format", "json"});
    std::ostringstream out;
    const int code = cli::run(config, out);
    const auto root = nlohmann::json::parse(out.str());
    REQUIRE(root.contains("records"));
    REQUIRE(root.contains("summary"));
    REQUIRE(root["records"].size() == 1);
    REQUIRE(root["records"][0]["flag"] == "ok");
    REQUIRE(root["summary"]["total"] == 1);
    REQUIRE(root["summary"]["ok"] == 1);
    REQUIRE(root["summary"]["exit"] == code);
}

TEST_CASE("--out writes the table to a file", "[cli]") {
    const std::string path = "cli_out_test.csv";
    std::remove(path.c_str());
    const char* argv[] = {"hyperpi", "verify",   "--identity", "koro3",
                          "--param", "b=2",      "--format",   "csv",
                          "--out",   path.c_str()};
    REQUIRE(cli::main_impl(10, const_cast<char**>(argv)) == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    REQUIRE(std::getline(in, header));
    REQUIRE(header.rfind("identity,", 0) == 0);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with status 2", "[cli]") {
    const char* argv[] = {"hyperpi", "verify", "--bogus"};
    REQUIRE(cli::main_impl(3, const_cast<char**>(argv)) == 2);
}

TEST_CASE("verify all covers the whole catalog", "[cli]") {
    const auto config =
        cli::parse_args({"verify", "--identity", "all", "--default-grid",
                         "--format", "json"});
    std::ostringstream out;
    REQUIRE(cli::run(config, out) == 0);
    const auto root = nlohmann::json::parse(out.str());
    REQUIRE(root["summary"]["total"] == 160);
    REQUIRE(root["summary"]["ok"] == 160);
}
