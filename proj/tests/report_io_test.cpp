#include <doctest.h>

#include "artin/report_io.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

using namespace artin;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

OutputRecord make_row(std::uint64_t p, std::uint64_t f) {
    OutputRecord rec;
    rec.kind = "rows";
    rec.add("p", p);
    rec.add("f", f);
    return rec;
}

}  // namespace

TEST_CASE("format_double emits shortest round-trip forms") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-3.0) == "-3");
    CHECK(format_double(0.0) == "0");
    for (double v : {1.0 / 3.0, 2.7047619047619049, 1e-8, 12.387692602220875,
                     -0.14285714285714285, 1e300, std::numeric_limits<double>::denorm_min()}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("format_double rejects non-finite values") {
    CHECK_THROWS_AS(format_double(std::numeric_limits<double>::quiet_NaN()), std::logic_error);
    CHECK_THROWS_AS(format_double(std::numeric_limits<double>::infinity()), std::logic_error);
    CHECK_THROWS_AS(format_double(-std::numeric_limits<double>::infinity()), std::logic_error);
}

TEST_CASE("format_field covers all variants") {
    CHECK(format_field(FieldValue(true)) == "true");
    CHECK(format_field(FieldValue(false)) == "false");
    CHECK(format_field(FieldValue(std::int64_t(-5))) == "-5");
    CHECK(format_field(FieldValue(std::uint64_t(18446744073709551615ull))) ==
          "18446744073709551615");
    CHECK(format_field(FieldValue(std::string("chain"))) == "chain");
    CHECK(format_field(FieldValue(0.25)) == "0.25");
}

TEST_CASE("write_csv layout") {
    std::vector<OutputRecord> recs = {make_row(3, 2), make_row(5, 4)};
    std::ostringstream os;
    write_csv(os, recs);
    CHECK(os.str() == "schema,p,f\n1,3,2\n1,5,4\n");

    std::ostringstream empty;
    write_csv(empty, std::vector<OutputRecord>{});
    CHECK(empty.str().empty());
}

TEST_CASE("write_csv rejects mixed layouts") {
    OutputRecord other;
    other.kind = "agg";
    other.add("u", std::uint64_t(1));
    std::vector<OutputRecord> mixed = {make_row(3, 2), other};
    std::ostringstream os;
    CHECK_THROWS_AS(write_csv(os, mixed), std::logic_error);

    OutputRecord renamed;
    renamed.kind = "rows";
    renamed.add("p", std::uint64_t(3));
    renamed.add("g", std::uint64_t(2));
    std::vector<OutputRecord> bad_names = {make_row(3, 2), renamed};
    CHECK_THROWS_AS(write_csv(os, bad_names), std::logic_error);
}

TEST_CASE("render_json groups by kind in first-appearance order") {
    OutputRecord agg;
    agg.kind = "agg";
    agg.add("u", std::uint64_t(4));
    agg.add("d_exact", std::int64_t(4));
    agg.add("ok", true);
    agg.add("ratio", 0.5);
    std::vector<OutputRecord> recs = {make_row(3, 2), agg, make_row(5, 4)};

    const std::string body = render_json(recs);
    const auto doc = nlohmann::json::parse(body);
    CHECK(doc.at("schema") == 1);
    REQUIRE(doc.at("rows").size() == 2);
    CHECK(doc.at("rows")[0].at("p") == 3);
    CHECK(doc.at("rows")[1].at("f") == 4);
    REQUIRE(doc.at("agg").size() == 1);
    CHECK(doc.at("agg")[0].at("d_exact") == 4);
    CHECK(doc.at("agg")[0].at("ok") == true);
    CHECK(doc.at("agg")[0].at("ratio") == 0.5);

    // ordered emission: schema first, then rows, then agg
    CHECK(body.find("\"schema\"") < body.find("\"rows\""));
    CHECK(body.find("\"rows\"") < body.find("\"agg\""));

    OutputRecord nan_rec;
    nan_rec.kind = "rows";
    nan_rec.add("v", std::numeric_limits<double>::quiet_NaN());
    std::vector<OutputRecord> bad = {nan_rec};
    CHECK_THROWS_AS(render_json(bad), std::logic_error);
}

TEST_CASE("write_report fans CSV out to one file per kind") {
    char tmpl[] = "/tmp/report_io_test_XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    const std::string dir = tmpl;

    OutputRecord agg;
    agg.kind = "agg";
    agg.add("u", std::uint64_t(4));
    std::vector<OutputRecord> recs = {make_row(3, 2), agg};

    write_report(recs, OutputFormat::Csv, dir + "/out.csv");
    CHECK(slurp(dir + "/out_rows.csv") == "schema,p,f\n1,3,2\n");
    CHECK(slurp(dir + "/out_agg.csv") == "schema,u\n1,4\n");

    // base without .csv works the same way
    write_report(recs, OutputFormat::Csv, dir + "/plain");
    CHECK(slurp(dir + "/plain_rows.csv") == "schema,p,f\n1,3,2\n");

    write_report(recs, OutputFormat::Json, dir + "/out.json");
    const auto doc = nlohmann::json::parse(slurp(dir + "/out.json"));
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("rows").size() == 1);
    CHECK(doc.at("agg").size() == 1);

    std::remove((dir + "/out_rows.csv").c_str());
    std::remove((dir + "/out_agg.csv").c_str());
    std::remove((dir + "/plain_rows.csv").c_str());
    std::remove((dir + "/plain_agg.csv").c_str());
    std::remove((dir + "/out.json").c_str());
    rmdir(dir.c_str());
}

TEST_CASE("write_report raises io_error on unwritable paths") {
    std::vector<OutputRecord> recs = {make_row(3, 2)};
    CHECK_THROWS_AS(write_report(recs, OutputFormat::Json, "/nonexistent_dir_xyz/out.json"),
                    io_error);
    CHECK_THROWS_AS(write_report(recs, OutputFormat::Csv, "/nonexistent_dir_xyz/out.csv"),
                    io_error);
}
