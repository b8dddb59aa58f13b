#include <doctest.h>

#include <sstream>

#include "blockforge/report.hpp"

using namespace blockforge;

TEST_CASE("report for the 27-group block")
{
    ReportDocument doc = build_report(BlockParams::make(3, 2, 1, 1, 2));
    CHECK(doc.group_order == 27);
    CHECK(doc.class_count_formula_value == 11);
    CHECK(doc.k.iv == IntInterval::point(10));
    CHECK(doc.k.source == "paper_exact");
    CHECK(doc.k0.iv == IntInterval::point(9));
    CHECK(doc.k1.iv == IntInterval::point(1));
    CHECK(doc.l_B.iv == IntInterval::point(2));
    CHECK(doc.k_minus_l == 8);

    REQUIRE(doc.fusion.has_value());
    CHECK(doc.fusion->conjugacy_class_count == 11);
    CHECK(doc.fusion->fusion_class_count == 7);
    CHECK(doc.fusion->classes_meeting_y == 3);
    CHECK(doc.fusion->k_lower_value == 10);
    CHECK(doc.fusion->semidirect_class_count == 10);
    CHECK(doc.fusion->k_minus_l == 8);

    REQUIRE(doc.characters.has_value());
    CHECK(doc.characters->k_D == 11);
    CHECK(doc.characters->owc_weight_full == 9);
    CHECK(doc.characters->owc_weight_sub == 1);
    REQUIRE(doc.characters->galois.has_value());
    CHECK(doc.characters->galois->orbit_lengths == std::vector<long long>{2, 2, 2, 1, 1});

    CHECK(doc.consistency_violations.empty());
}

TEST_CASE("report tags sources")
{
    ReportDocument doc = build_report(BlockParams::make(5, 2, 1, 1, 4));
    CHECK(doc.k.source == "formula"); // no exact values at e = 4
    CHECK(doc.k0.iv.excluded == std::vector<long long>{23, 24});
    nlohmann::json j = report_to_json(doc);
    CHECK(j["invariants"]["k0"]["excluded"] == nlohmann::json::array({23, 24}));
    CHECK(j["fusion"]["semidirect_class_count"]["source"] == "brute_force");
    CHECK(j["bounds"]["k"]["source"] == "formula");
}

TEST_CASE("reports round-trip through JSON")
{
    for (auto [p, m, n, l, e] : std::vector<std::array<long long, 5>>{
             {3, 2, 1, 1, 2}, {5, 2, 1, 1, 4}, {3, 2, 2, 1, 1}, {3, 3, 1, 2, 2}}) {
        ReportDocument doc = build_report(BlockParams::make(p, m, n, l, e));
        nlohmann::json j = report_to_json(doc);
        ReportDocument back = report_from_json(j);
        CHECK(back == doc);
        CHECK(report_to_json(back) == j);
    }
    // over budget: enumerated sections are skipped but the record still
    // round-trips
    ReportDocument doc = build_report(BlockParams::make(3, 4, 3, 2, 2), 100);
    CHECK(!doc.fusion.has_value());
    CHECK(!doc.characters.has_value()); // n != 1
    ReportDocument back = report_from_json(report_to_json(doc));
    CHECK(back == doc);
}

TEST_CASE("report formats")
{
    ReportDocument doc = build_report(BlockParams::make(3, 2, 1, 1, 2));
    std::ostringstream text, csv, js;
    write_report(doc, Format::text, text);
    CHECK(text.str().find("k(B)") != std::string::npos);
    write_report(doc, Format::csv, csv);
    CHECK(csv.str().rfind("section,field,lo,hi,source,note", 0) == 0);
    write_report(doc, Format::json, js);
    CHECK(nlohmann::json::parse(js.str())["parameters"]["p"] == 3);

    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("scan grid enumeration")
{
    ScanOptions small;
    small.max_order = 27;
    auto grid = scan_grid(small);
    REQUIRE(grid.size() == 2); // (3,2,1,1) with e = 1, 2
    CHECK(grid[0].e() == 1);
    CHECK(grid[1].e() == 2);

    ScanOptions p3;
    p3.max_order = 729;
    p3.primes = {3};
    CHECK(scan_grid(p3).size() == 26); // 13 tuples x e in {1, 2}

    ScanOptions none;
    none.primes = {};
    CHECK(scan_grid(none).empty());

    ScanOptions bad;
    bad.primes = {4};
    CHECK_THROWS_AS(scan_grid(bad), std::invalid_argument);
}

TEST_CASE("scan emits one JSON record per tuple")
{
    ScanOptions opts;
    opts.max_order = 243;
    opts.primes = {3};
    std::ostringstream os;
    run_scan(opts, Format::json, os);
    std::istringstream is(os.str());
    std::string line;
    size_t records = 0;
    while (std::getline(is, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["consistency_violations"].empty());
        ++records;
    }
    CHECK(records == scan_grid(opts).size());
}

TEST_CASE("scan rejects a max order beyond the budget")
{
    ScanOptions opts;
    opts.max_order = 100;
    opts.budget = 50;
    std::ostringstream os;
    CHECK_THROWS_AS(run_scan(opts, Format::text, os), budget_error);
}
