#include "qskein/anchors.hpp"
#include "qskein/suite.hpp"

#include <set>

#include "doctest.h"

using namespace qs;

TEST_CASE("anchors") {
    CHECK(anchor("pbw-basis") == "pbw-basis");
    CHECK_THROWS_AS(anchor("nowhere"), std::out_of_range);
    std::set<std::string> keys;
    for (const auto& [k, d] : anchor_table()) {
        CHECK(keys.insert(k).second);
        CHECK_FALSE(d.empty());
    }
}

TEST_CASE("presentation records") {
    auto dq = build_dq(Flavor::GL);
    auto r = presentation_check(dq, 3);
    CHECK(r.status == Status::Pass);
    CHECK(r.anchor == "dq-cross-relations");
    CHECK(r.data["unresolved_overlaps"] == 0);
    auto p = pbw_check(dq, 3, {1, 8, 36, 120});
    CHECK(p.status == Status::Pass);
    CHECK(pbw_check(dq, 3, {1, 8, 36, 121}).status == Status::Fail);
    for (const char* name : {"oq", "dq", "dq_prime"})
        for (Flavor f : {Flavor::GL, Flavor::SL}) CHECK(det_check(name, f).status == Status::Pass);
}

TEST_CASE("failures are reported, not thrown") {
    auto r = hilbert_check({0, 2, Flavor::GL, TransferKind::Nonseparating, 0, 1}, 2, {1});
    CHECK(r.status == Status::Fail);
    CHECK(r.data.contains("error"));
}

TEST_CASE("printed vs corrected judgement") {
    auto dq = build_dq(Flavor::GL);
    CHECK(ore_check(dq, OreId::S4, 1, 2, false).status == Status::Fail);
    CHECK(ore_check(dq, OreId::S4, 1, 2, true).status == Status::Pass);
    CHECK(ore_check(dq, OreId::S3, 1, 2, false).status == Status::Pass);
    CHECK(power_check(dq, 2, false).status == Status::Fail);
    CHECK(power_check(dq, 2, true).status == Status::Pass);
    CHECK(twisted_rows_check(false).status == Status::Fail);
    CHECK(twisted_rows_check(true).status == Status::Pass);
    CHECK(koszul_check(Flavor::GL, KoszulTable::Printed).status == Status::Fail);
    CHECK(koszul_check(Flavor::GL, KoszulTable::Corrected).status == Status::Pass);
}

TEST_CASE("json without timing is reproducible") {
    Criterion c;
    c.id = 1;
    c.title = "t";
    c.records.push_back(witness_check(build_dq(Flavor::GL), OreId::S2));
    c.records.push_back(domain_check());
    c.seconds = 1.5;
    auto j = to_json(c, false);
    CHECK_FALSE(j.contains("seconds"));
    CHECK_FALSE(j["records"][0].contains("seconds"));
    CHECK(to_json(c, true).contains("seconds"));
    Criterion d = c;
    d.records[0] = witness_check(build_dq(Flavor::GL), OreId::S2);
    d.records[1] = domain_check();
    d.seconds = 9;
    CHECK(to_json(d, false).dump() == j.dump());
    CHECK(c.records[0].status == Status::Pass);
    CHECK(c.records[1].status == Status::Pass);
}

TEST_CASE("levels") {
    CHECK(parse_level("quick") == Level::Quick);
    CHECK_THROWS(parse_level("medium"));
    CHECK_THROWS(run_criterion(11, Level::Quick));
}
