#include <string>

#include "doctest.h"
#include "mdlseg/report.hpp"
#include "support/fixtures.hpp"

using namespace mdlseg;

TEST_CASE("score json keeps undefined ratios as null") {
    Score s;
    s.hits = 0;
    s.misses = 4;
    s.falseAlarms = 0;
    const ordered_json j = scoreJson(s);
    CHECK(j["hits"] == 0);
    CHECK(j["recall"] == 0.0);
    CHECK(j["accuracy"].is_null());
}

TEST_CASE("dl json carries all four components") {
    DLReport r{1.5, 2.5, 3.0, 7.0};
    const ordered_json j = dlJson(r);
    CHECK(j["wordInventoryBits"] == 1.5);
    CHECK(j["totalBits"] == 7.0);
    const auto keys = j.items().begin().key();
    CHECK(keys == "wordInventoryBits"); // insertion order preserved
}

TEST_CASE("corpus json") {
    const ordered_json j = corpusJson(fixtures::kitty());
    CHECK(j["utterances"] == 3);
    CHECK(j["phonemes"] == 12);
    CHECK(j["candidatePoints"] == 30);
    CHECK(j["goldPoints"] == 10);
}

TEST_CASE("trials json nulls out undefined means") {
    TrialStats stats;
    stats.trials = 3;
    stats.k = 0;
    stats.recallDefined = 0;
    stats.accuracyDefined = 2;
    stats.meanAccuracy = 50.0;
    const ordered_json j = trialsJson(stats);
    CHECK(j["meanRecall"].is_null());
    CHECK(j["meanAccuracy"] == 50.0);
    CHECK(j["recallDefined"] == 0);
}

TEST_CASE("table rendering flattens and rounds") {
    const ordered_json j{{"outer", {{"value", 33.3333333}, {"count", 7}}},
                         {"name", "run"},
                         {"missing", nullptr}};
    const std::string table = renderTable(j);
    CHECK(table.find("outer.value") != std::string::npos);
    CHECK(table.find("33.3\n") != std::string::npos);
    CHECK(table.find("33.33") == std::string::npos); // one decimal place
    CHECK(table.find("run") != std::string::npos);
    CHECK(table.find("undefined") != std::string::npos);
}

TEST_CASE("csv rendering keeps full precision and quotes as needed") {
    const ordered_json j{{"a", 33.3333333}, {"b", "x,y"}, {"arr", {1, 2}}};
    const std::string csv = renderCsv(j);
    CHECK(csv.rfind("key,value\n", 0) == 0);
    CHECK(csv.find("33.3333333") != std::string::npos);
    CHECK(csv.find("\"x,y\"") != std::string::npos);
    CHECK(csv.find("arr[0],1") != std::string::npos);
    CHECK(csv.find("arr[1],2") != std::string::npos);
}

TEST_CASE("identical reports serialize identically") {
    const Corpus corpus = fixtures::kitty();
    const ordered_json a = corpusJson(corpus);
    const ordered_json b = corpusJson(corpus);
    CHECK(a.dump(2) == b.dump(2));
}
