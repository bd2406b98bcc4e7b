#include <cmath>
#include <random>

#include "doctest.h"
#include "mdlseg/corpus.hpp"
#include "mdlseg/errors.hpp"
#include "mdlseg/mdl.hpp"
#include "mdlseg/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace mdlseg;

TEST_CASE("integer code length anchor values") {
    CHECK(intCodeLen(0) == doctest::Approx(2.669925001442312).epsilon(1e-12));
    // The worked differences quoted for ~7-bit integers.
    CHECK(intCodeLen(127) - intCodeLen(126) ==
          doctest::Approx(0.0156).epsilon(5e-4 / 0.0156));
    CHECK(intCodeLen(128) - intCodeLen(127) ==
          doctest::Approx(0.0155).epsilon(5e-4 / 0.0155));
    CHECK_THROWS_AS(intCodeLen(-1), ContractViolation);
}

TEST_CASE("integer code length is strictly increasing") {
    double prev = intCodeLen(0);
    for (std::int64_t x = 1; x <= 2000; ++x) {
        const double cur = intCodeLen(x);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(intCodeLen(1000000) > intCodeLen(999999));
}

TEST_CASE("code word length") {
    CHECK(codeWordLen(3, 13) == doctest::Approx(2.1154772174199357).epsilon(1e-12));
    CHECK(codeWordLen(13, 13) == 0.0);
    CHECK(codeWordLen(1, 2) == doctest::Approx(1.0));
    CHECK_THROWS_AS(codeWordLen(0, 5), ContractViolation);
    CHECK_THROWS_AS(codeWordLen(6, 5), ContractViolation);
}

// Components of the kitty gold segmentation, frozen from an independent
// computation of the formulas.
TEST_CASE("kitty segmentation 1 description length") {
    const Corpus corpus = fixtures::kitty();
    const DLReport report = totalDL(corpus, corpus.gold);
    CHECK(report.wordInventoryBits ==
          doctest::Approx(76.69650227699015).epsilon(1e-9));
    CHECK(report.codeInventoryBits ==
          doctest::Approx(30.246590308114797).epsilon(1e-9));
    CHECK(report.sampleBits ==
          doctest::Approx(42.182818415694015).epsilon(1e-9));
    CHECK(report.totalBits ==
          doctest::Approx(149.12591100079896).epsilon(1e-9));
}

TEST_CASE("kitty segmentation 2 is longer") {
    const Corpus corpus = fixtures::kitty();
    const DLReport seg2 = totalDL(corpus, fixtures::kittySeg2());
    CHECK(seg2.wordInventoryBits ==
          doctest::Approx(143.96291915020248).epsilon(1e-9));
    CHECK(seg2.codeInventoryBits ==
          doctest::Approx(68.94533390472698).epsilon(1e-9));
    CHECK(seg2.sampleBits ==
          doctest::Approx(55.692593420020955).epsilon(1e-9));
    CHECK(seg2.totalBits == doctest::Approx(268.6008464749504).epsilon(1e-9));
    CHECK(totalDL(corpus, corpus.gold).totalBits < seg2.totalBits);
}

TEST_CASE("kitty unsegmented description length") {
    const Corpus corpus = fixtures::kitty();
    const DLReport report = totalDL(corpus, Segmentation(3));
    CHECK(report.totalBits ==
          doctest::Approx(160.25981613976373).epsilon(1e-9));
}

TEST_CASE("degenerate single-symbol corpus") {
    const auto inv = PhonemeInventory::parse("a V\n");
    const Corpus corpus = parseCorpus("a\n", inv);
    const DLReport report = totalDL(corpus, Segmentation(1));
    CHECK(report.totalBits ==
          doctest::Approx(oracle::scratchDL(corpus, Segmentation(1))));
}

TEST_CASE("totalDL matches the scratch oracle on random corpora") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 60; ++round) {
        const Corpus corpus = oracle::randomCorpus(rng);
        Segmentation seg(corpus.utterances.size());
        for (const Position p : corpus.candidatePositions())
            if (uniformBelow(rng, 3) == 0) seg.insert(p);
        CHECK(totalDL(corpus, seg).totalBits ==
              doctest::Approx(oracle::scratchDL(corpus, seg)).epsilon(1e-10));
    }
}

TEST_CASE("insertion delta equals from-scratch evaluation") {
    std::mt19937_64 rng(202);
    for (int round = 0; round < 25; ++round) {
        const Corpus corpus = oracle::randomCorpus(rng);
        // A partially segmented starting hypothesis.
        Segmentation seg(corpus.utterances.size());
        std::vector<Position> open;
        for (const Position p : corpus.candidatePositions()) {
            if (uniformBelow(rng, 4) == 0)
                seg.insert(p);
            else
                open.push_back(p);
        }
        const Hypothesis hyp(corpus, seg);

        for (std::size_t i = 0; i < open.size(); ++i) {
            Segmentation plusOne = seg;
            plusOne.insert(open[i]);
            CHECK(deltaInsertionDL(hyp, {&open[i], 1}) ==
                  doctest::Approx(oracle::scratchDL(corpus, plusOne))
                      .epsilon(1e-9));
            for (std::size_t j = i + 1; j < open.size(); ++j) {
                Segmentation plusTwo = plusOne;
                plusTwo.insert(open[j]);
                const Position pair[2] = {open[i], open[j]};
                CHECK(deltaInsertionDL(hyp, pair) ==
                      doctest::Approx(oracle::scratchDL(corpus, plusTwo))
                          .epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("delta evaluation leaves the hypothesis untouched") {
    const Corpus corpus = fixtures::kitty();
    const Hypothesis hyp(corpus);
    const double before = describe(hyp.lexicon(), corpus.phonemeCount).totalBits;
    const Position p{0, 6};
    deltaInsertionDL(hyp, {&p, 1});
    CHECK(describe(hyp.lexicon(), corpus.phonemeCount).totalBits == before);
    CHECK(hyp.segmentation().pointCount() == 0);
}

// Splitting one token of w into two tokens of an existing word a lowers
// the per-token sample entropy whenever f(a) >= 2 f(w). (Without that
// margin the claim is false: small f(a) against large f(w) raises it.)
TEST_CASE("entropy per token drops when a split reuses a frequent word") {
    const auto perToken = [](const std::vector<long long>& freqs) {
        double m = 0, sumFlogF = 0;
        for (const long long f : freqs) {
            m += double(f);
            if (f > 1) sumFlogF += double(f) * std::log2(double(f));
        }
        return std::log2(m) - sumFlogF / m;
    };
    const std::vector<std::vector<long long>> rests = {
        {}, {1}, {5}, {1, 1, 2}, {10, 3}, {2, 2, 2, 2}, {20}};
    for (const auto& rest : rests) {
        for (long long fa = 2; fa <= 24; ++fa) {
            for (long long fw = 1; 2 * fw <= fa; ++fw) {
                std::vector<long long> before = {fa, fw};
                before.insert(before.end(), rest.begin(), rest.end());
                std::vector<long long> after = {fa + 2};
                if (fw > 1) after.push_back(fw - 1);
                after.insert(after.end(), rest.begin(), rest.end());
                CHECK(perToken(after) <= perToken(before) + 1e-12);
            }
        }
    }
}

TEST_CASE("describe components sum to the total") {
    const Corpus corpus = fixtures::kitty();
    const DLReport r = totalDL(corpus, corpus.gold);
    CHECK(r.totalBits ==
          doctest::Approx(r.wordInventoryBits + r.codeInventoryBits +
                          r.sampleBits));
}
