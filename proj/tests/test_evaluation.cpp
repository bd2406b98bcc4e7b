#include <random>

#include "doctest.h"
#include "mdlseg/corpus.hpp"
#include "mdlseg/errors.hpp"
#include "mdlseg/evaluation.hpp"
#include "mdlseg/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace mdlseg;

TEST_CASE("identical segmentations score perfectly") {
    const Corpus corpus = fixtures::kitty();
    const Score s = boundaryScore(corpus.gold, corpus.gold);
    CHECK(s.hits == 10);
    CHECK(s.misses == 0);
    CHECK(s.falseAlarms == 0);
    CHECK(s.recall() == doctest::Approx(100.0));
    CHECK(s.accuracy() == doctest::Approx(100.0));
}

TEST_CASE("partial overlap") {
    Segmentation gold(1), hyp(1);
    gold.insert({0, 2});
    gold.insert({0, 4});
    hyp.insert({0, 2});
    hyp.insert({0, 3});
    const Score s = boundaryScore(hyp, gold);
    CHECK(s.hits == 1);
    CHECK(s.misses == 1);
    CHECK(s.falseAlarms == 1);
    CHECK(s.recall() == doctest::Approx(50.0));
    CHECK(s.accuracy() == doctest::Approx(50.0));
}

TEST_CASE("empty hypothesis has undefined accuracy") {
    Segmentation gold(1), hyp(1);
    gold.insert({0, 1});
    const Score s = boundaryScore(hyp, gold);
    CHECK(s.recall() == doctest::Approx(0.0));
    CHECK_FALSE(s.accuracy().has_value());
}

TEST_CASE("empty gold has undefined recall") {
    Segmentation gold(1), hyp(1);
    hyp.insert({0, 1});
    const Score s = boundaryScore(hyp, gold);
    CHECK_FALSE(s.recall().has_value());
    CHECK(s.accuracy() == doctest::Approx(0.0));
}

TEST_CASE("utterance count mismatch is a contract violation") {
    CHECK_THROWS_AS(boundaryScore(Segmentation(1), Segmentation(2)),
                    ContractViolation);
}

TEST_CASE("swapping hypothesis and gold swaps the error kinds") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 30; ++round) {
        const Corpus corpus = oracle::randomCorpus(rng);
        Segmentation a(corpus.utterances.size());
        Segmentation b(corpus.utterances.size());
        for (const Position p : corpus.candidatePositions()) {
            if (uniformBelow(rng, 2) == 0) a.insert(p);
            if (uniformBelow(rng, 2) == 0) b.insert(p);
        }
        const Score ab = boundaryScore(a, b);
        const Score ba = boundaryScore(b, a);
        CHECK(ab.hits == ba.hits);
        CHECK(ab.misses == ba.falseAlarms);
        CHECK(ab.falseAlarms == ba.misses);
    }
}

TEST_CASE("fully segmented hypothesis has full recall") {
    const Corpus corpus = fixtures::kitty();
    Segmentation full(corpus.utterances.size());
    for (const Position p : corpus.candidatePositions()) full.insert(p);
    const Score s = boundaryScore(full, corpus.gold);
    CHECK(s.recall() == doctest::Approx(100.0));
    CHECK(s.accuracy() == doctest::Approx(100.0 * 10.0 / 30.0));
}

TEST_CASE("type scores use exact matching") {
    Lexicon gold;
    gold.addToken(U"ðə");
    gold.addToken(U"kɪti");

    Lexicon contracted;
    contracted.addToken(U"ðəkɪti");
    const Score none = typeScore(contracted, gold);
    CHECK(none.hits == 0);
    CHECK(none.recall() == doctest::Approx(0.0));
    CHECK(none.accuracy() == doctest::Approx(0.0));

    Lexicon partial;
    partial.addToken(U"du");
    partial.addToken(U"ju");
    partial.addToken(U"siðə");
    Lexicon fourTypes;
    fourTypes.addToken(U"du");
    fourTypes.addToken(U"ju");
    fourTypes.addToken(U"si");
    fourTypes.addToken(U"ðə");
    const Score s = typeScore(partial, fourTypes);
    CHECK(s.hits == 2);
    CHECK(s.recall() == doctest::Approx(50.0));
    CHECK(s.accuracy() == doctest::Approx(100.0 * 2.0 / 3.0));
}

TEST_CASE("type score ignores frequencies") {
    Lexicon a, b;
    for (int i = 0; i < 5; ++i) a.addToken(U"du");
    b.addToken(U"du");
    const Score s = typeScore(a, b);
    CHECK(s.hits == 1);
    CHECK(s.recall() == doctest::Approx(100.0));
    CHECK(s.accuracy() == doctest::Approx(100.0));
}

TEST_CASE("identical lexicons score perfectly") {
    const Corpus corpus = fixtures::kitty();
    const Lexicon lex = buildLexicon(corpus, corpus.gold);
    const Score s = typeScore(lex, lex);
    CHECK(s.recall() == doctest::Approx(100.0));
    CHECK(s.accuracy() == doctest::Approx(100.0));
}
