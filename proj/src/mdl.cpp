#include "mdlseg/mdl.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mdlseg/corpus.hpp"
#include "mdlseg/errors.hpp"

namespace mdlseg {

namespace {

double xlog2(std::int64_t f) { return f > 1 ? std::log2(double(f)) : 0.0; }
double flog2(std::int64_t f) {
    return f > 1 ? double(f) * std::log2(double(f)) : 0.0;
}

void requireNonDegenerate(const LexiconAggregates& agg) {
    if (agg.typeCount < 1 || agg.tokenCount < 1 || agg.maxLength < 1)
        throw ContractViolation("description length needs n >= 1, m >= 1");
}

} // namespace

double intCodeLen(std::int64_t x) {
    if (x < 0) throw ContractViolation("intCodeLen requires x >= 0");
    const double xd = double(x);
    return 1.5 + std::log2(xd + 1.0) + 2.0 * std::log2(std::log2(xd + 2.0) + 0.5);
}

double codeWordLen(std::int64_t f, std::int64_t m) {
    if (f < 1 || f > m)
        throw ContractViolation("codeWordLen requires 1 <= f <= m");
    return std::log2(double(m) / double(f));
}

LexiconAggregates aggregatesOf(const Lexicon& lex) {
    return {static_cast<std::int64_t>(lex.typeCount()),
            lex.tokenCount(),
            lex.sumLength(),
            static_cast<std::int64_t>(lex.maxLength()),
            lex.sumLogF(),
            lex.sumFlogF()};
}

double wordInventoryLen(const LexiconAggregates& agg, std::size_t p) {
    requireNonDegenerate(agg);
    if (p < 1) throw ContractViolation("wordInventoryLen requires p >= 1");
    return intCodeLen(agg.typeCount) +
           std::log2(double(p)) * double(agg.sumLength) + 1.0 +
           double(agg.typeCount + 1) * std::log2(double(agg.maxLength));
}

double wordInventoryLen(const Lexicon& lex, std::size_t p) {
    return wordInventoryLen(aggregatesOf(lex), p);
}

double codeInventoryLen(const LexiconAggregates& agg) {
    requireNonDegenerate(agg);
    const double log2m = std::log2(double(agg.tokenCount));
    const double sum = double(agg.typeCount) * log2m - agg.sumLogF;
    const double fieldWidth = std::log2(std::max(log2m, 1.0));
    return sum + 1.0 + double(agg.typeCount + 1) * fieldWidth;
}

double codeInventoryLen(const Lexicon& lex) {
    return codeInventoryLen(aggregatesOf(lex));
}

double sampleCodeLen(const LexiconAggregates& agg) {
    requireNonDegenerate(agg);
    const double m = double(agg.tokenCount);
    return intCodeLen(agg.tokenCount) + m * std::log2(m) - agg.sumFlogF;
}

double sampleCodeLen(const Lexicon& lex) {
    return sampleCodeLen(aggregatesOf(lex));
}

DLReport describe(const LexiconAggregates& agg, std::size_t p) {
    DLReport report;
    report.wordInventoryBits = wordInventoryLen(agg, p);
    report.codeInventoryBits = codeInventoryLen(agg);
    report.sampleBits = sampleCodeLen(agg);
    report.totalBits = report.wordInventoryBits + report.codeInventoryBits +
                       report.sampleBits;
    return report;
}

DLReport describe(const Lexicon& lex, std::size_t p) {
    return describe(aggregatesOf(lex), p);
}

DLReport totalDL(const Corpus& corpus, const Segmentation& seg) {
    return describe(buildLexicon(corpus, seg), corpus.phonemeCount);
}

double deltaInsertionDL(const Hypothesis& hyp, std::span<const Position> points) {
    if (points.empty() || points.size() > 2)
        throw ContractViolation("deltaInsertionDL takes one or two points");

    // Frequency deltas of the affected word types, merged by content.
    struct TypeDelta {
        std::u32string_view word;
        int df;
    };
    std::array<TypeDelta, 8> deltas;
    std::size_t deltaCount = 0;
    auto accumulate = [&](std::u32string_view word, int df) {
        for (std::size_t i = 0; i < deltaCount; ++i) {
            if (deltas[i].word == word) {
                deltas[i].df += df;
                return;
            }
        }
        deltas[deltaCount++] = {word, df};
    };

    const std::u32string_view utt0 = hyp.corpus().utterances[points[0].utterance];
    const WordSpan word0 = hyp.wordAt(points[0]);
    if (points.size() == 2 && points[0].utterance == points[1].utterance &&
        word0 == hyp.wordAt(points[1])) {
        std::uint32_t a = points[0].offset, b = points[1].offset;
        if (a > b) std::swap(a, b);
        if (a == b) throw ContractViolation("duplicate point in candidate");
        accumulate(utt0.substr(word0.begin, word0.end - word0.begin), -1);
        accumulate(utt0.substr(word0.begin, a - word0.begin), +1);
        accumulate(utt0.substr(a, b - a), +1);
        accumulate(utt0.substr(b, word0.end - b), +1);
    } else {
        for (Position p : points) {
            const std::u32string_view utt = hyp.corpus().utterances[p.utterance];
            const WordSpan w = hyp.wordAt(p);
            accumulate(utt.substr(w.begin, w.end - w.begin), -1);
            accumulate(utt.substr(w.begin, p.offset - w.begin), +1);
            accumulate(utt.substr(p.offset, w.end - p.offset), +1);
        }
    }

    const Lexicon& lex = hyp.lexicon();
    LexiconAggregates agg = aggregatesOf(lex);
    agg.tokenCount += static_cast<std::int64_t>(points.size());

    // Sparse adjustments to the type-length multiset, for the new max.
    std::array<std::pair<std::size_t, int>, 8> lenDeltas;
    std::size_t lenDeltaCount = 0;
    auto bumpLen = [&](std::size_t len, int d) {
        for (std::size_t i = 0; i < lenDeltaCount; ++i) {
            if (lenDeltas[i].first == len) {
                lenDeltas[i].second += d;
                return;
            }
        }
        lenDeltas[lenDeltaCount++] = {len, d};
    };

    for (std::size_t i = 0; i < deltaCount; ++i) {
        const auto [word, df] = deltas[i];
        if (df == 0) continue;
        const std::int64_t before = lex.frequency(word);
        const std::int64_t after = before + df;
        if (before == 0 && after > 0) {
            ++agg.typeCount;
            agg.sumLength += static_cast<std::int64_t>(word.size());
            bumpLen(word.size(), +1);
        } else if (before > 0 && after == 0) {
            --agg.typeCount;
            agg.sumLength -= static_cast<std::int64_t>(word.size());
            bumpLen(word.size(), -1);
        }
        agg.sumLogF += xlog2(after) - xlog2(before);
        agg.sumFlogF += flog2(after) - flog2(before);
    }

    const auto& lengthCounts = lex.lengthCounts();
    auto countAt = [&](std::size_t len) {
        std::int64_t c = len < lengthCounts.size() ? lengthCounts[len] : 0;
        for (std::size_t i = 0; i < lenDeltaCount; ++i)
            if (lenDeltas[i].first == len) c += lenDeltas[i].second;
        return c;
    };
    std::size_t maxLen = lex.maxLength();
    for (std::size_t i = 0; i < lenDeltaCount; ++i)
        if (lenDeltas[i].second > 0) maxLen = std::max(maxLen, lenDeltas[i].first);
    while (maxLen > 0 && countAt(maxLen) == 0) --maxLen;
    agg.maxLength = static_cast<std::int64_t>(maxLen);

    return describe(agg, hyp.corpus().phonemeCount).totalBits;
}

} // namespace mdlseg
