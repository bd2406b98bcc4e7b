#pragma once

#include <cstdint>
#include <span>

#include "mdlseg/hypothesis.hpp"

namespace mdlseg {

struct Corpus;

// Description length of a hypothesis in bits, split into the three parts
// of the encoding: the phoneme strings of the lexicon, the code words
// assigned to them, and the sample written in those code words.
struct DLReport {
    double wordInventoryBits = 0.0;
    double codeInventoryBits = 0.0;
    double sampleBits = 0.0;
    double totalBits = 0.0;
};

// Continuous length, in bits, of a self-delimiting integer:
//   1.5 + log2(x+1) + 2*log2(log2(x+2) + 0.5)
// Strictly increasing in x. Negative x is a contract violation.
double intCodeLen(std::int64_t x);

// Frequency-based code word length log2(m/f); 0 when f == m.
// Requires 1 <= f <= m.
double codeWordLen(std::int64_t f, std::int64_t m);

// The aggregate view of a lexicon that the length formulas consume.
// Candidate evaluation builds adjusted copies of these instead of
// rebuilding lexicons.
struct LexiconAggregates {
    std::int64_t typeCount = 0;  // n
    std::int64_t tokenCount = 0; // m
    std::int64_t sumLength = 0;  // sum of len(w) over types
    std::int64_t maxLength = 0;  // max len(w) over types
    double sumLogF = 0.0;        // sum of log2 f(w)
    double sumFlogF = 0.0;       // sum of f(w) * log2 f(w)
};

LexiconAggregates aggregatesOf(const Lexicon& lex);

// intCodeLen(n) + log2(p) * sumLength + 1 + (n+1) * log2(maxLength).
// log2(p) and log2(maxLength) may legitimately be 0 in the degenerate
// single-symbol cases.
double wordInventoryLen(const LexiconAggregates& agg, std::size_t p);
double wordInventoryLen(const Lexicon& lex, std::size_t p);

// n*log2(m) - sumLogF + 1 + (n+1) * log2(max(log2 m, 1)). The inner
// log2 m is clamped to 1 so the field width never goes negative for
// m < 2.
double codeInventoryLen(const LexiconAggregates& agg);
double codeInventoryLen(const Lexicon& lex);

// intCodeLen(m) + m*log2(m) - sumFlogF.
double sampleCodeLen(const LexiconAggregates& agg);
double sampleCodeLen(const Lexicon& lex);

DLReport describe(const LexiconAggregates& agg, std::size_t p);
DLReport describe(const Lexicon& lex, std::size_t p);

// From-scratch description length of (corpus, seg); p is the corpus's
// used-symbol count.
DLReport totalDL(const Corpus& corpus, const Segmentation& seg);

// Description length of the hypothesis obtained from `hyp` by inserting
// one or two fresh points, computed from the committed aggregates plus
// the delta of the affected word types. Never rebuilds the lexicon; cost
// is O(1) in corpus size.
double deltaInsertionDL(const Hypothesis& hyp, std::span<const Position> points);

} // namespace mdlseg
