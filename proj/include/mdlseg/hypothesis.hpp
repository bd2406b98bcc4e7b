#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mdlseg/u32hash.hpp"

namespace mdlseg {

struct Corpus;

// A candidate or committed boundary: `offset` phonemes into utterance
// `utterance`, strictly inside it (1..L-1).
struct Position {
    std::uint32_t utterance = 0;
    std::uint32_t offset = 0;
    auto operator<=>(const Position&) const = default;
};

// Per-utterance sorted sets of internal boundary offsets.
class Segmentation {
public:
    Segmentation() = default;
    explicit Segmentation(std::size_t utteranceCount)
        : offsets_(utteranceCount) {}

    std::size_t utteranceCount() const { return offsets_.size(); }
    const std::vector<std::uint32_t>& offsets(std::size_t utterance) const {
        return offsets_[utterance];
    }

    bool contains(Position p) const;

    // Keeps the per-utterance list sorted. Duplicate or out-of-range
    // utterance index is a contract violation.
    void insert(Position p);

    std::size_t pointCount() const;
    std::vector<Position> positions() const;

    bool operator==(const Segmentation&) const = default;

private:
    std::vector<std::vector<std::uint32_t>> offsets_;
};

// Word types with token frequencies plus the running aggregates the
// description-length formulas consume:
//   n = types, m = tokens, sumLength = sum of type lengths,
//   sumLogF = sum of log2 f(w), sumFlogF = sum of f(w) * log2 f(w).
class Lexicon {
public:
    using Map = std::unordered_map<std::u32string, std::int64_t, U32Hash,
                                   std::equal_to<>>;

    std::size_t typeCount() const { return entries_.size(); }
    std::int64_t tokenCount() const { return tokens_; }
    std::int64_t sumLength() const { return sumLength_; }
    std::size_t maxLength() const { return maxLength_; }
    double sumLogF() const { return sumLogF_; }
    double sumFlogF() const { return sumFlogF_; }

    std::int64_t frequency(std::u32string_view word) const;
    const Map& entries() const { return entries_; }

    // Multiset of type lengths, indexed by length. Entry [0] is unused.
    const std::vector<std::int64_t>& lengthCounts() const {
        return lengthCounts_;
    }

    void addToken(std::u32string_view word);
    // Removing the last token of a type erases the entry. Removing an
    // absent word is a contract violation.
    void removeToken(std::u32string_view word);

private:
    Map entries_;
    std::int64_t tokens_ = 0;
    std::int64_t sumLength_ = 0;
    std::size_t maxLength_ = 0;
    double sumLogF_ = 0.0;
    double sumFlogF_ = 0.0;
    std::vector<std::int64_t> lengthCounts_;
};

Lexicon buildLexicon(const Corpus& corpus, const Segmentation& seg);

// Word span [begin, end) within one utterance.
struct WordSpan {
    std::uint32_t utterance = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    auto operator<=>(const WordSpan&) const = default;
};

// A segmentation hypothesis over a fixed corpus, with its lexicon kept
// incrementally in sync and O(1) lookup of the word containing any
// boundary slot.
class Hypothesis {
public:
    explicit Hypothesis(const Corpus& corpus);
    Hypothesis(const Corpus& corpus, const Segmentation& seg);

    const Corpus& corpus() const { return *corpus_; }
    const Segmentation& segmentation() const { return seg_; }
    const Lexicon& lexicon() const { return lex_; }

    // Word containing the boundary slot at `p` (the slot between phonemes
    // p.offset-1 and p.offset). Committed offsets are word edges, so the
    // returned span then starts exactly at p.offset.
    WordSpan wordAt(Position p) const;
    // Word containing the phoneme at `index`.
    WordSpan wordOfChar(std::uint32_t utterance, std::uint32_t index) const;
    std::u32string_view wordView(WordSpan span) const;

    // Splits the affected tokens at one or two fresh points. Aggregates
    // are updated in O(affected types). Duplicate points (already
    // committed, or repeated within `points`) are contract violations.
    void applyInsertion(std::span<const Position> points);

private:
    void splitTokens(std::uint32_t utterance,
                     std::span<const std::uint32_t> offsets);

    const Corpus* corpus_;
    Segmentation seg_;
    Lexicon lex_;
    // Per utterance, per phoneme index: start/end of the containing word.
    std::vector<std::vector<std::uint32_t>> wordBegin_;
    std::vector<std::vector<std::uint32_t>> wordEnd_;
};

} // namespace mdlseg
