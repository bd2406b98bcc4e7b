#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mdlseg/hypothesis.hpp"

namespace mdlseg {

enum class PhonemeClass { vowel, consonant };

// The symbol set with vowel/consonant classification. Each phoneme is one
// Unicode scalar; syllabic consonants are classed as vowels by the
// inventory author.
class PhonemeInventory {
public:
    void add(char32_t symbol, PhonemeClass cls);

    bool contains(char32_t symbol) const {
        return classes_.find(symbol) != classes_.end();
    }
    // Contract: symbol must be in the inventory.
    bool isVowel(char32_t symbol) const;

    std::size_t size() const { return classes_.size(); }

    // File format: one line per phoneme, "<char> V" or "<char> C".
    // '#' comment lines and blank lines are skipped.
    static PhonemeInventory parse(std::string_view text,
                                  std::string_view sourceName = "<inventory>");
    static PhonemeInventory loadFile(const std::string& path);

private:
    std::unordered_map<char32_t, PhonemeClass> classes_;
};

struct Corpus {
    std::vector<std::u32string> utterances;
    Segmentation gold;           // derived from word spacing at parse time
    PhonemeInventory inventory;
    std::size_t phonemeCount = 0; // p: distinct symbols actually used

    std::size_t candidatePositionCount() const;
    // All internal positions, ordered by (utterance, offset).
    std::vector<Position> candidatePositions() const;
};

// One utterance per line, words separated by single spaces, '#' comments,
// blank lines ignored. Gold boundaries are the removed spaces. Throws
// ParseError (with line and column) for symbols missing from the
// inventory and for empty words.
Corpus parseCorpus(std::string_view text, const PhonemeInventory& inventory,
                   std::string_view sourceName = "<corpus>");
Corpus loadCorpusFile(const std::string& path,
                      const PhonemeInventory& inventory);

// Re-inserts boundaries as spaces, one utterance per line. With the gold
// segmentation this reproduces the original word-separated text (minus
// comments and blank lines).
std::string renderSegmented(const Corpus& corpus, const Segmentation& seg);

std::string readTextFile(const std::string& path);

} // namespace mdlseg
