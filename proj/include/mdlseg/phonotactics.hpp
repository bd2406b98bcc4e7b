#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mdlseg/corpus.hpp"
#include "mdlseg/hypothesis.hpp"
#include "mdlseg/u32hash.hpp"

namespace mdlseg {

// Legal word-initial and word-final consonant clusters. The empty cluster
// is always present in both sets: vowel-initial and vowel-final words are
// legal by definition.
class ClusterRules {
public:
    using Set = std::unordered_set<std::u32string, U32Hash, std::equal_to<>>;

    // Validates that every cluster is consonant-only under `inventory`.
    static ClusterRules fromSets(Set initial, Set final,
                                 const PhonemeInventory& inventory);

    bool initialAllowed(std::u32string_view cluster) const {
        return initial_.find(cluster) != initial_.end();
    }
    bool finalAllowed(std::u32string_view cluster) const {
        return final_.find(cluster) != final_.end();
    }

    const Set& initialClusters() const { return initial_; }
    const Set& finalClusters() const { return final_; }

    // File format: sections headed "INITIAL:" and "FINAL:", one cluster
    // per line, "-" for the empty cluster, '#' comments.
    static ClusterRules parse(std::string_view text,
                              const PhonemeInventory& inventory,
                              std::string_view sourceName = "<rules>");
    static ClusterRules loadFile(const std::string& path,
                                 const PhonemeInventory& inventory);
    // Deterministic rendering (clusters sorted by code point).
    std::string format() const;

private:
    Set initial_;
    Set final_;
};

// True iff the word contains a vowel, its maximal leading consonant run
// is a legal initial cluster, and its maximal trailing run is a legal
// final cluster. Empty words are a contract violation.
bool isLegalWord(std::u32string_view word, const ClusterRules& rules,
                 const PhonemeInventory& inventory);

// Offsets strictly inside [begin, end) whose insertion splits the word
// into two legal words.
std::vector<std::uint32_t> legalPointsInWord(std::u32string_view utterance,
                                             std::uint32_t begin,
                                             std::uint32_t end,
                                             const ClusterRules& rules,
                                             const PhonemeInventory& inventory);

// Legal insertion offsets for a whole utterance under its current
// boundaries.
std::vector<std::uint32_t> legalPoints(std::u32string_view utterance,
                                       const std::vector<std::uint32_t>& currentOffsets,
                                       const ClusterRules& rules,
                                       const PhonemeInventory& inventory);

struct RuleExtraction {
    ClusterRules rules;
    // Gold words without a vowel; extraction proceeds but callers should
    // surface these.
    std::vector<std::u32string> vowellessWords;
};

// Maximally permissive rules for a gold-segmented corpus: every leading
// and trailing consonant run of a gold word becomes a legal cluster.
RuleExtraction extractRules(const Corpus& corpus);

// The currently legal insertion points of a hypothesis. With rules, a
// point is valid iff splitting its word yields two legal words; without
// rules (free mode) every uncommitted internal point is valid.
class ValidPointSet {
public:
    ValidPointSet() = default;
    ValidPointSet(const Hypothesis& hyp, const ClusterRules* rules);

    const std::vector<std::uint32_t>& offsets(std::size_t utterance) const {
        return offsets_[utterance];
    }
    std::size_t totalCount() const { return total_; }
    bool contains(Position p) const;
    std::vector<Position> flatten() const;
    // i-th point in (utterance, offset) order.
    Position nth(std::size_t i) const;

    // Call after hyp.applyInsertion committed `inserted`: recomputes
    // legality only inside the two words the insertion created.
    void refreshAfterInsertion(const Hypothesis& hyp, Position inserted);

private:
    const ClusterRules* rules_ = nullptr;
    std::vector<std::vector<std::uint32_t>> offsets_;
    std::size_t total_ = 0;
};

} // namespace mdlseg
