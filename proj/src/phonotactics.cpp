#include "mdlseg/phonotactics.hpp"

#include <algorithm>

#include "mdlseg/errors.hpp"
#include "mdlseg/utf8.hpp"

namespace mdlseg {

namespace {

void checkConsonantOnly(const std::u32string& cluster,
                        const PhonemeInventory& inventory,
                        std::string_view which) {
    for (char32_t cp : cluster) {
        if (!inventory.contains(cp))
            throw ContractViolation(std::string(which) + " cluster '" +
                                    utf8::encode(cluster) +
                                    "' uses unknown symbol");
        if (inventory.isVowel(cp))
            throw ContractViolation(std::string(which) + " cluster '" +
                                    utf8::encode(cluster) +
                                    "' contains a vowel");
    }
}

std::u32string_view leadingRun(std::u32string_view word,
                               const PhonemeInventory& inventory) {
    std::size_t i = 0;
    while (i < word.size() && !inventory.isVowel(word[i])) ++i;
    return word.substr(0, i);
}

std::u32string_view trailingRun(std::u32string_view word,
                                const PhonemeInventory& inventory) {
    std::size_t i = word.size();
    while (i > 0 && !inventory.isVowel(word[i - 1])) --i;
    return word.substr(i);
}

} // namespace

ClusterRules ClusterRules::fromSets(Set initial, Set final,
                                    const PhonemeInventory& inventory) {
    for (const auto& c : initial) checkConsonantOnly(c, inventory, "initial");
    for (const auto& c : final) checkConsonantOnly(c, inventory, "final");
    ClusterRules rules;
    rules.initial_ = std::move(initial);
    rules.final_ = std::move(final);
    rules.initial_.insert(std::u32string());
    rules.final_.insert(std::u32string());
    return rules;
}

ClusterRules ClusterRules::parse(std::string_view text,
                                 const PhonemeInventory& inventory,
                                 std::string_view sourceName) {
    const std::string name(sourceName);
    Set initial, final;
    Set* current = nullptr;
    std::size_t lineNo = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.find_first_not_of(" \t") == std::string_view::npos)
            continue;
        if (line.front() == '#') continue;
        if (line == "INITIAL:") {
            current = &initial;
            continue;
        }
        if (line == "FINAL:") {
            current = &final;
            continue;
        }
        if (current == nullptr)
            throw ParseError(name, lineNo, 1,
                             "cluster before INITIAL:/FINAL: header");
        if (line == "-") {
            current->insert(std::u32string());
            continue;
        }
        std::u32string cluster;
        try {
            cluster = utf8::decode(line);
        } catch (const std::runtime_error& e) {
            throw ParseError(name, lineNo, 1, e.what());
        }
        for (char32_t cp : cluster) {
            if (!inventory.contains(cp))
                throw ParseError(name, lineNo, 1,
                                 "unknown symbol '" + utf8::encode(cp) +
                                     "' in cluster");
            if (inventory.isVowel(cp))
                throw ParseError(name, lineNo, 1,
                                 "vowel '" + utf8::encode(cp) +
                                     "' in consonant cluster");
        }
        current->insert(std::move(cluster));
    }
    return fromSets(std::move(initial), std::move(final), inventory);
}

ClusterRules ClusterRules::loadFile(const std::string& path,
                                    const PhonemeInventory& inventory) {
    return parse(readTextFile(path), inventory, path);
}

std::string ClusterRules::format() const {
    auto section = [](const Set& set, const char* header) {
        std::vector<std::u32string> sorted(set.begin(), set.end());
        std::sort(sorted.begin(), sorted.end());
        std::string out = header;
        out += "\n";
        for (const auto& c : sorted) {
            out += c.empty() ? "-" : utf8::encode(c);
            out += "\n";
        }
        return out;
    };
    return section(initial_, "INITIAL:") + section(final_, "FINAL:");
}

bool isLegalWord(std::u32string_view word, const ClusterRules& rules,
                 const PhonemeInventory& inventory) {
    if (word.empty()) throw ContractViolation("empty word");
    bool hasVowel = false;
    for (char32_t cp : word) {
        if (inventory.isVowel(cp)) {
            hasVowel = true;
            break;
        }
    }
    if (!hasVowel) return false;
    return rules.initialAllowed(leadingRun(word, inventory)) &&
           rules.finalAllowed(trailingRun(word, inventory));
}

std::vector<std::uint32_t> legalPointsInWord(std::u32string_view utterance,
                                             std::uint32_t begin,
                                             std::uint32_t end,
                                             const ClusterRules& rules,
                                             const PhonemeInventory& inventory) {
    std::vector<std::uint32_t> points;
    for (std::uint32_t off = begin + 1; off < end; ++off) {
        if (isLegalWord(utterance.substr(begin, off - begin), rules, inventory) &&
            isLegalWord(utterance.substr(off, end - off), rules, inventory))
            points.push_back(off);
    }
    return points;
}

std::vector<std::uint32_t> legalPoints(std::u32string_view utterance,
                                       const std::vector<std::uint32_t>& currentOffsets,
                                       const ClusterRules& rules,
                                       const PhonemeInventory& inventory) {
    std::vector<std::uint32_t> points;
    std::uint32_t begin = 0;
    auto addWord = [&](std::uint32_t end) {
        auto inWord = legalPointsInWord(utterance, begin, end, rules, inventory);
        points.insert(points.end(), inWord.begin(), inWord.end());
        begin = end;
    };
    for (std::uint32_t off : currentOffsets) addWord(off);
    addWord(static_cast<std::uint32_t>(utterance.size()));
    return points;
}

RuleExtraction extractRules(const Corpus& corpus) {
    ClusterRules::Set initial, final;
    std::vector<std::u32string> vowelless;
    for (std::size_t u = 0; u < corpus.utterances.size(); ++u) {
        std::u32string_view utterance = corpus.utterances[u];
        std::uint32_t begin = 0;
        auto addWord = [&](std::uint32_t end) {
            std::u32string_view word = utterance.substr(begin, end - begin);
            begin = end;
            bool hasVowel = false;
            for (char32_t cp : word)
                if (corpus.inventory.isVowel(cp)) {
                    hasVowel = true;
                    break;
                }
            if (!hasVowel) vowelless.emplace_back(word);
            initial.emplace(leadingRun(word, corpus.inventory));
            final.emplace(trailingRun(word, corpus.inventory));
        };
        for (std::uint32_t off : corpus.gold.offsets(u)) addWord(off);
        addWord(static_cast<std::uint32_t>(utterance.size()));
    }
    return {ClusterRules::fromSets(std::move(initial), std::move(final),
                                   corpus.inventory),
            std::move(vowelless)};
}

ValidPointSet::ValidPointSet(const Hypothesis& hyp, const ClusterRules* rules)
    : rules_(rules) {
    const Corpus& corpus = hyp.corpus();
    offsets_.resize(corpus.utterances.size());
    for (std::uint32_t u = 0; u < corpus.utterances.size(); ++u) {
        std::u32string_view utterance = corpus.utterances[u];
        if (rules_ == nullptr) {
            const auto& committed = hyp.segmentation().offsets(u);
            auto it = committed.begin();
            for (std::uint32_t off = 1; off < utterance.size(); ++off) {
                while (it != committed.end() && *it < off) ++it;
                if (it == committed.end() || *it != off)
                    offsets_[u].push_back(off);
            }
        } else {
            offsets_[u] = legalPoints(utterance, hyp.segmentation().offsets(u),
                                      *rules_, corpus.inventory);
        }
        total_ += offsets_[u].size();
    }
}

bool ValidPointSet::contains(Position p) const {
    if (p.utterance >= offsets_.size()) return false;
    const auto& v = offsets_[p.utterance];
    return std::binary_search(v.begin(), v.end(), p.offset);
}

std::vector<Position> ValidPointSet::flatten() const {
    std::vector<Position> out;
    out.reserve(total_);
    for (std::uint32_t u = 0; u < offsets_.size(); ++u)
        for (std::uint32_t off : offsets_[u]) out.push_back({u, off});
    return out;
}

Position ValidPointSet::nth(std::size_t i) const {
    for (std::uint32_t u = 0; u < offsets_.size(); ++u) {
        if (i < offsets_[u].size()) return {u, offsets_[u][i]};
        i -= offsets_[u].size();
    }
    throw ContractViolation("valid point index out of range");
}

void ValidPointSet::refreshAfterInsertion(const Hypothesis& hyp,
                                          Position inserted) {
    const Corpus& corpus = hyp.corpus();
    const WordSpan left = hyp.wordOfChar(inserted.utterance, inserted.offset - 1);
    const WordSpan right = hyp.wordOfChar(inserted.utterance, inserted.offset);

    std::vector<std::uint32_t> fresh;
    std::u32string_view utterance = corpus.utterances[inserted.utterance];
    if (rules_ == nullptr) {
        for (std::uint32_t off = left.begin + 1; off < left.end; ++off)
            fresh.push_back(off);
        for (std::uint32_t off = right.begin + 1; off < right.end; ++off)
            fresh.push_back(off);
    } else {
        fresh = legalPointsInWord(utterance, left.begin, left.end, *rules_,
                                  corpus.inventory);
        auto rightPoints = legalPointsInWord(utterance, right.begin, right.end,
                                             *rules_, corpus.inventory);
        fresh.insert(fresh.end(), rightPoints.begin(), rightPoints.end());
    }

    auto& v = offsets_[inserted.utterance];
    const auto lo = std::lower_bound(v.begin(), v.end(), left.begin + 1);
    const auto hi = std::lower_bound(v.begin(), v.end(), right.end);
    total_ -= static_cast<std::size_t>(hi - lo);
    auto it = v.erase(lo, hi);
    v.insert(it, fresh.begin(), fresh.end());
    total_ += fresh.size();
}

} // namespace mdlseg
