#include "mdlseg/corpus.hpp"

#include <fstream>
#include <sstream>

#include "mdlseg/errors.hpp"
#include "mdlseg/utf8.hpp"

namespace mdlseg {

namespace {

bool isBlank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Splits on '\n', strips a trailing '\r' per line.
std::vector<std::string_view> splitLines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

} // namespace

void PhonemeInventory::add(char32_t symbol, PhonemeClass cls) {
    auto [it, inserted] = classes_.emplace(symbol, cls);
    if (!inserted)
        throw ContractViolation("duplicate phoneme '" + utf8::encode(symbol) +
                                "' in inventory");
}

bool PhonemeInventory::isVowel(char32_t symbol) const {
    auto it = classes_.find(symbol);
    if (it == classes_.end())
        throw ContractViolation("symbol '" + utf8::encode(symbol) +
                                "' not in inventory");
    return it->second == PhonemeClass::vowel;
}

PhonemeInventory PhonemeInventory::parse(std::string_view text,
                                         std::string_view sourceName) {
    PhonemeInventory inv;
    const std::string name(sourceName);
    std::size_t lineNo = 0;
    for (std::string_view line : splitLines(text)) {
        ++lineNo;
        if (isBlank(line) || line.front() == '#') continue;
        std::u32string cps;
        try {
            cps = utf8::decode(line);
        } catch (const std::runtime_error& e) {
            throw ParseError(name, lineNo, 1, e.what());
        }
        if (cps.size() != 3 || cps[1] != U' ' ||
            (cps[2] != U'V' && cps[2] != U'C'))
            throw ParseError(name, lineNo, 1,
                             "expected \"<char> V\" or \"<char> C\"");
        if (inv.contains(cps[0]))
            throw ParseError(name, lineNo, 1,
                             "duplicate phoneme '" + utf8::encode(cps[0]) +
                                 "'");
        inv.classes_.emplace(cps[0], cps[2] == U'V' ? PhonemeClass::vowel
                                                    : PhonemeClass::consonant);
    }
    if (inv.size() == 0)
        throw ParseError(name, "inventory defines no phonemes");
    return inv;
}

PhonemeInventory PhonemeInventory::loadFile(const std::string& path) {
    return parse(readTextFile(path), path);
}

std::size_t Corpus::candidatePositionCount() const {
    std::size_t count = 0;
    for (const auto& u : utterances) count += u.size() - 1;
    return count;
}

std::vector<Position> Corpus::candidatePositions() const {
    std::vector<Position> points;
    points.reserve(candidatePositionCount());
    for (std::uint32_t u = 0; u < utterances.size(); ++u)
        for (std::uint32_t off = 1; off < utterances[u].size(); ++off)
            points.push_back({u, off});
    return points;
}

Corpus parseCorpus(std::string_view text, const PhonemeInventory& inventory,
                   std::string_view sourceName) {
    const std::string name(sourceName);
    Corpus corpus;
    corpus.inventory = inventory;
    std::vector<std::vector<std::uint32_t>> goldOffsets;
    std::unordered_map<char32_t, bool> used;

    std::size_t lineNo = 0;
    for (std::string_view line : splitLines(text)) {
        ++lineNo;
        if (isBlank(line) || line.front() == '#') continue;
        std::u32string cps;
        try {
            cps = utf8::decode(line);
        } catch (const std::runtime_error& e) {
            throw ParseError(name, lineNo, 1, e.what());
        }

        std::u32string utterance;
        std::vector<std::uint32_t> offsets;
        std::uint32_t wordLen = 0;
        for (std::size_t col = 0; col <= cps.size(); ++col) {
            const bool atEnd = col == cps.size();
            const char32_t cp = atEnd ? U' ' : cps[col];
            if (cp == U' ') {
                if (wordLen == 0)
                    throw ParseError(name, lineNo, col + 1,
                                     "empty word (stray space)");
                if (!atEnd) offsets.push_back(
                    static_cast<std::uint32_t>(utterance.size()));
                wordLen = 0;
                continue;
            }
            if (!inventory.contains(cp))
                throw ParseError(name, lineNo, col + 1,
                                 "unknown symbol '" + utf8::encode(cp) + "'");
            utterance.push_back(cp);
            used[cp] = true;
            ++wordLen;
        }
        corpus.utterances.push_back(std::move(utterance));
        goldOffsets.push_back(std::move(offsets));
    }

    if (corpus.utterances.empty())
        throw ParseError(name, "corpus contains no utterances");

    corpus.gold = Segmentation(corpus.utterances.size());
    for (std::uint32_t u = 0; u < goldOffsets.size(); ++u)
        for (std::uint32_t off : goldOffsets[u])
            corpus.gold.insert({u, off});
    corpus.phonemeCount = used.size();
    return corpus;
}

Corpus loadCorpusFile(const std::string& path,
                      const PhonemeInventory& inventory) {
    return parseCorpus(readTextFile(path), inventory, path);
}

std::string renderSegmented(const Corpus& corpus, const Segmentation& seg) {
    std::string out;
    for (std::size_t u = 0; u < corpus.utterances.size(); ++u) {
        const auto& utterance = corpus.utterances[u];
        const auto& offsets = seg.offsets(u);
        std::size_t next = 0;
        for (std::size_t i = 0; i < utterance.size(); ++i) {
            if (next < offsets.size() && offsets[next] == i) {
                out.push_back(' ');
                ++next;
            }
            out += utf8::encode(utterance[i]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

} // namespace mdlseg
