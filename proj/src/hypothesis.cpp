#include "mdlseg/hypothesis.hpp"

#include <algorithm>
#include <cmath>

#include "mdlseg/corpus.hpp"
#include "mdlseg/errors.hpp"

namespace mdlseg {

namespace {

double xlog2(std::int64_t f) { return f > 1 ? std::log2(double(f)) : 0.0; }
double flog2(std::int64_t f) {
    return f > 1 ? double(f) * std::log2(double(f)) : 0.0;
}

} // namespace

bool Segmentation::contains(Position p) const {
    if (p.utterance >= offsets_.size()) return false;
    const auto& v = offsets_[p.utterance];
    return std::binary_search(v.begin(), v.end(), p.offset);
}

void Segmentation::insert(Position p) {
    if (p.utterance >= offsets_.size())
        throw ContractViolation("utterance index out of range");
    auto& v = offsets_[p.utterance];
    auto it = std::lower_bound(v.begin(), v.end(), p.offset);
    if (it != v.end() && *it == p.offset)
        throw ContractViolation("duplicate segmentation point");
    v.insert(it, p.offset);
}

std::size_t Segmentation::pointCount() const {
    std::size_t count = 0;
    for (const auto& v : offsets_) count += v.size();
    return count;
}

std::vector<Position> Segmentation::positions() const {
    std::vector<Position> out;
    out.reserve(pointCount());
    for (std::uint32_t u = 0; u < offsets_.size(); ++u)
        for (std::uint32_t off : offsets_[u]) out.push_back({u, off});
    return out;
}

std::int64_t Lexicon::frequency(std::u32string_view word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? 0 : it->second;
}

void Lexicon::addToken(std::u32string_view word) {
    if (word.empty()) throw ContractViolation("empty word");
    auto it = entries_.find(word);
    std::int64_t old = 0;
    if (it == entries_.end()) {
        it = entries_.emplace(std::u32string(word), 0).first;
        const std::size_t len = word.size();
        sumLength_ += static_cast<std::int64_t>(len);
        if (len >= lengthCounts_.size()) lengthCounts_.resize(len + 1, 0);
        ++lengthCounts_[len];
        maxLength_ = std::max(maxLength_, len);
    } else {
        old = it->second;
    }
    it->second = old + 1;
    ++tokens_;
    sumLogF_ += xlog2(old + 1) - xlog2(old);
    sumFlogF_ += flog2(old + 1) - flog2(old);
}

void Lexicon::removeToken(std::u32string_view word) {
    auto it = entries_.find(word);
    if (it == entries_.end())
        throw ContractViolation("removing token of absent word type");
    const std::int64_t old = it->second;
    it->second = old - 1;
    --tokens_;
    sumLogF_ += xlog2(old - 1) - xlog2(old);
    sumFlogF_ += flog2(old - 1) - flog2(old);
    if (it->second == 0) {
        const std::size_t len = it->first.size();
        entries_.erase(it);
        sumLength_ -= static_cast<std::int64_t>(len);
        --lengthCounts_[len];
        while (maxLength_ > 0 && lengthCounts_[maxLength_] == 0) --maxLength_;
    }
}

Lexicon buildLexicon(const Corpus& corpus, const Segmentation& seg) {
    if (seg.utteranceCount() != corpus.utterances.size())
        throw ContractViolation("segmentation does not match corpus");
    Lexicon lex;
    for (std::size_t u = 0; u < corpus.utterances.size(); ++u) {
        const std::u32string& utterance = corpus.utterances[u];
        std::u32string_view view = utterance;
        std::size_t prev = 0;
        for (std::uint32_t off : seg.offsets(u)) {
            if (off == 0 || off >= utterance.size())
                throw ContractViolation("offset out of range");
            lex.addToken(view.substr(prev, off - prev));
            prev = off;
        }
        lex.addToken(view.substr(prev));
    }
    return lex;
}

Hypothesis::Hypothesis(const Corpus& corpus)
    : Hypothesis(corpus, Segmentation(corpus.utterances.size())) {}

Hypothesis::Hypothesis(const Corpus& corpus, const Segmentation& seg)
    : corpus_(&corpus), seg_(seg), lex_(buildLexicon(corpus, seg)) {
    wordBegin_.resize(corpus.utterances.size());
    wordEnd_.resize(corpus.utterances.size());
    for (std::size_t u = 0; u < corpus.utterances.size(); ++u) {
        const auto len = static_cast<std::uint32_t>(corpus.utterances[u].size());
        wordBegin_[u].resize(len);
        wordEnd_[u].resize(len);
        std::uint32_t begin = 0;
        std::size_t next = 0;
        const auto& offsets = seg_.offsets(u);
        for (std::uint32_t i = 0; i < len; ++i) {
            if (next < offsets.size() && offsets[next] == i) {
                begin = i;
                ++next;
            }
            wordBegin_[u][i] = begin;
        }
        std::uint32_t end = len;
        next = offsets.size();
        for (std::uint32_t i = len; i-- > 0;) {
            wordEnd_[u][i] = end;
            if (next > 0 && offsets[next - 1] == i) {
                end = i;
                --next;
            }
        }
    }
}

WordSpan Hypothesis::wordAt(Position p) const {
    if (p.utterance >= corpus_->utterances.size())
        throw ContractViolation("utterance index out of range");
    const auto len = corpus_->utterances[p.utterance].size();
    if (p.offset < 1 || p.offset >= len)
        throw ContractViolation("offset out of range");
    return {p.utterance, wordBegin_[p.utterance][p.offset],
            wordEnd_[p.utterance][p.offset]};
}

WordSpan Hypothesis::wordOfChar(std::uint32_t utterance,
                                std::uint32_t index) const {
    if (utterance >= corpus_->utterances.size() ||
        index >= corpus_->utterances[utterance].size())
        throw ContractViolation("phoneme index out of range");
    return {utterance, wordBegin_[utterance][index], wordEnd_[utterance][index]};
}

std::u32string_view Hypothesis::wordView(WordSpan span) const {
    std::u32string_view view = corpus_->utterances[span.utterance];
    return view.substr(span.begin, span.end - span.begin);
}

void Hypothesis::splitTokens(std::uint32_t utterance,
                             std::span<const std::uint32_t> offsets) {
    const WordSpan word = wordAt({utterance, offsets.front()});
    lex_.removeToken(wordView(word));
    std::uint32_t prev = word.begin;
    auto emit = [&](std::uint32_t begin, std::uint32_t end) {
        lex_.addToken(wordView({utterance, begin, end}));
        for (std::uint32_t i = begin; i < end; ++i) {
            wordBegin_[utterance][i] = begin;
            wordEnd_[utterance][i] = end;
        }
    };
    for (std::uint32_t off : offsets) {
        emit(prev, off);
        seg_.insert({utterance, off});
        prev = off;
    }
    emit(prev, word.end);
}

void Hypothesis::applyInsertion(std::span<const Position> points) {
    if (points.empty() || points.size() > 2)
        throw ContractViolation("applyInsertion takes one or two points");
    for (Position p : points) {
        if (seg_.contains(p))
            throw ContractViolation("point already in segmentation");
        wordAt(p); // range checks
    }
    if (points.size() == 1) {
        const std::uint32_t off[] = {points[0].offset};
        splitTokens(points[0].utterance, off);
        return;
    }
    Position a = points[0], b = points[1];
    if (b < a) std::swap(a, b);
    if (a == b) throw ContractViolation("duplicate point in insertion");
    if (a.utterance == b.utterance && wordAt(a) == wordAt(b)) {
        const std::uint32_t off[] = {a.offset, b.offset};
        splitTokens(a.utterance, off);
    } else {
        const std::uint32_t offA[] = {a.offset};
        splitTokens(a.utterance, offA);
        const std::uint32_t offB[] = {b.offset};
        splitTokens(b.utterance, offB);
    }
}

} // namespace mdlseg
