#include "mdlseg/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "mdlseg/errors.hpp"
#include "mdlseg/rng.hpp"

namespace mdlseg {

std::int64_t dlCompareKey(double bits) { return std::llround(bits * 1e9); }

namespace {

struct Candidate {
    double dl = std::numeric_limits<double>::infinity();
    int count = 0; // 0 = no candidate yet
    std::array<Position, 2> points{};
    bool sameWord = false;
};

// Strict total order: quantized DL, then fewer points, then smallest
// (utterance, offset) sequence. Distinct candidates never tie, so any
// reduction order commits the same choice.
bool precedes(const Candidate& a, const Candidate& b) {
    if (a.count == 0 || b.count == 0) return a.count != 0 && b.count == 0;
    const std::int64_t ka = dlCompareKey(a.dl);
    const std::int64_t kb = dlCompareKey(b.dl);
    if (ka != kb) return ka < kb;
    if (a.count != b.count) return a.count < b.count;
    for (int i = 0; i < a.count; ++i)
        if (a.points[i] != b.points[i]) return a.points[i] < b.points[i];
    return false;
}

// Singles and pairs (i, j), j > i, for rows i = first, first + stride, ...
// Row lengths shrink with i, so striding keeps threads balanced.
Candidate scanRows(const Hypothesis& hyp, const ClusterRules* rules,
                   const std::vector<Position>& flat, std::size_t first,
                   std::size_t stride) {
    const Corpus& corpus = hyp.corpus();
    Candidate best;
    for (std::size_t i = first; i < flat.size(); i += stride) {
        Candidate single;
        single.count = 1;
        single.points[0] = flat[i];
        single.dl = deltaInsertionDL(hyp, {&single.points[0], 1});
        if (precedes(single, best)) best = single;

        const WordSpan wi = hyp.wordAt(flat[i]);
        for (std::size_t j = i + 1; j < flat.size(); ++j) {
            Candidate pair;
            pair.count = 2;
            pair.points[0] = flat[i];
            pair.points[1] = flat[j];
            if (flat[j].utterance == flat[i].utterance &&
                hyp.wordAt(flat[j]) == wi) {
                pair.sameWord = true;
                if (rules) {
                    // The outer parts are covered by each point's own
                    // validity; only the middle word is new.
                    const std::u32string_view utt =
                        corpus.utterances[flat[i].utterance];
                    const auto middle = utt.substr(
                        flat[i].offset, flat[j].offset - flat[i].offset);
                    if (!isLegalWord(middle, *rules, corpus.inventory))
                        continue;
                }
            }
            pair.dl = deltaInsertionDL(hyp, {pair.points.data(), 2});
            if (precedes(pair, best)) best = pair;
        }
    }
    return best;
}

bool wordsLegal(const Corpus& corpus, std::size_t utterance,
                const std::vector<std::uint32_t>& offsets,
                const ClusterRules& rules) {
    const std::u32string_view utt = corpus.utterances[utterance];
    std::uint32_t begin = 0;
    for (std::uint32_t off : offsets) {
        if (!isLegalWord(utt.substr(begin, off - begin), rules,
                         corpus.inventory))
            return false;
        begin = off;
    }
    return isLegalWord(utt.substr(begin), rules, corpus.inventory);
}

} // namespace

SearchResult greedySearch(const Corpus& corpus, const SearchConfig& config) {
    if (corpus.utterances.empty())
        throw ContractViolation("greedySearch requires a nonempty corpus");

    Hypothesis hyp(corpus);
    ValidPointSet valid(hyp, config.rules);

    SearchResult result;
    result.trace.initialDL =
        describe(hyp.lexicon(), corpus.phonemeCount).totalBits;
    result.best = hyp.segmentation();
    double bestDL = result.trace.initialDL;
    double currentDL = result.trace.initialDL;

    const int threads = std::max(1, config.threads);

    while (valid.totalCount() > 0) {
        const std::vector<Position> flat = valid.flatten();

        Candidate chosen;
        if (threads == 1 || flat.size() < 64) {
            chosen = scanRows(hyp, config.rules, flat, 0, 1);
        } else {
            std::vector<Candidate> partial(static_cast<std::size_t>(threads));
            std::vector<std::thread> pool;
            pool.reserve(std::size_t(threads) - 1);
            for (int t = 1; t < threads; ++t)
                pool.emplace_back([&, t] {
                    partial[std::size_t(t)] = scanRows(
                        hyp, config.rules, flat, std::size_t(t),
                        std::size_t(threads));
                });
            partial[0] =
                scanRows(hyp, config.rules, flat, 0, std::size_t(threads));
            for (auto& worker : pool) worker.join();
            chosen = partial[0];
            for (int t = 1; t < threads; ++t)
                if (precedes(partial[std::size_t(t)], chosen))
                    chosen = partial[std::size_t(t)];
        }

        if (config.earlyStop &&
            dlCompareKey(chosen.dl) >= dlCompareKey(currentDL))
            break;

        hyp.applyInsertion({chosen.points.data(), std::size_t(chosen.count)});
        for (int i = 0; i < chosen.count; ++i)
            valid.refreshAfterInsertion(hyp, chosen.points[i]);
        currentDL = chosen.dl;

        TraceStep step;
        step.points.assign(chosen.points.begin(),
                           chosen.points.begin() + chosen.count);
        step.committedDL = chosen.dl;
        step.sameWordPair = chosen.sameWord;
        if (dlCompareKey(chosen.dl) < dlCompareKey(bestDL)) {
            bestDL = chosen.dl;
            result.best = hyp.segmentation();
            result.trace.bestStep = result.trace.steps.size() + 1;
        }
        step.bestDL = bestDL;
        result.trace.steps.push_back(std::move(step));
    }

    result.report = totalDL(corpus, result.best);
    return result;
}

void writeTraceCsv(std::ostream& out, const SearchTrace& trace) {
    char buf[64];
    const auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    out << "step,pointsAdded,committedDL,bestDL\n";
    out << "0,0," << fmt(trace.initialDL) << ',' << fmt(trace.initialDL)
        << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        out << (i + 1) << ',' << s.points.size() << ',' << fmt(s.committedDL)
            << ',' << fmt(s.bestDL) << '\n';
    }
}

BaselineResult randomBaseline(const Corpus& corpus, int k,
                              const SearchConfig& config,
                              std::uint64_t seed) {
    if (k < 0) throw ContractViolation("randomBaseline requires k >= 0");

    Hypothesis hyp(corpus);
    ValidPointSet valid(hyp, config.rules);
    std::mt19937_64 rng(seed);

    BaselineResult out;
    out.requested = k;
    while (out.placed < k && valid.totalCount() > 0) {
        const Position p = valid.nth(uniformBelow(rng, valid.totalCount()));
        hyp.applyInsertion({&p, 1});
        valid.refreshAfterInsertion(hyp, p);
        ++out.placed;
    }
    out.seg = hyp.segmentation();
    return out;
}

TrialStats runTrials(const Corpus& corpus, int k, const SearchConfig& config,
                     int trials, std::uint64_t seed) {
    if (trials < 1) throw ContractViolation("runTrials requires trials >= 1");

    TrialStats stats;
    stats.trials = trials;
    stats.k = k;
    double sumRecall = 0.0;
    double sumAccuracy = 0.0;
    double sumPlaced = 0.0;
    for (int t = 0; t < trials; ++t) {
        const BaselineResult run =
            randomBaseline(corpus, k, config, trialSeed(seed, std::uint64_t(t)));
        const Score score = boundaryScore(run.seg, corpus.gold);
        if (const auto r = score.recall()) {
            sumRecall += *r;
            ++stats.recallDefined;
        }
        if (const auto a = score.accuracy()) {
            sumAccuracy += *a;
            ++stats.accuracyDefined;
        }
        sumPlaced += double(run.placed);
    }
    if (stats.recallDefined > 0) stats.meanRecall = sumRecall / stats.recallDefined;
    if (stats.accuracyDefined > 0)
        stats.meanAccuracy = sumAccuracy / stats.accuracyDefined;
    stats.meanPlaced = sumPlaced / double(trials);
    return stats;
}

BruteResult bruteForce(const Corpus& corpus, const ClusterRules* rules,
                       std::size_t limit) {
    const Hypothesis start(corpus);
    const ValidPointSet valid(start, rules);
    const std::vector<Position> pts = valid.flatten();

    BruteResult out;
    out.candidatePoints = pts.size();
    if (pts.size() > limit)
        throw ContractViolation(
            "brute force refused: " + std::to_string(pts.size()) +
            " candidate points exceed the limit of " + std::to_string(limit));

    const std::size_t utterances = corpus.utterances.size();
    const std::size_t P = pts.size();

    std::int64_t bestKey = std::numeric_limits<std::int64_t>::max();
    std::size_t bestSize = 0;
    std::vector<Position> bestPoints;
    Segmentation bestSeg(utterances);
    DLReport bestReport;
    bool haveBest = false;

    std::vector<Position> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << P); ++mask) {
        subset.clear();
        Segmentation seg(utterances);
        for (std::size_t i = 0; i < P; ++i) {
            if (mask >> i & 1) {
                subset.push_back(pts[i]);
                seg.insert(pts[i]);
            }
        }
        if (rules) {
            // Untouched utterances keep their whole-utterance word and
            // need no check: the search never requires the start state
            // to be legal.
            bool admissible = true;
            for (std::size_t u = 0; u < utterances && admissible; ++u)
                if (!seg.offsets(u).empty())
                    admissible = wordsLegal(corpus, u, seg.offsets(u), *rules);
            if (!admissible) continue;
        }
        ++out.hypothesesExamined;

        const DLReport report = totalDL(corpus, seg);
        const std::int64_t key = dlCompareKey(report.totalBits);
        const bool better =
            !haveBest || key < bestKey ||
            (key == bestKey &&
             (subset.size() < bestSize ||
              (subset.size() == bestSize && subset < bestPoints)));
        if (better) {
            haveBest = true;
            bestKey = key;
            bestSize = subset.size();
            bestPoints = subset;
            bestSeg = seg;
            bestReport = report;
        }
    }

    out.best = std::move(bestSeg);
    out.report = bestReport;
    return out;
}

} // namespace mdlseg
