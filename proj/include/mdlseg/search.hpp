#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mdlseg/corpus.hpp"
#include "mdlseg/evaluation.hpp"
#include "mdlseg/hypothesis.hpp"
#include "mdlseg/mdl.hpp"
#include "mdlseg/phonotactics.hpp"

namespace mdlseg {

// Description lengths are compared at 1e-9-bit resolution: equal keys are
// ties, broken by (fewer points, then smallest (utterance, offset)
// sequence). Quantizing keeps the order total, so parallel and
// sequential reductions commit the same candidate.
std::int64_t dlCompareKey(double bits);

struct SearchConfig {
    const ClusterRules* rules = nullptr; // null: Free variants
    std::uint64_t seed = 0;
    int trials = 1000;
    // Stop once no candidate improves on the committed state. Default is
    // the faithful loop: run until no valid points remain.
    bool earlyStop = false;
    int threads = 1;
};

struct TraceStep {
    std::vector<Position> points;
    double committedDL = 0.0;
    double bestDL = 0.0;
    bool sameWordPair = false; // both points split one word
};

struct SearchTrace {
    double initialDL = 0.0;
    std::vector<TraceStep> steps;
    std::size_t bestStep = 0; // 0 = unsegmented start
};

struct SearchResult {
    Segmentation best;
    DLReport report;
    SearchTrace trace;
};

// Greedy MDL search: from the empty segmentation, repeatedly evaluate
// every hypothesis reachable by adding one or two valid points, commit
// the shortest (even if longer than the current state), and finally
// return the shortest hypothesis ever visited.
SearchResult greedySearch(const Corpus& corpus, const SearchConfig& config);

// CSV trace: step,pointsAdded,committedDL,bestDL. Row 0 is the
// unsegmented start.
void writeTraceCsv(std::ostream& out, const SearchTrace& trace);

struct BaselineResult {
    Segmentation seg;
    int requested = 0;
    int placed = 0; // < requested when the valid set ran dry
};

// Draws uniformly at random from the currently valid point set until k
// points are placed or none remain. Free mode draws from all uncommitted
// points; phono mode refreshes legality after each insertion.
BaselineResult randomBaseline(const Corpus& corpus, int k,
                              const SearchConfig& config, std::uint64_t seed);

struct TrialStats {
    int trials = 0;
    int k = 0;
    double meanRecall = 0.0;   // over trials where recall is defined
    double meanAccuracy = 0.0; // over trials where accuracy is defined
    int recallDefined = 0;
    int accuracyDefined = 0;
    double meanPlaced = 0.0;
};

// Runs the baseline `trials` times with per-trial derived seeds and
// scores each run against the corpus gold segmentation.
TrialStats runTrials(const Corpus& corpus, int k, const SearchConfig& config,
                     int trials, std::uint64_t seed);

struct BruteResult {
    Segmentation best;
    DLReport report;
    std::uint64_t hypothesesExamined = 0;
    std::size_t candidatePoints = 0;
};

// Exhaustive minimum over every admissible subset of candidate points
// (under rules, a subset is admissible iff every induced word is legal).
// Refuses corpora with more than `limit` candidate points. Ties break
// like greedySearch.
BruteResult bruteForce(const Corpus& corpus, const ClusterRules* rules,
                       std::size_t limit = 20);

} // namespace mdlseg
