#pragma once

#include <cstdint>
#include <optional>

#include "mdlseg/hypothesis.hpp"

namespace mdlseg {

// Hit/miss/false-alarm counts with recall and accuracy as percentages.
// A zero denominator leaves the ratio undefined rather than coercing it
// to 0 or 100.
struct Score {
    std::int64_t hits = 0;
    std::int64_t misses = 0;
    std::int64_t falseAlarms = 0;

    std::optional<double> recall() const {
        const std::int64_t denom = hits + misses;
        if (denom == 0) return std::nullopt;
        return 100.0 * double(hits) / double(denom);
    }
    std::optional<double> accuracy() const {
        const std::int64_t denom = hits + falseAlarms;
        if (denom == 0) return std::nullopt;
        return 100.0 * double(hits) / double(denom);
    }
};

// Compares utterance-internal boundary offsets; utterance ends are given,
// not scored. Both segmentations must cover the same utterances.
Score boundaryScore(const Segmentation& hypothesis, const Segmentation& gold);

// Exact word-type matching; frequencies ignored.
Score typeScore(const Lexicon& hypothesis, const Lexicon& gold);

} // namespace mdlseg
