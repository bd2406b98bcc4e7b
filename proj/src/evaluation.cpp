#include "mdlseg/evaluation.hpp"

#include <algorithm>

#include "mdlseg/errors.hpp"

namespace mdlseg {

Score boundaryScore(const Segmentation& hypothesis, const Segmentation& gold) {
    if (hypothesis.utteranceCount() != gold.utteranceCount())
        throw ContractViolation("segmentations cover different corpora");
    Score score;
    for (std::size_t u = 0; u < gold.utteranceCount(); ++u) {
        const auto& hyp = hypothesis.offsets(u);
        const auto& ref = gold.offsets(u);
        std::size_t i = 0, j = 0;
        while (i < hyp.size() && j < ref.size()) {
            if (hyp[i] == ref[j]) {
                ++score.hits;
                ++i;
                ++j;
            } else if (hyp[i] < ref[j]) {
                ++score.falseAlarms;
                ++i;
            } else {
                ++score.misses;
                ++j;
            }
        }
        score.falseAlarms += static_cast<std::int64_t>(hyp.size() - i);
        score.misses += static_cast<std::int64_t>(ref.size() - j);
    }
    return score;
}

Score typeScore(const Lexicon& hypothesis, const Lexicon& gold) {
    Score score;
    for (const auto& [word, freq] : hypothesis.entries()) {
        if (gold.frequency(word) > 0)
            ++score.hits;
        else
            ++score.falseAlarms;
    }
    score.misses =
        static_cast<std::int64_t>(gold.typeCount()) - score.hits;
    return score;
}

} // namespace mdlseg
