#pragma once

// Shared in-memory fixtures. The kitty sample writes the /aɪ/ diphthong
// as the single symbol Y so each phoneme stays one code point.

#include <cstdint>
#include <utility>

#include "mdlseg/corpus.hpp"
#include "mdlseg/phonotactics.hpp"

namespace fixtures {

inline const char* kittyInventoryText() {
    return "d C\n"
           "u V\n"
           "j C\n"
           "s C\n"
           "i V\n"
           "ð C\n"
           "ə V\n"
           "k C\n"
           "ɪ V\n"
           "t C\n"
           "l C\n"
           "Y V\n";
}

inline const char* kittyCorpusText() {
    return "du ju si ðə kɪti\n"
           "si ðə kɪti\n"
           "du ju lYk ðə kɪti\n";
}

inline mdlseg::Corpus kitty() {
    const auto inventory =
        mdlseg::PhonemeInventory::parse(kittyInventoryText(), "kitty.inv");
    return mdlseg::parseCorpus(kittyCorpusText(), inventory, "kitty.txt");
}

// The distributionally tempting mis-segmentation contrasted with the gold
// one: duj|us|ið|əkɪt|i / sið|ək|ɪti / du|jul|Yk|ðək|ɪti.
inline mdlseg::Segmentation kittySeg2() {
    mdlseg::Segmentation seg(3);
    const std::pair<std::uint32_t, std::uint32_t> points[] = {
        {0, 3}, {0, 5}, {0, 7}, {0, 11}, {1, 3},
        {1, 5}, {2, 2}, {2, 5}, {2, 7},  {2, 10},
    };
    for (const auto [u, off] : points) seg.insert({u, off});
    return seg;
}

// Gold corpus whose extracted rules leave "wantmituhεlpbebi" with exactly
// six legal points of fifteen.
inline mdlseg::Corpus wantMi() {
    mdlseg::PhonemeInventory inv;
    using mdlseg::PhonemeClass;
    for (const char32_t c : {U'a', U'i', U'u', U'ε', U'e'})
        inv.add(c, PhonemeClass::vowel);
    for (const char32_t c : {U'w', U'n', U't', U'm', U'h', U'l', U'p', U'b'})
        inv.add(c, PhonemeClass::consonant);
    return mdlseg::parseCorpus("want mi tu hεlp bebi\nit\n", inv,
                               "wantmi.txt");
}

// Gold corpus for the two-of-six "kætspɔz" example.
inline mdlseg::Corpus catsPaws() {
    mdlseg::PhonemeInventory inv;
    using mdlseg::PhonemeClass;
    for (const char32_t c : {U'æ', U'ɔ'}) inv.add(c, PhonemeClass::vowel);
    for (const char32_t c : {U'k', U't', U's', U'p', U'z'})
        inv.add(c, PhonemeClass::consonant);
    return mdlseg::parseCorpus("kæt spɔz\nkæts pɔz\n", inv, "catspaws.txt");
}

// Gold corpus for the grin|ænd invalidation example.
inline mdlseg::Corpus grinAnd() {
    mdlseg::PhonemeInventory inv;
    using mdlseg::PhonemeClass;
    for (const char32_t c : {U'i', U'æ', U'o'}) inv.add(c, PhonemeClass::vowel);
    for (const char32_t c : {U'g', U'r', U'n', U'd'})
        inv.add(c, PhonemeClass::consonant);
    return mdlseg::parseCorpus("grin ænd\nno\n", inv, "grinand.txt");
}

} // namespace fixtures
