#!/usr/bin/env python3
"""Generate the synthetic child-directed-style corpus (childlike.*).

Words are built from a small pool of CV(C) syllables so that syllables recur
across word types, the way they do in caregiver speech. Codas are drawn from a
deliberately small consonant set; most consonants may only open a syllable.
Token frequencies follow a flattened Zipf curve and a handful of two-word
frames ("si ə ...", "du ju ...") are replayed often, giving the corpus the
heavy repetition that distribution-based segmentation feeds on.

Writes <out>.txt (space-segmented utterances) and <out>.inv (one symbol per
line with its C/V class). Deterministic for a given --seed.
"""

import argparse
import random
import sys
from collections import Counter

VOWELS = ["a", "e", "i", "o", "u", "æ", "ə", "ɪ"]
CONSONANTS = list("pbtdkgmnszfvlrwhj")

ONSETS = [""] + CONSONANTS + ["st", "sp", "tr", "br", "gr", "pl", "kr", "fl"]
CODAS = ["", "n", "t", "s", "k", "m", "nt", "st", "ks", "ns"]

# Short high-frequency words: fillers, pronouns, the frame material.
CORE_WORDS = ["ə", "a", "tu", "si", "mi", "de", "ɪt", "æn", "wi", "du", "ju", "no"]

FRAMES = [
    ("si", "ə"),
    ("du", "ju"),
    ("de", "ɪt"),
    ("ə", "no"),
    ("wi", "tu"),
    ("mi", "æn"),
]


def build_syllables(rng, count):
    pool = set()
    while len(pool) < count:
        onset = rng.choice(ONSETS)
        vowel = rng.choice(VOWELS)
        pool.add(onset + vowel)
    return sorted(pool)


def build_words(rng, syllables, count):
    words = list(CORE_WORDS)
    seen = set(words)
    while len(words) < count:
        n = rng.choices([1, 2, 3], weights=[50, 38, 12])[0]
        body = "".join(rng.choice(syllables) for _ in range(n))
        coda = rng.choice(CODAS) if rng.random() < 0.40 else ""
        word = body + coda
        if word in seen or len(word) > 8:
            continue
        seen.add(word)
        words.append(word)
    return words


def sample_utterances(rng, words, token_target):
    weights = [1.0 / (rank + 3.0) ** 1.05 for rank in range(len(words))]
    utterances = []
    tokens = 0
    while tokens < token_target:
        length = rng.choices([1, 2, 3, 4, 5], weights=[10, 26, 32, 22, 10])[0]
        utt = []
        if length >= 2 and rng.random() < 0.45:
            utt.extend(rng.choice(FRAMES))
        while len(utt) < length:
            utt.append(rng.choices(words, weights=weights)[0])
        utterances.append(utt)
        tokens += len(utt)
    return utterances


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=20260825)
    parser.add_argument("--types", type=int, default=150)
    parser.add_argument("--syllables", type=int, default=42)
    parser.add_argument("--tokens", type=int, default=580)
    parser.add_argument("--out", default="data/childlike")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    syllables = build_syllables(rng, args.syllables)
    words = build_words(rng, syllables, args.types)
    utterances = sample_utterances(rng, words, args.tokens)

    lines = [" ".join(utt) for utt in utterances]
    text = "\n".join(lines) + "\n"
    used = set("".join(lines).replace(" ", ""))
    unknown = used - set(VOWELS) - set(CONSONANTS)
    if unknown:
        sys.exit(f"generated symbols outside the inventory: {unknown}")

    with open(args.out + ".txt", "w", encoding="utf-8") as fh:
        fh.write("# Synthetic caregiver-style utterances; spaces mark the reference words.\n")
        fh.write(text)
    with open(args.out + ".inv", "w", encoding="utf-8") as fh:
        for v in VOWELS:
            fh.write(f"{v} V\n")
        for c in CONSONANTS:
            fh.write(f"{c} C\n")

    token_count = sum(len(u) for u in utterances)
    type_counts = Counter(w for u in utterances for w in u)
    phonemes = sum(len(w) for u in utterances for w in u)
    points = sum(sum(len(w) for w in u) - 1 for u in utterances)
    print(f"utterances      {len(utterances)}")
    print(f"tokens          {token_count}")
    print(f"types observed  {len(type_counts)}")
    print(f"phonemes        {phonemes}")
    print(f"candidate pts   {points}")
    print(f"gold points     {token_count - len(utterances)}")
    print(f"top types       {type_counts.most_common(8)}")


if __name__ == "__main__":
    main()
