#!/usr/bin/env python3
# Copyright 2026 The Camoforge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes tests/data/corpus_1000.jsonl, a synthetic generator input.

Sentences are random draws from the bundled frequency lists, so the texts are
word salad, but they exercise keyword extraction, multi-sentence filtering and
the per-language syllabifiers.
"""

import argparse
import json
import pathlib
import random

LANGUAGES = ["en", "es", "fr", "it", "de"]
SOURCES = ["news-commentary", "paracrawl", "ted2020", "wikimatrix"]
VOCABULARY = 4000


def load_words(data_dir, lang):
    words = []
    path = data_dir / "frequency" / f"{lang}.tsv"
    with path.open(encoding="utf-8") as f:
        for line in f:
            if line.startswith("#"):
                continue
            words.append(line.split("\t", 1)[0])
            if len(words) == VOCABULARY:
                break
    return words


def sentence(rng, words):
    tokens = [rng.choice(words) for _ in range(rng.randint(5, 14))]
    tokens[0] = tokens[0][:1].upper() + tokens[0][1:]
    if rng.random() < 0.2:
        tokens[rng.randrange(1, len(tokens))] += ","
    return " ".join(tokens) + rng.choice([".", ".", ".", "!", "?"])


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=20260101)
    parser.add_argument("--output", type=pathlib.Path,
                        default=root / "tests" / "data" / "corpus_1000.jsonl")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    vocab = {lang: load_words(root / "data", lang) for lang in LANGUAGES}
    seen = set()
    lines = []
    while len(lines) < args.count:
        lang = LANGUAGES[len(lines) % len(LANGUAGES)]
        source = rng.choice(SOURCES)
        text = " ".join(sentence(rng, vocab[lang])
                        for _ in range(rng.choice([1, 1, 2, 3])))
        if text in seen:
            continue
        seen.add(text)
        lines.append(json.dumps({"text": text, "language": lang, "source": source},
                                ensure_ascii=False))
    args.output.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
