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
"""Rebuilds the bundled data files under data/.

Inputs are the unpacked wheels/sdists of pyphen (hyphenation patterns),
wordfreq (word frequency ranks) and stop-words (stopword lists):

    build_data.py --pyphen DIR --wordfreq DIR --stopwords DIR
"""
import argparse
import gzip
import pathlib
import shutil

import msgpack

LANGS = {"en": "english", "es": "spanish", "fr": "french", "it": "italian",
         "de": "german"}
HYPH = {"en": "hyph_en_GB.dic", "es": "hyph_es.dic", "fr": "hyph_fr.dic",
        "it": "hyph_it_IT.dic", "de": "hyph_de_DE.dic"}
TOP_N = 50000


def is_word(w):
    return w.isalpha()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pyphen", required=True, type=pathlib.Path)
    ap.add_argument("--wordfreq", required=True, type=pathlib.Path)
    ap.add_argument("--stopwords", required=True, type=pathlib.Path)
    ap.add_argument("--out", default=pathlib.Path(__file__).parent.parent / "data",
                    type=pathlib.Path)
    args = ap.parse_args()

    for lang, fname in HYPH.items():
        src = args.pyphen / "pyphen" / "dictionaries" / fname
        raw = src.read_bytes()
        enc = raw.split(b"\n", 1)[0].decode().strip()
        text = raw.decode("latin-1" if enc.upper().startswith("ISO8859") else "utf-8")
        lines = text.split("\n")
        lines[0] = "UTF-8"
        (args.out / "hyphenation" / f"{lang}.dic").write_text("\n".join(lines), "utf-8")
        readme = src.with_name("README_" + fname.replace(".dic", ".txt"))
        if not readme.exists():
            readme = src.with_name("README_hyph_" + lang + ".txt")
        if readme.exists():
            shutil.copy(readme, args.out / "hyphenation" / f"LICENSE.{lang}.txt")

    for lang in LANGS:
        buckets = msgpack.loads(
            gzip.open(args.wordfreq / "wordfreq" / "data" / f"large_{lang}.msgpack.gz").read(),
            raw=False)
        words, seen = [], set()
        for bucket in buckets[1:]:
            for w in bucket:
                w = w.lower()
                if is_word(w) and w not in seen:
                    seen.add(w)
                    words.append(w)
                if len(words) >= TOP_N:
                    break
            if len(words) >= TOP_N:
                break
        with open(args.out / "frequency" / f"{lang}.tsv", "w", encoding="utf-8") as f:
            f.write("# word<TAB>rank, source: wordfreq (CC-BY-SA 4.0)\n")
            for rank, w in enumerate(words, 1):
                f.write(f"{w}\t{rank}\n")

    for lang, name in LANGS.items():
        src = args.stopwords / "stop_words" / "stop-words" / f"{name}.txt"
        words = sorted({w.strip().lower() for w in src.read_text("utf-8").split("\n") if w.strip()})
        (args.out / "stopwords" / f"{lang}.txt").write_text("\n".join(words) + "\n", "utf-8")


if __name__ == "__main__":
    main()
