#
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
#

"""Word camouflage generation, dataset tooling and span scoring.

Thin wrappers over the compiled ``camoforge._core`` module that decode its
JSON results into plain Python objects.
"""

import json
import os
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from . import _core
from ._core import CamoforgeError, data_dir, set_data_dir, syllabify

__all__ = [
    "CamoforgeError",
    "camouflage_text",
    "camouflage_word",
    "data_dir",
    "default_config",
    "extract_keywords",
    "generate",
    "quality_filter",
    "score",
    "set_data_dir",
    "syllabify",
    "to_tags",
]

_PACKAGE_DATA = Path(__file__).resolve().parent / "data"
if "CAMOFORGE_DATA_DIR" not in os.environ and _PACKAGE_DATA.is_dir():
    set_data_dir(str(_PACKAGE_DATA))


def _config_text(config: Optional[dict]) -> str:
    return "" if config is None else json.dumps(config)


def default_config() -> dict:
    return json.loads(_core.default_config())


def extract_keywords(text: str, language: str = "en", max_keywords: int = 5,
                     forced: Sequence[str] = ()) -> List[dict]:
    """Keyword occurrences in ``text`` with scalar offsets and scores."""
    hits = _core.extract_keywords(text, language, max_keywords, list(forced))
    return [
        {"surface": s, "start": b, "end": e, "score": sc, "forced": f}
        for s, b, e, sc, f in hits
    ]


def camouflage_word(word: str, technique: str = "auto", language: str = "en",
                    seed: int = 0, config: Optional[dict] = None) -> dict:
    return json.loads(
        _core.camouflage_word(word, technique, language, seed, _config_text(config)))


def camouflage_text(text: str, language: str = "en", seed: int = 0,
                    technique: str = "auto", config: Optional[dict] = None,
                    keywords: Sequence[str] = ()) -> dict:
    """Annotated document: text, spans, provenance, language and source."""
    return json.loads(
        _core.camouflage_text(text, language, seed, technique, _config_text(config),
                              list(keywords)))


def generate(sources: Iterable[dict], seed: int = 0, workers: int = 1,
             config: Optional[dict] = None) -> List[dict]:
    lines = [json.dumps(s) for s in sources]
    return [json.loads(line)
            for line in _core.generate(lines, seed, workers, _config_text(config))]


def quality_filter(documents: Iterable[dict]) -> Tuple[List[dict], List[Tuple[int, str]]]:
    kept, rejected = _core.quality_filter([json.dumps(d) for d in documents])
    return [json.loads(k) for k in kept], rejected


def to_tags(document: dict, scheme: str = "biluo") -> Tuple[List[str], List[str]]:
    return _core.to_tags(json.dumps(document), scheme)


def score(gold: Iterable[dict], pred: Iterable[dict]) -> dict:
    return json.loads(_core.score([json.dumps(d) for d in gold],
                                  [json.dumps(d) for d in pred]))
