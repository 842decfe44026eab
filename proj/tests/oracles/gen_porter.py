# Copyright 2026 The Semmem Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates porter.tsv from NLTK's Porter stemmer (Martin extensions)."""

import pathlib
import re
import sys

from nltk.stem.porter import PorterStemmer

CLASSIC = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness
formaliti sensitiviti sensibiliti triplicate formative formalize
electriciti electrical hopeful goodness revival allowance inference airliner
gyroscopic adjustable defensible irritant replacement adjustment dependent
adoption homologou communism activate angulariti homologous effective
bowdlerize probate rate cease controll roll generalizations oscillators
agreement ability abilities running runs ran easily fairly dying lying tying
sensational traditional reference colonizer plotted generous
"""


def main() -> None:
    root = pathlib.Path(__file__).resolve().parents[2]
    words = set(CLASSIC.split())
    for name in ("paper.md", "spec.md"):
        text = (root / name).read_text(encoding="utf-8").lower()
        words.update(re.findall(r"\b[a-z]{3,}\b", text))
    stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).with_name("porter.tsv")
    with out.open("w", encoding="utf-8") as f:
        for w in sorted(words):
            f.write(f"{w}\t{stemmer.stem(w)}\n")


if __name__ == "__main__":
    main()
