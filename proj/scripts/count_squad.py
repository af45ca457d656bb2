# Copyright 2026 The qgen Authors.
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

"""Counts paragraphs and questions in a SQuAD v1.1 style file.

Written without the C++ library so its counts can check the formatter's.
Paragraphs without questions are left out, matching the formatter.

    python3 scripts/count_squad.py train-v1.1.json
"""

import argparse
import json


def count(path):
    with open(path, encoding="utf-8") as f:
        data = json.load(f)["data"]
    paragraphs = questions = 0
    for article in data:
        for paragraph in article["paragraphs"]:
            n = len(paragraph.get("qas", []))
            if n:
                paragraphs += 1
                questions += n
    return paragraphs, questions


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("path")
    args = parser.parse_args()
    paragraphs, questions = count(args.path)
    print(f"paragraphs {paragraphs}")
    print(f"questions {questions}")


if __name__ == "__main__":
    main()
