"""Fixture presentations, read from the C++ registry so there is one source of truth."""

import os
import re

_SRC = os.path.join(os.path.dirname(__file__), "..", "src", "builders.cpp")


def fixture_texts():
    src = open(_SRC).read()
    body = src[src.index("kFixtures[]"):]
    body = body[:body.index("};")]
    out = {}
    for m in re.finditer(r'\{"([^"]+)",((?:\s*"[^"]*")+)\}', body):
        out[m.group(1)] = "".join(re.findall(r'"([^"]*)"', m.group(2)))
    return out
