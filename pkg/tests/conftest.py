import json
import random
from pathlib import Path

import pytest

from pcbideal import PcbMatrix, validate

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


def load_golden(name: str) -> PcbMatrix:
    doc = json.loads((GOLDEN / name).read_text())
    return validate(doc["L"])


def golden_path(name: str) -> str:
    return str(GOLDEN / name)


def random_pcb(rng: random.Random, n: int, max_entry: int = 4) -> PcbMatrix:
    """Any choice of positive off-diagonal magnitudes gives a valid matrix
    once the diagonal absorbs the row sum."""
    rows = []
    for i in range(n):
        off = [rng.randint(1, max_entry) for _ in range(n - 1)]
        row = off[:i] + [sum(off)] + off[i:]
        rows.append([v if j == i else -v for j, v in enumerate(row)])
    return validate(rows)


@pytest.fixture
def simplest():
    return load_golden("simplest_n4.json")


@pytest.fixture
def onecomp():
    return load_golden("onecomp_n4.json")
