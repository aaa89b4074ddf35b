import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hsforce.symbolic import TailSeq, is_shift_maximal, rotations  # noqa: E402


def rotation_maximal(w: str) -> bool:
    top = TailSeq.periodic(w)
    return all(TailSeq.periodic(r) <= top for r in rotations(w))


def strictly_maximal(w: str) -> bool:
    """Shift-maximal and both one-symbol closures are rotation-maximal."""
    return is_shift_maximal(w) and rotation_maximal(w + "0") and rotation_maximal(w + "1")


def words(max_len: int):
    for n in range(1, max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


@pytest.fixture(scope="session")
def strict_words():
    return [w for w in words(10) if strictly_maximal(w)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[n])
