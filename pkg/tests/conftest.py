from __future__ import annotations

from hypothesis import strategies as st

from hookforge.partition import Partition


@st.composite
def partitions(draw, max_size: int = 12, max_parts: int = 6) -> Partition:
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_parts))
    parts.sort(reverse=True)
    total, kept = 0, []
    for p in parts:
        if total + p > max_size:
            break
        kept.append(p)
        total += p
    kept.sort(reverse=True)
    return Partition(tuple(kept))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
