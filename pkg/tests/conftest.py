import os
import sys
from itertools import product

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def families_closed(n):
    """Every family of subsets of n points closed under union and intersection that
    contains the empty and full sets; an oracle independent of FiniteSpace."""
    subsets = list(range(1 << n))
    full = (1 << n) - 1
    out = []
    for choice in product((0, 1), repeat=len(subsets)):
        fam = {s for s, c in zip(subsets, choice) if c}
        if 0 not in fam or full not in fam:
            continue
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(tuple(sorted(fam)))
    return out
