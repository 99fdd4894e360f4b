from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from soliton_lab.catalog import CatalogError, get_family, instantiate

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


def random_instance(fid: str, rng: random.Random, span: int = 6, tries: int = 200):
    """A rational instance of ``fid`` at random small parameters."""
    fam = get_family(fid)
    for _ in range(tries):
        p = {k: Fraction(rng.randint(-span, span), rng.randint(1, 4)) for k in fam.params}
        if "eps" in p:
            p["eps"] = Fraction(rng.choice([1, -1]))
        try:
            return instantiate(fid, p)
        except (CatalogError, ZeroDivisionError):
            continue
    raise RuntimeError(f"no admissible random point for {fid}")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
