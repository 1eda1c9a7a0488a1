from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monozeta.semigroup import derive_structure, random_plane_semigroup

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def semigroups(draw, max_g: int = 3, bound: int = 150):
    """Valid plane semigroups, drawn through the seeded generator."""
    g = draw(st.integers(1, max_g))
    seed = draw(st.integers(0, 10**6))
    return derive_structure(random_plane_semigroup(g, bound, seed))


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
