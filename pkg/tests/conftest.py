from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from formalfj.cyclotomic import CycNumber

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small, st.integers(min_value=1, max_value=5))


@st.composite
def cyc_numbers(draw, conductors=(1, 3, 4, 5, 8, 12)):
    n = draw(st.sampled_from(conductors))
    deg = len(CycNumber.zeta(n).coords)
    coords = draw(st.lists(rationals, min_size=deg, max_size=deg))
    return CycNumber(coords, n)


from functools import lru_cache  # noqa: E402


@lru_cache(maxsize=None)
def solver_basis(k, M=3, N=4, rep="trivial"):
    from zoo import rep_by_name
    from formalfj.siegel import symmetric_space
    return tuple(symmetric_space(k, rep_by_name(rep), M, N, stabilize=False).basis)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %d: %s  %s" % (n, "PASS" if ok else "FAIL", text))
