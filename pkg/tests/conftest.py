import pytest

from dercat.objects import A, A1, A2, B, IndObj
from dercat.order import Kind, LPoint, PosetSpec


def pt(z: int, t: int = 0) -> LPoint:
    return LPoint(t, z)


def a(i: int, j: int, shift: int = 0, t: int = 0, t2: int | None = None) -> IndObj:
    return IndObj(A(LPoint(t, i), LPoint(t if t2 is None else t2, j)), shift)


def b(i: int, j: int, shift: int = 0, t: int = 0) -> IndObj:
    return IndObj(B(LPoint(t, i), LPoint(t, j)), shift)


def a1(j: int, shift: int = 0, t: int = 0) -> IndObj:
    return IndObj(A1(LPoint(t, j)), shift)


def a2(j: int, shift: int = 0, t: int = 0) -> IndObj:
    return IndObj(A2(LPoint(t, j)), shift)


@pytest.fixture
def spec_a() -> PosetSpec:
    return PosetSpec(Kind.A, ("t0",), (-4, 4))


@pytest.fixture
def spec_a2() -> PosetSpec:
    return PosetSpec(Kind.A, ("t0", "t1"), (-3, 3))


@pytest.fixture
def spec_d() -> PosetSpec:
    return PosetSpec(Kind.D, ("t0",), (-4, 4))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        name, ok, detail = RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d} {name}: {detail}")
