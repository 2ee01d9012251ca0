import pytest

from ehrcomb.poset import (
    Poset,
    adjoin_max,
    bicomb_over,
    comb_over,
    make_antichain,
    make_chain,
    make_comb,
    stirling_poset,
)

_acceptance_lines = []


def small_posets():
    """Small building blocks for combs and bicombs."""
    return [
        Poset(0),
        make_chain(1),
        make_chain(2),
        make_antichain(2),
        make_chain(3),
        make_antichain(3),
        Poset(3, [(0, 2), (1, 2)]),  # V: two below one
        Poset(3, [(0, 1), (0, 2)]),  # wedge: one below two
    ]


def build_corpus(max_size=7):
    posets = []
    for m in range(max_size + 1):
        posets += [make_chain(m), make_antichain(m)]
    blocks = small_posets()
    for p in blocks:
        for n in range(1, max_size + 1):
            if n * (p.size + 1) <= max_size:
                posets.append(comb_over(p, n))
    for p in blocks:
        for r in blocks:
            for n in range(1, max_size + 1):
                if n * (p.size + r.size + 1) <= max_size:
                    posets.append(bicomb_over(p, r, n))
    for q in list(posets):
        if q.size < max_size:
            posets.append(adjoin_max(q))
    for k in range(1, max_size + 1):
        for r in range(1, max_size + 1):
            if k * r <= max_size:
                posets.append(stirling_poset(k, r))
    seen, out = set(), []
    for q in posets:
        if q not in seen and q.size <= max_size:
            seen.add(q)
            out.append(q)
    return out


@pytest.fixture(scope="session")
def corpus():
    return build_corpus(7)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance_lines.append(f"{'PASS' if report.passed else 'FAIL'}  {name}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
