import itertools
from functools import lru_cache

import pytest

from blocklab import catalog
from blocklab.chartab import character_table


@lru_cache(maxsize=None)
def group(name):
    return catalog.load(name)


@lru_cache(maxsize=None)
def table(name):
    return character_table(group(name))


# -- brute-force permutation oracles (0-based image tuples) ---------------------------


def compose(g, h):
    """Apply g first, then h."""
    return tuple(h[g[i]] for i in range(len(g)))


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def perm_index(G, images):
    """Index of the permutation with 0-based ``images`` in a permutation group."""
    return G.elements.index(tuple(images))


def cycle(degree, *cycles):
    """0-based image tuple of a product of 1-based cycles."""
    img = list(range(degree))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def all_perms(degree):
    return list(itertools.permutations(range(degree)))


# -- acceptance summary -------------------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, text = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _criteria.get(num, (text, True))
        _criteria[num] = (text, prev[1] and rep.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, ok = _criteria[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {text}")
