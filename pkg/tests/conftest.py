import random

import pytest
from hypothesis import strategies as st

from twistroots import autos
from twistroots.words import Letter, reduce


def naive_reduce(letters):
    """Repeatedly scan for the first cancelling pair and delete it."""
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            a, b = letters[i], letters[i + 1]
            if a[0] == b[0] and a[1] == -b[1]:
                del letters[i : i + 2]
                changed = True
                break
    return [Letter(*l) for l in letters]


def letters(rank, max_size):
    return st.lists(
        st.tuples(st.integers(1, rank), st.sampled_from([1, -1])), max_size=max_size
    )


def words(rank=3, max_size=64):
    return letters(rank, max_size).map(lambda ls: reduce(rank, ls))


def endomorphisms(rank=3, max_size=6):
    return st.lists(words(rank, max_size), min_size=rank, max_size=rank).map(
        lambda imgs: autos.Endomorphism(rank, tuple(imgs))
    )


def elementary_automorphisms(rank):
    """Nielsen moves with their hand-written inverses."""
    out = []
    for i in range(1, rank + 1):
        gens = [f"x{k}" for k in range(1, rank + 1)]
        inv = list(gens)
        inv[i - 1] = f"x{i}^-1"
        out.append(autos.Automorphism(autos.endomorphism(rank, inv), autos.endomorphism(rank, inv)))
        for j in range(1, rank + 1):
            if i == j:
                continue
            for e in (1, -1):
                fwd = list(gens)
                bwd = list(gens)
                fwd[i - 1] = f"x{i}*x{j}^{e}"
                bwd[i - 1] = f"x{i}*x{j}^{-e}"
                out.append(autos.Automorphism(autos.endomorphism(rank, fwd), autos.endomorphism(rank, bwd)))
    return out


def automorphisms(rank=3, max_moves=4):
    moves = elementary_automorphisms(rank)
    ident = autos.identity_automorphism(rank)

    def build(seq):
        f = ident
        for m in seq:
            f = autos.compose_auto(f, m)
        return f

    return st.lists(st.sampled_from(moves), max_size=max_moves).map(build)


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call":
                continue
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", props["title"]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, status, title in sorted(lines):
            terminalreporter.write_line(f"criterion {num:>2}: {status}  {title}")
