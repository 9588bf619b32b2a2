"""Exit criteria; one test per criterion, each summarized at the end of the run."""

import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistroots import autos, braid, polygon, rootcalc, symplectic
from twistroots.matrix import IntegerMatrix
from twistroots.words import concat, reduce

from conftest import endomorphisms, letters, naive_reduce, words
from test_words import _all_normal_forms


@pytest.fixture
def criterion(record_property):
    def mark(num, title):
        record_property("criterion", num)
        record_property("title", title)

    return mark


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def test_01_paper_cube(criterion):
    criterion(1, "displayed 4x4 matrix cubes to the elementary matrix")
    root = IntegerMatrix.from_rows([[1, 0, 0, 1], [0, 1, 0, 0], [0, 1, -1, 1], [0, 1, -1, 0]])
    target = IntegerMatrix.from_rows([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert root == symplectic.PAPER_CUBE_ROOT and target == symplectic.PAPER_CUBE_TARGET
    with Timer() as t:
        ok = symplectic.paper_cube_example(root, target)
    assert ok
    assert t.seconds < 1e-3


def test_02_nielsen_root(criterion):
    criterion(2, "free-group root squares to the Nielsen transformation, n = 3..8")
    with Timer() as t:
        results = {n: autos.power(autos.nielsen_root(n), 2) == autos.nielsen_transformation(n).forward for n in range(3, 9)}
    assert all(results.values()), results
    assert t.seconds < 10e-3


def test_03_braid_chain_relation(criterion):
    criterion(3, "braid chain relation and centrality, k = 1..7")
    budget = braid.LetterBudget()
    with Timer() as t:
        chain = {k: braid.verify_chain_relation(k, budget) for k in range(1, 8)}
        central = {k: braid.verify_centrality(k, budget) for k in range(1, 8)}
    assert all(chain.values()), chain
    assert all(central.values()), central
    assert budget.used <= braid.DEFAULT_WORD_BUDGET
    assert t.seconds < 60


def test_04_root_identity_two_shadows(criterion):
    criterion(4, "root identity by exponent calculus and in Sp(2g,Z), g = 2..10")
    with Timer() as t:
        for g in range(2, 11):
            factors, free_rank = rootcalc.presentation_invariants(g)
            assert factors == (1,) and free_rank == 1, g
            assert rootcalc.verify_root_identity(g), g
            assert symplectic.verify_homological_root(g), g
    assert t.seconds < 5


def test_05_homological_chain(criterion):
    criterion(5, "W^(2g-1) = T_d^2 on homology with [d] primitive, g = 2..10")
    with Timer() as t:
        for g in range(2, 11):
            d = symplectic.verify_homological_chain(g)
            assert d.is_primitive(), g
            w = symplectic.chain_word_matrix(g)
            assert w ** (2 * g - 1) == symplectic.transvection(d) ** 2, g
    assert t.seconds < 5


def test_06_geometric_construction(criterion):
    criterion(6, "polygon genus, vertex orbits, order, rotation numbers, ledger, g = 2..12")
    failures = {}
    with Timer() as t:
        for g in range(2, 13):
            n = 2 * g - 1
            inv = polygon.surface_invariants(polygon.build_polygon(g))
            rot = polygon.rotation_map(g)
            ledger = rootcalc.geometric_ledger(g)
            checks = {
                "genus": inv.genus == g - 1,
                "vertex_orbits": inv.vertex_orbits == 2,
                "order": rot.order_on_surface == n,
                "rotation_numbers": rot.fixed_point_rotation_numbers == (Fraction(g, n), Fraction(g - 1, n)),
                "ledger": ledger.net == 1,
            }
            bad = [name for name, ok in checks.items() if not ok]
            if bad:
                failures[g] = (bad, [str(r) for r in rot.fixed_point_rotation_numbers])
    assert t.seconds < 1
    assert not failures, f"failing genera: {failures}"


def test_07_half_twist_roots(criterion):
    criterion(7, "half-twist ledgers g = 2..10 and witnesses n = 5..40")
    with Timer() as t:
        for g in range(2, 11):
            ledger = rootcalc.half_twist_ledger(g)
            assert ledger.target == Fraction(1, 2) and rootcalc.ledger_check(ledger), g
        for n in range(5, 41):
            w = rootcalc.half_twist_witness(n)
            assert w.q % 2 == 1 and rootcalc.ledger_check(w.ledger()), n
    assert t.seconds < 1


def test_08_sl_nielsen_matrices(criterion):
    criterion(8, "SL(n,Z) square roots of the elementary matrix")
    with Timer() as t:
        for n in range(3, 11):
            r = symplectic.nielsen_sl_root(n)
            assert r.determinant() == 1 and r ** 2 == symplectic.nielsen_elementary(n), n
        for n in range(3, 9):
            a = autos.abelianize(autos.nielsen_root(n).forward)
            assert a ** 2 == symplectic.nielsen_elementary(n), n
    assert t.seconds < 10e-3


def test_09_stabilization(criterion):
    criterion(9, "stabilized cube roots in dimensions 6, 8, 10")
    with Timer() as t:
        for dim in (6, 8, 10):
            root = symplectic.stabilize(symplectic.PAPER_CUBE_ROOT, dim)
            target = symplectic.stabilize(symplectic.PAPER_CUBE_TARGET, dim)
            assert root ** 3 == target, dim
    assert t.seconds < 10e-3


def test_10_torus_primitivity(criterion):
    criterion(10, "no roots of the torus twist with entries <= 50, powers <= 6")
    with Timer() as t:
        findings = symplectic.sl2_root_search(50, 6)
    assert findings == []
    assert t.seconds < 30


@settings(max_examples=300, deadline=None)
@given(letters(2, 16))
def _confluence(raw):
    raw = tuple(tuple(l) for l in raw)
    forms = _all_normal_forms(raw)
    assert forms == {tuple(tuple(l) for l in reduce(2, raw).letters)}
    assert list(reduce(2, raw).letters) == naive_reduce(raw)


@settings(max_examples=1000, deadline=None)
@given(endomorphisms(3), words(3, 24), words(3, 24))
def _homomorphism(f, a, b):
    assert autos.apply(f, concat(a, b)) == concat(autos.apply(f, a), autos.apply(f, b))


@settings(max_examples=1000, deadline=None)
@given(endomorphisms(3, 5), endomorphisms(3, 5), words(3, 8))
def _functoriality(f, g, x):
    h = autos.compose(f, g)
    assert autos.apply(h, x) == autos.apply(f, autos.apply(g, x))
    assert autos.abelianize(h) == autos.abelianize(f) @ autos.abelianize(g)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda g: st.lists(st.integers(-5, 5), min_size=2 * g, max_size=2 * g)))
def _transvections(v):
    cls = symplectic.HomologyClass(tuple(v))
    t = symplectic.transvection(cls)
    assert symplectic.is_symplectic(t) and t.determinant() == 1
    assert symplectic.extract_twist_class(t ** 2) in (cls, -cls)


def test_11_property_suites(criterion):
    criterion(11, "confluence, homomorphism, functoriality, transvection properties")
    _confluence()
    _homomorphism()
    _functoriality()
    _transvections()
