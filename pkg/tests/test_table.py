import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbcc import CayleyTable, NotWeakBCCError, TableError, check_axioms, classify, phi, phi_square
from wbcc.table import axiom_violated, bci_violated

from .conftest import BROKEN, TABLES

ONE = CayleyTable(1, (0,))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_reference_tables_satisfy_axioms(k):
    report = check_axioms(TABLES[k])
    assert report.ok
    assert all(w is None for w in report.witness.values())


def test_trivial_algebra():
    assert check_axioms(ONE).ok
    assert classify(ONE).is_bck


def test_axiom_iv_witness_on_modified_table_1():
    report = check_axioms(BROKEN)
    assert not report.holds["iv"]
    assert report.witness["iv"] == (0, 1)
    # 1*0 = 0 also breaks x*0 = x
    assert report.witness["iii"] == (1,)
    assert report.holds["i"] and report.holds["ii"]


def test_failed_axioms_carry_reevaluating_witnesses():
    bad = CayleyTable.from_rows([[1, 0, 2], [1, 1, 0], [0, 2, 0]])
    report = check_axioms(bad)
    assert not report.ok
    for axiom in report.failed():
        assert axiom_violated(bad, axiom, report.witness[axiom])


def test_classify_table_3_proper_bcc():
    c = classify(TABLES[3])
    assert c.is_bcc and not c.is_bci and c.is_proper_bcc
    assert not c.is_proper_weak and not c.is_bck


def test_classify_table_5_bci():
    c = classify(TABLES[5])
    assert c.is_bci and not c.is_bcc
    assert c.bcc_witness == (2,)


def test_classify_table_4_proper_weak_witness():
    c = classify(TABLES[4])
    assert c.is_proper_weak
    assert c.bci_witness == (5, 3, 2)
    assert bci_violated(TABLES[4], c.bci_witness)


def test_classify_tables_1_2_proper_weak():
    for k in (1, 2):
        assert classify(TABLES[k]).is_proper_weak
    assert classify(TABLES[1]).bci_witness == (3, 2, 1)


def test_classify_invalid_table_all_false():
    assert not any(classify(BROKEN).flags().values())


def test_phi_examples():
    t4 = TABLES[4]
    assert phi(t4, 3) == 4
    assert phi_square(t4, 3) == 2
    for t in TABLES.values():
        assert phi(t, 0) == 0


def test_phi_rejects_invalid_algebra():
    with pytest.raises(NotWeakBCCError):
        phi(BROKEN, 1)


def test_phi_square_laws(small, census):
    for t in small + census[5]:
        p2 = [phi_square(t, x) for x in t.elements]
        for x in t.elements:
            assert t(p2[x], x) == 0
            for y in t.elements:
                assert p2[t(x, y)] == t(p2[x], p2[y])


@pytest.mark.parametrize(
    "bad",
    [
        lambda: CayleyTable(2, (0, 1, 2, 0)),
        lambda: CayleyTable(2, (0, 1, 1)),
        lambda: CayleyTable(0, ()),
        lambda: CayleyTable.from_rows([[0, 1], [1]]),
    ],
)
def test_malformed_tables_rejected(bad):
    with pytest.raises(TableError):
        bad()


def test_relabel_is_isomorphic_copy():
    t = TABLES[4]
    perm = (0, 5, 2, 3, 4, 1)
    r = t.relabel(perm)
    for x in t.elements:
        for y in t.elements:
            assert r(perm[x], perm[y]) == perm[t(x, y)]
    with pytest.raises(ValueError):
        t.relabel((1, 0, 2, 3, 4, 5))


@st.composite
def tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return CayleyTable(n, tuple(cells))


@st.composite
def near_algebras(draw, max_n=4):
    """Tables with the diagonal and column 0 forced, so the axioms hold often."""
    n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    for x in range(n):
        cells[x * n] = x
        cells[x * n + x] = 0
    return CayleyTable(n, tuple(cells))


@settings(max_examples=300, deadline=None)
@given(st.one_of(tables(), near_algebras()))
def test_classification_flags_consistent(t):
    c = classify(t)
    assert c.is_bck == (c.is_bcc and c.is_bci)
    assert c.is_proper_weak == (c.is_weak_bcc and not c.is_bcc and not c.is_bci)
    assert c.is_proper_bcc == (c.is_bcc and not c.is_bci)
    if not c.is_weak_bcc:
        assert not any(c.flags().values())


@settings(max_examples=300, deadline=None)
@given(st.one_of(tables(), near_algebras()))
def test_check_axioms_deterministic_and_witnesses_valid(t):
    check_axioms.cache_clear()
    first = check_axioms(t)
    check_axioms.cache_clear()
    second = check_axioms(CayleyTable(t.n, t.cells))
    assert first == second
    for axiom in first.failed():
        assert axiom_violated(t, axiom, first.witness[axiom])
