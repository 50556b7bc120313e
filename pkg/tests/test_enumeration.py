import io
from itertools import combinations, product

import pytest

from wbcc import CayleyTable, classify
from wbcc.enumeration import (
    CatalogError,
    IsoClassCatalog,
    OrderCapError,
    SearchConfig,
    are_isomorphic,
    canonical_form,
    catalog_read,
    catalog_write,
    enumerate_classes,
    is_canonical,
    property_mask,
)
from wbcc.enumeration import _flags
from wbcc.enumeration.catalog import dumps, loads
from wbcc.enumeration.census import FILTERS
from wbcc.enumeration.kernel import KERNELS
from wbcc.properties import solidity

from . import oracles
from .conftest import TABLES

# regression constants computed by this package
CLASSES = {1: 1, 2: 2, 3: 5, 4: 32, 5: 427}
BCK_CLASSES = {1: 1, 2: 1, 3: 3, 4: 14, 5: 88}
PROPER_5 = 41


def count(n, *filters, **kw):
    return enumerate_classes(SearchConfig(n, filters=filters, count_only=True, **kw))


@pytest.mark.parametrize("n", sorted(CLASSES))
def test_class_counts(n, census):
    assert len(census[n]) == CLASSES[n]


@pytest.mark.parametrize("n", sorted(BCK_CLASSES))
def test_bck_counts(n):
    assert count(n, "bck") == BCK_CLASSES[n]


def test_proper_counts():
    assert [count(n, "proper") for n in (1, 2, 3)] == [0, 0, 0]
    assert count(4, "proper") == 2
    assert count(5, "proper") == PROPER_5


def test_order_4_proper_classes_are_tables_1_and_2():
    forms = {e.cells for e in enumerate_classes(SearchConfig(4, filters=("proper",))).entries}
    assert forms == {canonical_form(TABLES[1]).cells, canonical_form(TABLES[2]).cells}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_naive_oracle(n, census):
    reps = oracles.bucket_by_isomorphism(oracles.all_weak_bcc_tables(n))
    assert sorted(canonical_form(t) for t in reps) == [canonical_form(t) for t in census[n]]
    for t in census[n]:
        assert sum(oracles.find_isomorphism(r, t) is not None for r in reps) == 1


def _seeded_tables(n):
    free = [(x, y) for x in range(1, n) for y in range(1, n) if x != y]
    for values in product(range(n), repeat=len(free)):
        rows = [[x if y == 0 else 0 for y in range(n)] for x in range(n)]
        rows[0] = [0] * n
        for (x, y), v in zip(free, values):
            rows[x][y] = v
        for v in product(range(n), repeat=n - 1):
            rows[0][1:] = v
            yield rows


def test_order_4_brute_force():
    found = []
    for rows in _seeded_tables(4):
        if oracles.axioms_hold(rows):
            found.append(CayleyTable.from_rows(rows))
    assert len(found) == 158
    reps = oracles.bucket_by_isomorphism(found)
    assert len(reps) == CLASSES[4]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_census_has_no_duplicates(n, census):
    for a, b in combinations(census[n], 2):
        assert not are_isomorphic(a, b)
        assert oracles.find_isomorphism(a, b) is None
    assert all(is_canonical(t) for t in census[n])


@pytest.mark.parametrize("name", sorted(FILTERS))
@pytest.mark.parametrize("n", [3, 4])
def test_filters_commute_with_census(name, n, census):
    f = FILTERS[name]
    expected = [t for t in census[n] if f(t)]
    got = enumerate_classes(SearchConfig(n, filters=(name,))).tables()
    assert got == expected


def test_filter_predicates():
    assert FILTERS["proper"](TABLES[4]) and not FILTERS["proper"](TABLES[5])
    assert FILTERS["bci"](TABLES[5]) and FILTERS["bcc"](TABLES[3])
    assert FILTERS["solid"](TABLES[4]) and FILTERS["right_solid"](TABLES[1])
    assert FILTERS["supersolid"](TABLES[5])


def test_worker_count_does_not_change_output():
    one = enumerate_classes(SearchConfig(5, worker_count=1))
    two = enumerate_classes(SearchConfig(5, worker_count=2))
    assert dumps(one) == dumps(two)
    assert count(5, "proper", worker_count=3) == PROPER_5


@pytest.mark.skipif("compiled" not in KERNELS, reason="extension not built")
@pytest.mark.parametrize(
    "flags",
    [
        _flags.LEXMIN,
        0,
        _flags.LEXMIN | _flags.NOT_BCC,
        _flags.LEXMIN | _flags.BCC,
        _flags.LEXMIN | _flags.BCI,
        _flags.LEXMIN | _flags.SOLID,
        _flags.LEXMIN | _flags.BCC | _flags.BCI,
    ],
)
def test_kernels_agree(flags):
    n = 5 if flags & _flags.LEXMIN else 4
    compiled = KERNELS["compiled"](n, flags)
    python = KERNELS["python"](n, flags)
    assert compiled == python


@pytest.mark.skipif("compiled" not in KERNELS, reason="extension not built")
def test_kernels_agree_on_prefixes():
    for backend in ("compiled", "python"):
        prefixes, _ = KERNELS[backend](5, _flags.LEXMIN, (), 4)
        assert prefixes == KERNELS["python"](5, _flags.LEXMIN, (), 4)[0]


def test_pure_python_backend_counts():
    assert count(4, backend="python") == CLASSES[4]
    assert count(5, "proper", "solid", backend="python") == 1


def test_unknown_backend():
    with pytest.raises(ValueError):
        count(3, backend="gpu")


def test_catalog_round_trip(tmp_path, census):
    cat = enumerate_classes(SearchConfig(4))
    path = tmp_path / "c4.txt"
    catalog_write(cat, path)
    text = path.read_text()
    back = catalog_read(path, expected_order=4)
    assert back == cat and back.tables() == census[4]
    buf = io.StringIO()
    catalog_write(back, buf)
    assert buf.getvalue() == text
    for e in back.entries:
        assert e.mask == property_mask(CayleyTable(4, e.cells))


def test_catalog_filters_recorded():
    cat = enumerate_classes(SearchConfig(4, filters=("proper",)))
    text = dumps(cat)
    assert "# filters: proper" in text
    assert loads(text).filters == ("proper",)


def test_empty_catalog_is_valid():
    cat = enumerate_classes(SearchConfig(3, filters=("proper",)))
    assert len(cat) == 0
    assert loads(dumps(cat), 3) == cat


def test_catalog_rejects_axiom_violation():
    bad = "# weak BCC-algebras up to isomorphism\norder=2\n0,0,1,1;0\n"
    with pytest.raises(CatalogError) as exc:
        loads(bad)
    assert exc.value.line == 3
    assert "axiom" in str(exc.value)


def test_catalog_rejects_axiom_i_violation():
    # passes (ii)-(iv) but not (i)
    rows = [[0, 0, 0], [1, 0, 2], [2, 1, 0]]
    from wbcc import check_axioms

    report = check_axioms(CayleyTable.from_rows(rows))
    assert report.failed() == ("i",)
    text = "order=3\n" + ",".join(str(v) for r in rows for v in r) + ";0\n"
    with pytest.raises(CatalogError, match=r"axiom \(i\)") as exc:
        loads(text)
    assert exc.value.line == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("order=x\n", 1),
        ("order=2\n0,0,1;0\n", 2),
        ("order=2\n0,0,1,0;zz\n", 2),
        ("order=2\n0,0,1,0;ff7\n0,0,1,0;ff7\n", 3),
        ("order=2\n0,0,1,0;ff\n", 2),
        ("order=2\n0,0,3,0;1\n", 2),
    ],
)
def test_catalog_errors(text, line):
    with pytest.raises(CatalogError) as exc:
        loads(text)
    assert exc.value.line == line


def test_catalog_rejects_non_canonical_and_wrong_order():
    t = TABLES[1].relabel((0, 2, 1, 3))
    assert not is_canonical(t)
    text = "order=4\n" + ",".join(map(str, t.cells)) + f";{property_mask(t):x}\n"
    with pytest.raises(CatalogError, match="canonical"):
        loads(text)
    with pytest.raises(CatalogError, match="order mismatch"):
        loads(dumps(enumerate_classes(SearchConfig(2))), expected_order=3)


def test_order_cap():
    with pytest.raises(OrderCapError):
        enumerate_classes(SearchConfig(7))
    assert enumerate_classes(SearchConfig(3, max_order=2, allow_large=True, count_only=True)) == 5
    with pytest.raises(ValueError):
        SearchConfig(0)


def test_canonical_form_properties():
    t4 = TABLES[4]
    form = canonical_form(t4)
    assert is_canonical(form.table)
    assert canonical_form(t4.relabel((0, 3, 4, 5, 1, 2))) == form
    assert not are_isomorphic(TABLES[1], TABLES[2])
    assert not are_isomorphic(TABLES[1], TABLES[4])
    assert oracles.find_isomorphism(t4, form.table) is not None


def test_masks_match_flags(census):
    for t in census[4]:
        c, s = classify(t), solidity(t)
        m = property_mask(t)
        assert bool(m & 1) == c.is_bcc
        assert bool(m & 2) == c.is_bci
        assert bool(m & 16) == s.solid


@pytest.mark.slow
def test_order_6_census():
    assert count(6) == 14340


def test_order_5_proper_solid_algebra_is_genuine():
    rows = [[0, 0, 0, 3, 3], [1, 0, 0, 3, 3], [2, 1, 0, 4, 4], [3, 3, 3, 0, 0], [4, 3, 3, 1, 0]]
    assert oracles.axioms_hold(rows)
    n = 5
    r = rows
    assert any(r[0][x] != 0 for x in range(n))
    assert any(r[r[x][y]][z] != r[r[x][z]][y] for x in range(n) for y in range(n) for z in range(n))
    # branches straight from the definition: x lies above the minimal a with a*x = 0
    minimal = [a for a in range(n) if all(y == a or r[y][a] != 0 for y in range(n))]
    branch = {x: next(a for a in minimal if r[a][x] == 0) for x in range(n)}
    for x in range(n):
        for y in range(n):
            if branch[x] == branch[y]:
                assert all(r[r[x][y]][z] == r[r[x][z]][y] for z in range(n))
    cat = enumerate_classes(SearchConfig(5, filters=("proper", "solid")))
    assert cat.tables() == [canonical_form(CayleyTable.from_rows(rows)).table]
