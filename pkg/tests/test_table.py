import pytest

from qgf4.addcode import quantum_params
from qgf4.bounds import lp_max_distance
from qgf4.table import (
    Seed,
    build_table,
    lower_bounds,
    propagate,
    render_records,
    render_text,
    seed_builders,
    stored_table,
    upper_bounds,
)


@pytest.fixture(scope="module")
def table8():
    return build_table(8)


def test_stored_table_examples():
    t = stored_table()
    assert len(t) == 462
    assert (t[(5, 1)].lower, t[(5, 1)].upper) == (3, 3)
    assert (t[(12, 0)].lower, t[(12, 0)].upper) == (6, 6)
    assert t[(25, 1)].lower == 9
    assert t[(7, 0)].upper_mark == "beta"
    assert all(c.lower <= c.upper for c in t.values())


def test_propagation_rules_from_one_seed():
    best = propagate([Seed("s", (5, 1, 3, True))], 7)
    assert best[(5, 1)].d == 3
    assert best[(6, 1)].d == 3 and best[(7, 1)].d == 3      # extend
    assert best[(5, 0)].d == 3                               # reduce k of a pure code
    assert best[(4, 2)].d == 2 and best[(4, 2)].pure_d == 2  # shorten
    assert best[(4, 1)].d == 2                               # puncture
    assert best[(6, 2)].d == 2
    assert all(c.d >= 1 for c in best.values())


def test_impure_seed_does_not_shorten():
    best = propagate([Seed("s", (6, 1, 3, False))], 6)
    # pure distance 2 comes from the trivial [[6,4,2]], never from the seed
    assert best[(6, 1)].d == 3 and best[(6, 1)].pure_d == 2
    assert best[(6, 0)].d == 2
    assert best[(5, 2)].d <= 2


def test_seeds_verify():
    for label, build in seed_builders(10):
        qp = quantum_params(build())
        assert qp.d >= 2, label


def test_lower_never_exceeds_upper(table8):
    for c in table8:
        assert 1 <= c.lower <= c.upper <= c.n, (c.n, c.k)


def test_lower_monotone_in_n(table8):
    lo = {(c.n, c.k): c.lower for c in table8}
    for (n, k), d in lo.items():
        if k > 0 and (n + 1, k) in lo:
            assert lo[(n + 1, k)] >= d


def test_upper_sources(table8):
    for c in table8:
        if c.upper_source == "lp":
            assert c.upper == lp_max_distance(c.n, c.k)
        else:
            assert c.upper <= lp_max_distance(c.n, c.k)


def test_small_table_matches_stored(table8):
    assert all(c.matches for c in table8)
    assert [c for c in table8 if c.external] == [c for c in table8 if (c.n, c.k) == (7, 0)]


def test_parallel_upper_bounds_agree():
    assert upper_bounds(6, jobs=2) == upper_bounds(6, jobs=1)


def test_lower_bounds_restrict_to_max_n():
    lb = lower_bounds(6)
    assert max(n for n, _ in lb) == 6


def test_renderers(table8):
    text = render_text(table8)
    assert text.splitlines()[-1] == f"cells compared: {len(table8)}  mismatches: 0"
    assert "3^" in text
    rec = render_records(table8).splitlines()
    assert len(rec) == len(table8)
    fields = dict(f.split("=") for f in rec[0].split()[1:])
    assert fields["n"] == "3" and fields["k"] == "0" and fields["match"] == "yes"
