import math

import pytest

from simplelift.growth import (CSV_COLUMNS, CapExceeded, GrowthWitness, NotReached, TooSmallL,
                               compact_witness, cusped_witness, f_S_lower, find_threshold_n0,
                               growth_table, length_defect, table_to_csv)
from simplelift.hyperbolic import PantsMetric
from simplelift.words import gamma_n


def test_f_S_lower():
    assert f_S_lower(0) == (1, gamma_n(0))
    assert f_S_lower(4)[0] == 5
    assert f_S_lower(10)[0] == 11


def test_compact_witness_example():
    w = compact_witness(120, 2, 0.5, 2, 2, 1)
    assert w.n == 48
    assert w.length_certificate == 2 + 96 + 2 == 100
    assert w.f_lower == 48
    assert w.degree_bound == 49
    assert w.verify()


def test_compact_too_small():
    with pytest.raises(TooSmallL) as exc:
        compact_witness(0.1, 2, 0.5, 2, 2, 1)
    e = exc.value
    # witnesses for n = 4 start at the certificate 4 + 2*4 = 12; every L >= 18 works
    assert e.min_L == 12
    assert e.stable_L == 18
    compact_witness(12, 2, 0.5, 2, 2, 1)
    for L in (18, 18.5, 19.9, 20, 33.3, 77):
        assert compact_witness(L, 2, 0.5, 2, 2, 1).verify()
    with pytest.raises(TooSmallL):
        compact_witness(13, 2, 0.5, 2, 2, 1)


def test_compact_rate():
    B, eps = 2.0, 0.5
    for L in (1e3, 1e5, 1e7):
        w = compact_witness(L, B, eps, 1.5, 2.0, 3.0)
        assert w.f_lower / L == pytest.approx(1 / (B + eps))
        assert w.n + 1 >= L / (B + eps)
        assert w.f_lower >= L / (B + eps) - 1


def test_compact_preconditions():
    with pytest.raises(ValueError):
        compact_witness(100, 2, 0.5, 3, 1, 1)
    with pytest.raises(ValueError):
        compact_witness(100, 2, 0, 1, 1, 1)


def test_cusped_witness_example():
    w = cusped_witness(30, 1, 1, 2)
    assert w.n == 22026 == math.floor(math.e ** 10)
    assert w.length_certificate == pytest.approx(3 + 2 * math.log(22026))
    assert w.length_certificate == pytest.approx(23.0, abs=0.01)
    assert w.verify()


def test_cusped_exact_mode():
    w = cusped_witness(30, 1, exact=True)
    assert w.length_certificate == pytest.approx(2 * math.acosh(1 + 2 * 22026), abs=1e-9)
    assert w.verify()
    assert w.mode == "three-punctured"


def test_cusped_too_small_and_cap():
    with pytest.raises(TooSmallL) as exc:
        cusped_witness(1, 1, 1, 2)
    assert cusped_witness(exc.value.stable_L + 1e-9, 1, 1, 2).verify()
    with pytest.raises(CapExceeded):
        cusped_witness(1000, 1, 1, 2)


def test_witness_roundtrip():
    w = compact_witness(120, 2, 0.5, 2, 2, 1)
    assert GrowthWitness.from_dict(w.to_dict()) == w


def test_threshold():
    n0 = find_threshold_n0(1.0)
    assert n0 == 17
    # scan oracle
    holds = [2 * math.acosh(1 + 2 * n) <= 3 * math.log(n) for n in range(1, 200)]
    assert holds[n0 - 1] and not holds[n0 - 2] and all(holds[n0 - 1:])
    with pytest.raises(NotReached):
        find_threshold_n0(0.1)


def test_defect_limit():
    assert float(length_defect(10 ** 6)) == pytest.approx(2 * math.log(4), abs=1e-3)
    d = length_defect([10, 100, 1000, 10 ** 4])
    assert all(d[:-1] > d[1:])


def test_table_rows():
    rows = growth_table(6, exhaustive_cap=6)
    assert rows[0].intersection == 0 and rows[0].deg_lower == 1 and rows[0].deg_exhaustive == 1
    assert rows[0].length == 0
    r2 = rows[2]
    assert (r2.n, r2.intersection, r2.deg_lower, r2.deg_exhaustive) == (2, 2, 3, 3)
    assert r2.length == pytest.approx(2 * math.acosh(5))
    inter = [r.intersection for r in rows]
    assert inter == sorted(inter)
    assert [r.deg_exhaustive for r in rows] == [n + 1 for n in range(7)]


def test_table_csv():
    text = table_to_csv(growth_table(3, "pants", PantsMetric(1, 1, 1)))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 5
    assert lines[1].split(",")[3] == ""


def test_table_cusped_mode():
    rows = growth_table(3, "cusped", PantsMetric(1, 0, 1), s=0.5, B=2)
    assert rows[0].certificate is None
    for r in rows[1:]:
        assert r.length <= r.certificate
    with pytest.raises(ValueError):
        growth_table(3, "cusped", PantsMetric(1, 1, 1))
