from fractions import Fraction

import pytest

from wehrl_lab.domains import (CLASSICAL_DIMENSION, PRESETS, DomainParams,
                               WeightSpec, derived_invariants, get_domain,
                               hc_admissible, preset_table, so_2n, su_pq)


def test_derived_invariants_disc():
    d = PRESETS["disc"]
    assert derived_invariants(d) == (2, 1, 1)


def test_derived_invariants_match_classical_dimensions():
    for name, dim in CLASSICAL_DIMENSION.items():
        assert PRESETS[name].N == dim, name


def test_genus_values():
    assert PRESETS["Sp(2,R)"].p == 3
    assert PRESETS["SU(2,2)"].p == 4
    assert PRESETS["E7"].p == 18


def test_sp2_so23_same_parameters():
    a, b = PRESETS["Sp(2,R)"], PRESETS["SO(2,3)"]
    assert (a.r, a.a, a.b) == (b.r, b.a, b.b) == (2, 1, 0)


def test_admissibility_threshold():
    d = PRESETS["Sp(2,R)"]  # p = 3
    assert not hc_admissible(d, Fraction(2))
    assert hc_admissible(d, Fraction(5, 2))
    assert hc_admissible(d, WeightSpec(Fraction(3)))


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        DomainParams("bad", r=0, a=1, b=0)
    with pytest.raises(ValueError):
        DomainParams("bad", r=2, a=-1, b=0)
    with pytest.raises(ValueError):
        WeightSpec(Fraction(0))
    with pytest.raises(ValueError):
        so_2n(2)


def test_su_pq_orders_arguments():
    assert su_pq(1, 3) == su_pq(3, 1)


def test_get_domain_parsing():
    assert get_domain("disc").family_label == "SU(1,1)"
    custom = get_domain("2,1,0")
    assert (custom.r, custom.a, custom.b) == (2, 1, 0)
    with pytest.raises(KeyError):
        get_domain("nope")


def test_preset_table_columns():
    rows = preset_table()
    assert {"family", "r", "a", "b", "p", "N", "n1"} <= set(rows[0])
    assert len(rows) == len({r["family"] for r in rows})
