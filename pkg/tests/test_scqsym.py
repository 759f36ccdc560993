import itertools

import pytest

from parkhopf import scqsym as SC
from parkhopf import sqsym as S
from parkhopf import words as W
from parkhopf.coeffs import primitive_dims, reduced_coproduct

from helpers import lin

seg = W.seg


def _strs(xs):
    return sorted(str(x) for x in xs)


def test_weight_and_glue():
    assert SC.weight(seg("12|1")) == 4
    assert str(SC.glue(seg("1|2"), seg("31"))) == "1|51"


def test_detassmax_example():
    assert SC.detassmax(seg("11|2")) == seg("12|33")


def test_psev_example():
    assert SC.psev(seg("12|33")) == seg("11|2")


def test_segmented_augshuffle_examples():
    assert _strs(SC.segmented_augshuffle(seg("1"), seg("2|1"))) == _strs(
        map(seg, ["12|1", "3|1", "2|11", "2|2", "2|1|1"]))
    assert _strs(SC.segmented_augshuffle(seg("1"), seg("21"))) == _strs(
        map(seg, ["121", "31", "2|11", "2|2", "21|1"]))
    assert SC.segmented_augshuffle(SC.EMPTY, seg("2|1")) == [seg("2|1")]


def test_segperm_shuffle_examples():
    assert _strs(SC.segperm_shuffle(seg("2|1"), seg("21"))) == _strs(
        map(seg, ["2|143", "24|13", "243|1", "4|2|13", "4|23|1", "43|2|1"]))
    assert _strs(SC.segperm_shuffle(seg("1"), seg("1"))) == ["12", "2|1"]


def test_repr_segperm_recovers_composition():
    for n in range(1, 5):
        for c in W.segmented_compositions(n):
            assert SC.segmented_descent_composition(SC.repr_segperm(c)) == c


def test_fsc22_in_qsc():
    assert SC.fsc_to_qsc(SC.FSC("2|2")) == lin(SC.QSC, "11|11 11|2 2|11 2|2")


def test_fsc_round_trip():
    for c in W.segmented_compositions(4):
        assert SC.qsc_to_fsc(SC.fsc_to_qsc(SC.FSC(c))) == SC.FSC(c)


def test_psc_maps_into_sqsym():
    for x, y in itertools.product(W.segmented_compositions(2), W.segmented_compositions(1)):
        assert SC.psc_to_ps(SC.PSC(x) * SC.PSC(y)) == SC.psc_to_ps(SC.PSC(x)) * SC.psc_to_ps(SC.PSC(y))


def test_ps_to_psc_inverts_psc_to_ps():
    for c in W.segmented_compositions(3):
        assert SC.ps_to_psc(SC.psc_to_ps(SC.PSC(c))) == SC.PSC(c)


def test_ps_to_psc_rejects_packed_only_terms():
    with pytest.raises(ValueError):
        SC.ps_to_psc(S.PS("12|22"))


def test_rsc_product_has_three_terms():
    for x, y in itertools.product(W.segmented_compositions(2), repeat=2):
        assert len(SC.RSC(x) * SC.RSC(y)) == 3


def test_generators():
    assert [len(SC.generators(n)) for n in range(1, 6)] == [1, 2, 4, 8, 16]
    assert _strs(SC.generators(3)) == ["1|1|1", "1|2", "2|1", "3"]


def test_dimension_recursion():
    dims = [len(W.segmented_compositions(n)) for n in range(1, 9)]
    assert all(b == 3 * a for a, b in zip(dims, dims[1:]))


def test_corrected_commutation_relation():
    x = SC.QSC("1")
    y = lin(SC.QSC, "2 11 -1|1")
    assert not (x * y - y * x).as_dict()


def test_corrected_element_is_primitive():
    assert not reduced_coproduct(lin(SC.QSC, "2 11 -1|1")).as_dict()


def test_bracketed_element_mixes_weights():
    x = lin(SC.QSC, "12 -1|2 11")
    assert {SC.weight(k) for k in x.as_dict()} == {2, 3}


def test_commuting_primitives_of_weight_2_form_a_line():
    assert primitive_dims("QSC", 2) == 2
    x = SC.QSC("1")
    a, b = SC.QSC("2"), lin(SC.QSC, "11 -1|1")
    ca, cb = x * a - a * x, x * b - b * x
    assert ca.as_dict() and ca + cb == ca.scale(0)
