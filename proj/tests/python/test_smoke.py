import math

import pytest

import partzeta as pz

EXAMPLE = (
    "2*zeta(s1+s2+s3) - zeta(s2)*zeta(s1+s3) - zeta(s3)*zeta(s1+s2) + zeta(s1+s2,s3)"
    " + zeta(s2,s1+s3) + zeta(s1+s3,s2) + zeta(s3,s1+s2)"
)


def test_parse_and_render():
    e = pz.parse_expression(EXAMPLE)
    assert e.universe == [1, 2, 3]
    assert len(e) == 7
    assert pz.parse_expression(str(e)) == e
    assert pz.Expression.from_structured(e.to_structured()) == e


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="variable reused in term"):
        pz.parse_expression("zeta(s1)*zeta(s1)")


def test_example_is_identity():
    identity, witness = pz.is_partition_identity(pz.parse_expression(EXAMPLE))
    assert identity and witness is None
    assert pz.normalize(pz.parse_expression(EXAMPLE)).is_empty()
    assert pz.is_zero_combination(pz.parse_expression(EXAMPLE))
    assert pz.probabilistic_zero_test(pz.parse_expression(EXAMPLE), trials=5, seed=3)


def test_missing_merged_term_is_refuted():
    e = pz.parse_expression("zeta(s1)*zeta(s2) - zeta(s1,s2) - zeta(s2,s1)")
    identity, witness = pz.is_partition_identity(e)
    assert not identity
    assert witness == ([[1, 2]], 1)
    report = pz.verify(e)
    assert report["verdict"] == "not-identity"
    assert report["agreement"] is True
    assert report["methods_run"] == ["canonical", "rational", "numeric"]


def test_stuffle():
    out = dict((tuple(map(tuple, t)), m) for t, m in pz.stuffle_product([[1], [2]], [[3], [4]]))
    assert len(out) == 13
    assert set(out.values()) == {1}
    assert ((1, 3), (2,), (4,)) in out
    assert pz.stuffle_size(2, 2) == 13
    assert len(pz.stuffle_identity([[1], [2]], [[3], [4]])) == 14


def test_hoffman_and_counts():
    assert len(pz.hoffman_identity(1)) == 0
    assert pz.is_partition_identity(pz.hoffman_identity(5))[0]
    with pytest.raises(ValueError):
        pz.hoffman_identity(8)
    assert [pz.fubini_count(n) for n in range(1, 6)] == [1, 3, 13, 75, 541]
    assert pz.fubini_count(30) > 2**64
    assert len(pz.ordered_set_partitions([1, 2, 3])) == 13
    assert len(pz.unordered_set_partitions([1, 2, 3, 4])) == 15


def test_coefficient_arithmetic_is_exact():
    e = pz.parse_expression("zeta(s1)")
    big = 10**40 * e
    assert big.terms() == [(10**40, "zeta(s1)")]
    assert len(big - big) == 0


def test_numeric():
    assert pz.eval_zeta_truncated([2.0], 3) == pytest.approx(1.25)
    assert pz.eval_zeta_truncated([2.0, 2.0], 3) == pytest.approx(0.25)
    tail = math.pi**2 / 6 - pz.eval_zeta_truncated([2.0], 1000)
    assert 1 / 1000 < tail < 1 / 999
    e = pz.parse_expression(EXAMPLE)
    absolute, relative = pz.residual_report(e, {1: 2.5, 2: 1.7, 3: 1.3}, N=50)
    assert relative <= 1e-10
    assert pz.eval_expression(pz.parse_expression("zeta(s1)"), {1: 2.0}, N=3) == pytest.approx(1.25)


def test_rational_terms():
    terms = pz.rational_terms(pz.parse_expression("zeta(s1+s2,s3)"))
    assert terms == [(1, [([1, 2], 1), ([1, 2, 3], 1)])]


def test_cli_in_process():
    code, out, err = pz.run_cli(["verify", EXAMPLE])
    assert code == 0 and "verdict: identity" in out and err == ""
    code, _, err = pz.run_cli(["verify", "zeta(s2,s3)"])
    assert code == 2 and err.startswith("error:")
