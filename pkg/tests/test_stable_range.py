import pytest

from bezoutlab.errors import NotCoprime
from bezoutlab.rings import INTEGERS, GFx, Zloc, Zmod
from bezoutlab.ringcore import is_unimodular, is_unit
from bezoutlab.stable_range import (
    sr1_witness, sr2_check, sr2_reduce, ssr1_nonexistence_proof, ssr1_witness,
)

from oracles import coprime_pairs_mod, has_ssr1_mod


def test_ssr1_examples():
    assert ssr1_witness(Zmod(6).of(2), Zmod(6).of(3)).witness == 1
    assert ssr1_witness(INTEGERS.of(2), INTEGERS.of(5)).witness == -1


def test_sr1_examples():
    assert sr1_witness(Zmod(6).of(4), Zmod(6).of(3)).witness == 1
    assert sr1_witness(Zloc(5).of(5), Zloc(5).of(2)).witness == 1


def test_integers_not_ssr1():
    r = ssr1_witness(INTEGERS.of(3), INTEGERS.of(7))
    assert not r.found and r.exhaustive
    assert [(str(u), res) for u, res in r.nonexistence] == [("1", "NoSolution"), ("-1", "NoSolution")]
    assert ssr1_nonexistence_proof(INTEGERS.of(3), INTEGERS.of(7))


def test_witness_rejects_non_coprime():
    with pytest.raises(NotCoprime):
        ssr1_witness(INTEGERS.of(2), INTEGERS.of(4))


@pytest.mark.parametrize("n", [4, 8, 9, 10, 15])
def test_ssr1_matches_exhaustive_oracle(n):
    R = Zmod(n)
    for a, b in coprime_pairs_mod(n):
        r = ssr1_witness(R.of(a), R.of(b))
        assert r.found == has_ssr1_mod(n, a, b)
        if r.found:
            assert is_unit(R.of(a) ** 2 + R.of(b) * r.witness)


def test_sr1_polynomials():
    R = GFx(3)
    a, b = R.of("x"), R.of("x+1")
    r = sr1_witness(a, b)
    assert r.found and is_unit(a + b * r.witness)


def test_sr2_integer_example():
    Z = INTEGERS
    row = [Z.of(6), Z.of(10), Z.of(15)]
    bs = sr2_reduce(*row)
    assert sr2_check(row, bs)
    # the published witness (1, 1) is also valid
    assert sr2_check(row, [Z.of(1), Z.of(1)])
    assert is_unimodular(row[0] + row[2] * bs[0], row[1] + row[2] * bs[1])
