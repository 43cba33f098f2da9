import pytest

from bezoutlab.errors import BoundExceeded, InfiniteRing
from bezoutlab.lab import THEOREMS, classify, verify_theorem
from bezoutlab.rings import INTEGERS, Zmod


@pytest.mark.parametrize("n", [2, 6, 12, 20, 30])
def test_classify_flags(n):
    c = classify(Zmod(n))
    assert c.sr1 and c.ssr1 and c.toeplitz_ring and c.neat_range_1
    assert c.ssr1 == c.toeplitz_ring
    assert c.to_json()["witness_counterexamples"] == []


def test_classify_refuses_infinite_or_large():
    with pytest.raises(InfiniteRing):
        classify(INTEGERS)
    with pytest.raises(BoundExceeded):
        classify(Zmod(31))
    assert classify(Zmod(31), bound=31).ssr1


@pytest.mark.parametrize("theorem,n", [("THM9_2", 12), ("THM10", 12), ("THM8", 18),
                                        ("PROP5", 6), ("PROP6", 8), ("THM13", 4)])
def test_theorem_sweeps_pass(theorem, n):
    rep = verify_theorem(Zmod(n), theorem)
    assert rep.passed and rep.instances_checked > 0, rep.failures
    js = rep.to_json()
    assert js["theorem"] == theorem and js["passed"]


def test_thm13_sampling_is_seeded():
    a = verify_theorem(Zmod(9), "THM13", samples=50, seed=3)
    b = verify_theorem(Zmod(9), "THM13", samples=50, seed=3)
    assert a.instances_checked == 50 and a.to_json() == b.to_json()


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem(Zmod(6), "THM99")
    assert "THM13" in THEOREMS
