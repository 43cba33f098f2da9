import itertools
import random

import pytest

from bezoutlab.edr import PQWitness, find_pq, find_pq_integers, hermite_row, is_elementary, smith_nxm
from bezoutlab.errors import NotCoprime
from bezoutlab.matrix import Matrix
from bezoutlab.rings import INTEGERS, GFx, Zloc, Zmod
from bezoutlab.ringcore import associates

from helpers import random_elements
from oracles import smith_diagonal


def test_smith_examples():
    cert = smith_nxm(Matrix(INTEGERS, [[2, 4], [6, 8]]))
    assert [str(e) for e in cert.diagonal] == ["2", "4"]
    cert = smith_nxm(Matrix.diag(INTEGERS, [4, 6, 10], 3, 3))
    assert [str(e) for e in cert.diagonal] == ["2", "2", "60"]
    cert = smith_nxm(Matrix(INTEGERS, [[6, 10, 15]]))
    assert [str(e) for e in cert.diagonal] == ["1"]
    cert = smith_nxm(Matrix(Zmod(6), [[2, 3], [0, 5]]))
    assert [str(e) for e in cert.diagonal] == ["1", "2"]


def test_smith_certificates_all_rings(ring):
    rng = random.Random(4)
    for _ in range(25):
        nr, nc = rng.randint(1, 3), rng.randint(1, 3)
        A = Matrix(ring, [random_elements(ring, rng, nc) for _ in range(nr)])
        cert = smith_nxm(A)
        assert cert.verify(), cert.problems()
        assert all(is_elementary(t) for t in cert.left + cert.right)


def test_smith_matches_oracle_small():
    rng = random.Random(8)
    for _ in range(80):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        got = [e.payload for e in smith_nxm(Matrix(INTEGERS, rows)).diagonal]
        assert got == smith_diagonal(rows), rows


def test_smith_records_cut():
    cert = smith_nxm(Matrix.diag(INTEGERS, [4, 6, 10, 3], 4, 4))
    assert "cut" in cert.meta


def test_hermite_row():
    Q, d = hermite_row(INTEGERS.of(4), INTEGERS.of(6))
    assert Q.to_strings() == [["-1", "-3"], ["1", "2"]] and d == 2
    assert Q.det() == 1


def test_find_pq_examples():
    Z = INTEGERS
    w = find_pq(Z.of(6), Z.of(10), Z.of(15))
    assert (w.p, w.q) == (1, 1)
    R = Zmod(6)
    a, b, c = R.of(2), R.of(3), R.of(5)
    assert find_pq(a, b, c).certifies(a, b, c)
    assert PQWitness(R.of(1), R.of(2)).certifies(a, b, c)


def test_find_pq_exhaustive_mod_10():
    R = Zmod(10)
    for a, b, c in itertools.product(range(10), repeat=3):
        A, B, C = R.of(a), R.of(b), R.of(c)
        try:
            w = find_pq(A, B, C)
        except NotCoprime:
            continue
        assert w.certifies(A, B, C)


def test_find_pq_integers_crt():
    rng = random.Random(1)
    Z = INTEGERS
    checked = 0
    while checked < 100:
        a, b, c = (Z.of(rng.randint(-30, 30)) for _ in range(3))
        try:
            w = find_pq_integers(a, b, c)
        except NotCoprime:
            continue
        assert w.certifies(a, b, c)
        checked += 1


@pytest.mark.parametrize("ring", [GFx(3), Zloc(5)], ids=str)
def test_find_pq_other_rings(ring):
    rng = random.Random(6)
    for _ in range(20):
        a, b, c = random_elements(ring, rng, 3)
        try:
            w = find_pq(a, b, c)
        except NotCoprime:
            continue
        assert w.certifies(a, b, c)


def test_diagonal_entries_associate_to_oracle_mod_n():
    cert = smith_nxm(Matrix(Zmod(12), [[4, 6], [8, 2]]))
    assert associates(cert.diagonal[0], Zmod(12).of(2))
