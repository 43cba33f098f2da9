"""JSON payloads for every operation and their replay checks.

Payloads are self-contained: they carry ``command`` and ``ring`` and every
element as a string literal, so ``check_payload`` can re-verify a stored
certificate without recomputing the search that produced it.
"""

from __future__ import annotations

from .edr import PQWitness, is_elementary
from .errors import NoSolution
from .lab import classify, verify_theorem
from .matrix import Matrix, ReductionCertificate, ToeplitzMatrix, Transform
from .neat_clean import (
    CleanDecomposition, NeatWitness, factor_shift_problems, is_neat, quotient_modulus,
)
from .rings import Element, RingDescriptor, parse_element, parse_ring
from .ringcore import BezoutCertificate, canonical, coprime, gcd, is_unit, solve_linear
from .stable_range import WitnessReport, sr2_check
from .toeplitz import toeplitz_certificate_problems


def s(e: Element | None) -> str | None:
    return None if e is None else str(e)


def matrix_rows(m: Matrix) -> list[list[str]]:
    return m.to_strings()


def matrix_json(m: Matrix) -> dict:
    return {"ring": str(m.ring), "rows": matrix_rows(m)}


def parse_matrix(ring: RingDescriptor, rows) -> Matrix:
    return Matrix(ring, [[parse_element(ring, str(x)) for x in row] for row in rows])


def load_matrix_json(obj: dict, ring: RingDescriptor | None = None) -> Matrix:
    if ring is None:
        ring = parse_ring(obj["ring"])
    return parse_matrix(ring, obj["rows"])


# --------------------------------------------------------------------------
# payload builders


def bezout_payload(c: BezoutCertificate) -> dict:
    return {k: str(getattr(c, k)) for k in ("a", "b", "d", "p", "q", "a0", "b0")}


def witness_payload(a: Element, b: Element, r: WitnessReport) -> dict:
    return {
        "a": str(a),
        "b": str(b),
        "found": r.found,
        "witness": s(r.witness),
        "searched_bound": r.searched_bound,
        "exhaustive": r.exhaustive,
        "nonexistence": [{"unit": str(u), "result": res} for u, res in r.nonexistence],
    }


def sr2_payload(elements, bs) -> dict:
    return {"elements": [str(x) for x in elements], "b": [str(x) for x in bs]}


def toeplitz_payload(t: ToeplitzMatrix) -> list[list[str]]:
    return matrix_rows(t.matrix())


def row_reduce_payload(a, b, t: ToeplitzMatrix, d) -> dict:
    return {"a": str(a), "b": str(b), "T": toeplitz_payload(t), "d": str(d)}


def complete_payload(a, b, t: ToeplitzMatrix) -> dict:
    return {"a": str(a), "b": str(b), "x": str(t.c), "T": toeplitz_payload(t), "det": str(t.det)}


def _transform_json(t: Transform) -> dict:
    return {"name": t.name, "matrix": matrix_rows(t.matrix), "toeplitz": t.toeplitz}


def reduction_payload(c: ReductionCertificate) -> dict:
    return {
        "input": matrix_rows(c.input),
        "left": [_transform_json(t) for t in c.left],
        "right": [_transform_json(t) for t in c.right],
        "result": matrix_rows(c.result),
        "diagonal": [str(e) for e in c.diagonal],
        "left_total": matrix_rows(c.left_total),
        "right_total": matrix_rows(c.right_total),
        "toeplitz_flags": c.toeplitz_flags,
        "meta": c.meta,
    }


def pq_payload(a, b, c, w: PQWitness) -> dict:
    return {"a": str(a), "b": str(b), "c": str(c), "p": str(w.p), "q": str(w.q)}


def neat_payload(w: NeatWitness) -> dict:
    return {k: str(getattr(w, k)) for k in ("a", "b", "c", "r", "s")}


def clean_payload(r, s_, a, x, d: CleanDecomposition) -> dict:
    return {
        "r": str(r), "s": str(s_), "a": str(a), "x": str(x),
        "c": str(d.c), "modulus": d.modulus,
        "e": str(d.e), "u": str(d.u), "e_proof": str(d.e_proof),
        "bezout_u": d.notes["u"], "bezout_v": d.notes["v"],
    }


def prop5_forward_payload(a, b, c, p, q, f) -> dict:
    return {
        "a": str(a), "b": str(b), "c": str(c), "p": str(p), "q": str(q),
        "lambda": str(f.lam), "u": str(f.u), "v": str(f.v),
        "uv_coprime": f.uv_coprime, "diagnostics": list(f.diagnostics),
    }


def prop5_backward_payload(a, b, c, lam, u, v, w: PQWitness) -> dict:
    return {
        "a": str(a), "b": str(b), "c": str(c), "lambda": str(lam), "u": str(u), "v": str(v),
        "p": str(w.p), "q": str(w.q),
    }


# --------------------------------------------------------------------------
# replay


def _elts(ring, payload, *keys):
    return [parse_element(ring, payload[k]) for k in keys]


def _reduction_from_payload(ring, payload) -> ReductionCertificate:
    def transforms(items):
        return tuple(Transform(t["name"], parse_matrix(ring, t["matrix"])) for t in items)

    return ReductionCertificate(
        parse_matrix(ring, payload["input"]),
        transforms(payload["left"]),
        transforms(payload["right"]),
        parse_matrix(ring, payload["result"]),
    )


def _check_reduction(ring, payload, toeplitz: bool) -> list[str]:
    cert = _reduction_from_payload(ring, payload)
    out = toeplitz_certificate_problems(cert) if toeplitz else cert.problems()
    if [str(e) for e in cert.diagonal] != payload["diagonal"]:
        out.append("diagonal does not match result")
    if matrix_rows(cert.left_total) != payload["left_total"]:
        out.append("left_total does not match the factors")
    if matrix_rows(cert.right_total) != payload["right_total"]:
        out.append("right_total does not match the factors")
    if not toeplitz:
        out += [f"factor {t.name} is not elementary" for t in cert.left + cert.right
                if not is_elementary(t)]
    diag = cert.diagonal
    if diag:
        entries = [e for row in cert.input.rows for e in row]
        if canonical(diag[0]) != gcd(*entries):
            out.append("e1 is not the gcd of the input entries")
    return out


def _check_witness(ring, payload, square: bool) -> list[str]:
    a, b = _elts(ring, payload, "a", "b")
    base = a * a if square else a
    if payload["found"]:
        (w,) = _elts(ring, payload, "witness")
        return [] if is_unit(base + b * w) else ["witness does not give a unit"]
    out = []
    if payload["nonexistence"]:
        for item in payload["nonexistence"]:
            u = parse_element(ring, item["unit"])
            if not is_unit(u):
                out.append(f"{u} is not a unit")
            try:
                solve_linear(b, u - base)
                out.append(f"b*x = {u} - {'a^2' if square else 'a'} is solvable")
            except NoSolution:
                pass
    return out


def check_payload(payload: dict) -> list[str]:
    """Problems found when replaying a payload; empty means it verifies."""
    command = payload["command"]
    ring = parse_ring(payload["ring"])
    if command == "bezout":
        c = BezoutCertificate(*_elts(ring, payload, "a", "b", "d", "p", "q", "a0", "b0"))
        return c.problems()
    if command in ("sr1", "ssr1"):
        return _check_witness(ring, payload, command == "ssr1")
    if command == "sr2":
        elements = [parse_element(ring, x) for x in payload["elements"]]
        bs = [parse_element(ring, x) for x in payload["b"]]
        return [] if sr2_check(elements, bs) else ["reduced row is not unimodular"]
    if command == "toeplitz-reduce":
        a, b, d = _elts(ring, payload, "a", "b", "d")
        m = parse_matrix(ring, payload["T"])
        out = []
        if not m.is_toeplitz():
            out.append("T is not Toeplitz")
        if not is_unit(m.det()):
            out.append("T is not invertible")
        if a * m[0, 0] + b * m[1, 0] != d or a * m[0, 1] + b * m[1, 1]:
            out.append("(a, b) T != (d, 0)")
        if d != gcd(a, b):
            out.append("d is not the canonical gcd")
        return out
    if command == "toeplitz-complete":
        a, b, x = _elts(ring, payload, "a", "b", "x")
        m = parse_matrix(ring, payload["T"])
        out = []
        if m.rows != ((a, b), (x, a)):
            out.append("T is not [[a, b], [x, a]]")
        if not is_unit(m.det()):
            out.append("det T is not a unit")
        return out
    if command in ("toeplitz-snf", "snf"):
        return _check_reduction(ring, payload, command == "toeplitz-snf")
    if command == "find-pq":
        a, b, c, p, q = _elts(ring, payload, "a", "b", "c", "p", "q")
        return [] if PQWitness(p, q).certifies(a, b, c) else ["(p, q) does not certify"]
    if command == "neat":
        if "r" in payload:
            return NeatWitness(*_elts(ring, payload, "a", "b", "c", "r", "s")).problems()
        (a,) = _elts(ring, payload, "a")
        return [] if is_neat(a) == payload["neat"] else ["neatness flag differs"]
    if command == "neat-shift":
        a, b, t, shifted = _elts(ring, payload, "a", "b", "t", "shifted")
        out = [] if shifted == a + b * t else ["shifted != a + b*t"]
        return out + ([] if is_neat(shifted) else ["shifted element is not neat"])
    if command == "clean":
        r, s_, a, x, c = _elts(ring, payload, "r", "s", "a", "x", "c")
        out = []
        if c != r * s_:
            out.append("c != r*s")
        if not (coprime(r, a) and coprime(s_, 1 - a) and coprime(r, s_)):
            out.append("factorization hypotheses fail")
        m = payload["modulus"]
        if m != quotient_modulus(c):
            out.append("modulus is not the size of R/cR")
        dec = CleanDecomposition(m, c, x.payload % m, int(payload["e"]), int(payload["u"]),
                                 int(payload["e_proof"]), a.payload % m)
        return out + dec.problems()
    if command == "prop5-forward":
        a, b, c, lam, u, v = _elts(ring, payload, "a", "b", "c", "lambda", "u", "v")
        out = factor_shift_problems(a, b, c, lam, u, v)
        if payload["uv_coprime"] != coprime(u, v):
            out.append("uv_coprime flag is wrong")
        return out
    if command == "prop5-backward":
        a, b, c, p, q = _elts(ring, payload, "a", "b", "c", "p", "q")
        return [] if PQWitness(p, q).certifies(a, b, c) else ["(p, q) does not certify"]
    if command == "classify":
        fresh = classify(ring, **({"bound": payload["bound"]} if payload.get("bound") else {})).to_json()
        keys = ("sr1", "ssr1", "toeplitz_ring", "neat_range_1", "witness_counterexamples")
        return [f"{k} differs on replay" for k in keys if fresh[k] != payload[k]]
    if command == "verify":
        fresh = verify_theorem(ring, payload["theorem"], bound=payload.get("bound"),
                               samples=payload.get("samples"), seed=payload.get("seed", 0)).to_json()
        keys = ("instances_checked", "failures", "passed")
        return [f"{k} differs on replay" for k in keys if fresh[k] != payload[k]]
    return [f"unknown command {command!r}"]
