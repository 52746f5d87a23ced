"""Canonical JSON encodings shared by the CLI and golden-file tests.

Elements of Z are plain integers; elements of Z[sqrt(-5)] are [a, b] pairs.
A Z ideal is its nonnegative generator; a Z[sqrt(-5)] ideal is its Hermite
basis [[a, 0], [b, c]] (the zero ideal of either ring is 0).  Matrices are
{"ring": ..., "entries": [[...]]}, chains are {"ring": ..., "d": [...]} or
{"ring": ..., "e": [...]}.
"""

from __future__ import annotations

from .matrices import DivisorChain, Matrix
from .realizability import Triple, Verdict
from .rings import RINGS, Z, ZSQRT5, FracIdeal, Ideal, RingElem, _hnf_rows


def _check_ring(ring) -> str:
    if ring not in RINGS:
        raise ValueError(f"unknown ring tag {ring!r}; expected one of {RINGS}")
    return ring


def encode_elem(x: RingElem):
    return x.a if x.ring == Z else [x.a, x.b]


def decode_elem(ring: str, obj) -> RingElem:
    if ring == Z:
        if not isinstance(obj, int):
            raise ValueError(f"a Z element must be an integer, got {obj!r}")
        return RingElem(Z, obj)
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(v, int) for v in obj)):
        raise ValueError(f"a {ZSQRT5} element must be an [a, b] pair, got {obj!r}")
    return RingElem(ZSQRT5, obj[0], obj[1])


def encode_ideal(ideal: Ideal):
    if ideal.ring == Z:
        return ideal.g
    if ideal.is_zero():
        return 0
    a, b, c = ideal.hnf
    return [[a, 0], [b, c]]


def decode_ideal(ring: str, obj) -> Ideal:
    _check_ring(ring)
    if isinstance(obj, int):
        return Ideal.from_int(ring, obj)
    if ring == Z:
        raise ValueError(f"a Z ideal must be an integer generator, got {obj!r}")
    try:
        (p, q), (r, s) = obj
        rows = [(int(p), int(q)), (int(r), int(s))]
    except (TypeError, ValueError):
        raise ValueError(f"a {ZSQRT5} ideal must be two [u, v] basis rows, got {obj!r}")
    hnf = _hnf_rows(rows)
    if hnf is None or hnf[2] == 0:
        raise ValueError(f"basis rows {obj!r} do not span a rank-2 lattice")
    ideal = Ideal(ZSQRT5, hnf=hnf)
    if not ideal.is_closed_under_root():
        raise ValueError(f"basis rows {obj!r} span a lattice that is not an ideal")
    return ideal


def encode_frac(f: FracIdeal) -> dict:
    return {"num": encode_ideal(f.num), "den": f.den}


def decode_frac(ring: str, obj) -> FracIdeal:
    return FracIdeal(decode_ideal(ring, obj["num"]), int(obj["den"]))


def encode_matrix(m: Matrix) -> dict:
    return {"ring": m.ring, "entries": [[encode_elem(e) for e in row] for row in m.rows]}


def decode_matrix(obj) -> Matrix:
    ring = _check_ring(obj.get("ring"))
    entries = obj.get("entries")
    if not isinstance(entries, list) or not entries:
        raise ValueError("matrix JSON needs a nonempty 'entries' list of rows")
    return Matrix(ring, [[decode_elem(ring, e) for e in row] for row in entries])


def encode_chain(chain: DivisorChain) -> dict:
    return {"ring": chain.ring, "d": [encode_ideal(d) for d in chain.d]}


def decode_chain(obj) -> DivisorChain:
    ring = _check_ring(obj.get("ring"))
    has_d = "d" in obj
    has_e = "e" in obj
    if has_d == has_e:
        raise ValueError("chain JSON needs exactly one of 'd' or 'e'")
    ideals = [decode_ideal(ring, x) for x in obj["d" if has_d else "e"]]
    if not ideals:
        raise ValueError("chain JSON must not be empty")
    if has_d:
        return DivisorChain.from_divisors(ideals)
    return DivisorChain.from_elementary(ideals)


def decode_triple(obj) -> Triple:
    ring = _check_ring(obj.get("ring"))
    chains = []
    for key in ("a", "b", "c"):
        if key not in obj:
            raise ValueError(f"triple JSON needs chain {key!r}")
        chains.append(DivisorChain.from_divisors(
            [decode_ideal(ring, x) for x in obj[key]]
        ))
    return Triple(*chains)


def encode_verdict(v: Verdict) -> dict:
    wa, wb = (None, None) if v.witness is None else v.witness
    return {
        "outcome": v.outcome,
        "violated": v.violated_condition,
        "witnessA": None if wa is None else encode_matrix(wa),
        "witnessB": None if wb is None else encode_matrix(wb),
        "rationale": v.rationale,
    }
