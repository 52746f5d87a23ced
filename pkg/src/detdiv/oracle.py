"""Independent brute-force ground truth: enumerate or sample matrix pairs,
collect the realized divisor-chain triples, check the two product
divisibility bounds on every pair, and cross-validate the triple checker
against the exhaustive 2 x 2 scan.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import product as iter_product

from . import _scan
from .matrices import DivisorChain, Matrix, divisor_chain
from .realizability import NOT_REALIZABLE, REALIZABLE, Triple, check_triple
from .rings import Z, ZSQRT5, Ideal


@dataclass(frozen=True)
class ScanConfig:
    """Scope of one scan.  Exhaustive mode refuses configurations whose raw
    pair count exceeds pair_ceiling; auto mode falls back to sampling."""

    n: int = 2
    entry_bound: int = 3
    ring: str = Z
    det_bound: int | None = None
    sample_count: int = 0
    seed: int = 0
    mode: str = "auto"  # auto | exhaustive | sampled
    pair_ceiling: int = 10_000_000

    def __post_init__(self):
        if self.n < 1 or self.entry_bound < 1:
            raise ValueError("need n >= 1 and entry_bound >= 1")
        if self.mode not in ("auto", "exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def raw_matrix_count(self) -> int:
        cells = self.n * self.n * (2 if self.ring == ZSQRT5 else 1)
        return (2 * self.entry_bound + 1) ** cells


@dataclass
class ScanReport:
    realized_triples: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "stats": self.stats,
            "realized_triples": [list(map(list, t)) for t in self.realized_triples],
            "counterexamples": self.counterexamples,
        }


def encode_ideal(ideal: Ideal):
    if ideal.ring == Z:
        return ideal.g
    return 0 if ideal.is_zero() else ideal.hnf


def encode_chain(chain: DivisorChain) -> tuple:
    return tuple(encode_ideal(d) for d in chain.d)


def encode_triple(ca: DivisorChain, cb: DivisorChain, cc: DivisorChain) -> tuple:
    return (encode_chain(ca), encode_chain(cb), encode_chain(cc))


def _resolve_mode(cfg: ScanConfig) -> str:
    pairs = cfg.raw_matrix_count() ** 2
    if cfg.mode == "exhaustive":
        if pairs > cfg.pair_ceiling:
            raise ValueError(
                f"exhaustive scan needs about {pairs} pairs, over the ceiling "
                f"of {cfg.pair_ceiling}; raise pair_ceiling or sample"
            )
        return "exhaustive"
    if cfg.mode == "sampled":
        if cfg.sample_count < 1:
            raise ValueError("sampled mode needs sample_count >= 1")
        return "sampled"
    if pairs <= cfg.pair_ceiling:
        return "exhaustive"
    if cfg.sample_count < 1:
        raise ValueError(
            f"about {pairs} pairs is over the ceiling of {cfg.pair_ceiling} "
            "and no sample_count was given"
        )
    return "sampled"


def _det_ok(m: Matrix, cfg: ScanConfig) -> bool:
    from .matrices import det

    d = det(m)
    if d.is_zero():
        return False
    if cfg.det_bound is None:
        return True
    return d.norm() <= cfg.det_bound if cfg.ring == ZSQRT5 else abs(d.a) <= cfg.det_bound


def _all_matrices(cfg: ScanConfig) -> list[Matrix]:
    b = cfg.entry_bound
    cells = cfg.n * cfg.n
    out = []
    if cfg.ring == Z:
        for combo in iter_product(range(-b, b + 1), repeat=cells):
            m = Matrix(Z, [combo[i * cfg.n:(i + 1) * cfg.n] for i in range(cfg.n)])
            if _det_ok(m, cfg):
                out.append(m)
    else:
        coords = list(iter_product(range(-b, b + 1), repeat=2))
        for combo in iter_product(coords, repeat=cells):
            m = Matrix(ZSQRT5, [combo[i * cfg.n:(i + 1) * cfg.n] for i in range(cfg.n)])
            if _det_ok(m, cfg):
                out.append(m)
    return out


def _random_matrix(rng: random.Random, cfg: ScanConfig) -> Matrix:
    b = cfg.entry_bound
    while True:
        if cfg.ring == Z:
            rows = [[rng.randint(-b, b) for _ in range(cfg.n)] for _ in range(cfg.n)]
        else:
            rows = [[(rng.randint(-b, b), rng.randint(-b, b)) for _ in range(cfg.n)]
                    for _ in range(cfg.n)]
        m = Matrix(cfg.ring, rows)
        if _det_ok(m, cfg):
            return m


def _pair_stream(cfg: ScanConfig, mode: str):
    if mode == "exhaustive":
        mats = _all_matrices(cfg)
        chains = [divisor_chain(m) for m in mats]
        for i, (ma, ca) in enumerate(zip(mats, chains)):
            for mb, cb in zip(mats, chains):
                yield ma, ca, mb, cb
    else:
        rng = random.Random(cfg.seed)
        for _ in range(cfg.sample_count):
            ma = _random_matrix(rng, cfg)
            mb = _random_matrix(rng, cfg)
            yield ma, divisor_chain(ma), mb, divisor_chain(mb)


def enumerate_realized_triples(cfg: ScanConfig) -> ScanReport:
    """Record (chain(A), chain(B), chain(A @ B)) for every pair in scope.

    The exhaustive Z scan at n = 2 runs on the compiled kernel; everything
    else goes through the exact library path.
    """
    mode = _resolve_mode(cfg)
    if mode == "exhaustive" and cfg.ring == Z and cfg.n == 2:
        triples, stats = _scan.scan_realized(cfg.entry_bound, cfg.det_bound)
        stats["mode"] = "exhaustive"
        return ScanReport(realized_triples=triples, stats=stats)
    triples = set()
    pairs = 0
    for ma, ca, mb, cb in _pair_stream(cfg, mode):
        pairs += 1
        triples.add(encode_triple(ca, cb, divisor_chain(ma @ mb)))
    return ScanReport(
        realized_triples=sorted(triples),
        stats={"mode": mode, "backend": "python", "pairs_checked": pairs,
               "triples": len(triples)},
    )


def _lower_bound_holds(ca, cb, cc) -> bool:
    return all((x * y).divides(z) for x, y, z in zip(ca.d, cb.d, cc.d))


def _upper_bound_holds(ca, cb, cc) -> bool:
    # cleared of ideal inverses: for every split k,
    # c_k a_{n-k} b_{n-k}  divides  a_{n-k} a_k b_n + b_{n-k} b_k a_n
    n = ca.n
    a, b, c = ca.d, cb.d, cc.d
    for k in range(1, n):
        lhs = c[k - 1] * a[n - k - 1] * b[n - k - 1]
        rhs = a[n - k - 1] * a[k - 1] * b[n - 1] + b[n - k - 1] * b[k - 1] * a[n - 1]
        if not lhs.divides(rhs):
            return False
    return True


def _matrix_entries(m: Matrix):
    if m.ring == Z:
        return [[e.a for e in row] for row in m.rows]
    return [[[e.a, e.b] for e in row] for row in m.rows]


def verify_bound_theorems(cfg: ScanConfig) -> ScanReport:
    """Check both product divisibility bounds (in cleared integral form) on
    every pair in scope; failing pairs are reported verbatim."""
    report = ScanReport()
    mode = _resolve_mode(cfg)
    pairs = lower_ok = upper_ok = 0
    for ma, ca, mb, cb in _pair_stream(cfg, mode):
        pairs += 1
        cc = divisor_chain(ma @ mb)
        if _lower_bound_holds(ca, cb, cc):
            lower_ok += 1
        else:
            report.counterexamples.append(
                {"bound": "lower", "A": _matrix_entries(ma), "B": _matrix_entries(mb)}
            )
        if _upper_bound_holds(ca, cb, cc):
            upper_ok += 1
        else:
            report.counterexamples.append(
                {"bound": "upper", "A": _matrix_entries(ma), "B": _matrix_entries(mb)}
            )
    report.stats = {
        "mode": mode,
        "pairs_checked": pairs,
        "lower_bound_ok": lower_ok,
        "upper_bound_ok": upper_ok,
    }
    return report


def _valid_chains_z2(det_cap: int) -> list[tuple[int, int]]:
    """All (d1, d2) with d2 <= det_cap that some nonsingular 2 x 2 integer
    matrix can realize: d1 >= 1 and d1^2 | d2."""
    out = []
    for d2 in range(1, det_cap + 1):
        d1 = 1
        while d1 * d1 <= d2:
            if d2 % (d1 * d1) == 0:
                out.append((d1, d2))
            d1 += 1
    return out


def _z_chain(d1: int, d2: int) -> DivisorChain:
    return DivisorChain.from_divisors([Ideal(Z, d1), Ideal(Z, d2)])


def cross_check_checker(cfg: ScanConfig) -> ScanReport:
    """Exhaustive agreement run at n = 2 over Z: every scanned triple must
    be accepted, every accepted triple in the chain universe must carry a
    verifiable witness, and every rejected one must be absent from the scan."""
    if cfg.ring != Z or cfg.n != 2:
        raise ValueError("the cross check runs at n = 2 over Z")
    if cfg.det_bound is None:
        raise ValueError("the cross check needs det_bound for the chain universe")

    # det_bound scopes the chain universe below; the scan itself covers every
    # pair at the entry bound
    scan = enumerate_realized_triples(replace(cfg, det_bound=None))
    realized = set(scan.realized_triples)
    report = ScanReport(realized_triples=scan.realized_triples)

    accepted_scan = 0
    for enc in realized:
        (ga, da), (gb, db), (gc, dc) = enc
        verdict = check_triple(Triple(_z_chain(ga, da), _z_chain(gb, db), _z_chain(gc, dc)))
        if verdict.outcome != REALIZABLE:
            report.counterexamples.append(
                {"where": "scanned-but-rejected", "triple": list(map(list, enc)),
                 "outcome": verdict.outcome, "violated": verdict.violated_condition}
            )
        else:
            accepted_scan += 1

    chains = _valid_chains_z2(cfg.det_bound)
    c_chains = _valid_chains_z2(cfg.det_bound * cfg.det_bound)
    accepted = rejected = verified = 0
    for a1, a2 in chains:
        for b1, b2 in chains:
            for c1, c2 in c_chains:
                enc = ((a1, a2), (b1, b2), (c1, c2))
                verdict = check_triple(
                    Triple(_z_chain(a1, a2), _z_chain(b1, b2), _z_chain(c1, c2))
                )
                if verdict.outcome == NOT_REALIZABLE:
                    rejected += 1
                    if enc in realized:
                        report.counterexamples.append(
                            {"where": "rejected-but-scanned", "triple": list(map(list, enc)),
                             "violated": verdict.violated_condition}
                        )
                elif verdict.outcome == REALIZABLE:
                    accepted += 1
                    wa, wb = verdict.witness
                    ok = (
                        divisor_chain(wa).d == (Ideal(Z, a1), Ideal(Z, a2))
                        and divisor_chain(wb).d == (Ideal(Z, b1), Ideal(Z, b2))
                        and divisor_chain(wa @ wb).d == (Ideal(Z, c1), Ideal(Z, c2))
                    )
                    if ok:
                        verified += 1
                    else:
                        report.counterexamples.append(
                            {"where": "witness-mismatch", "triple": list(map(list, enc))}
                        )
                else:
                    report.counterexamples.append(
                        {"where": "unknown-verdict", "triple": list(map(list, enc))}
                    )

    report.stats = {
        **scan.stats,
        "scanned_triples": len(realized),
        "scanned_accepted": accepted_scan,
        "universe_triples": len(chains) ** 2 * len(c_chains),
        "universe_accepted": accepted,
        "universe_rejected": rejected,
        "witnesses_verified": verified,
    }
    return report
