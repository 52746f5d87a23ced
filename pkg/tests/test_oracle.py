import pytest

from detdiv import (
    DivisorChain,
    Ideal,
    REALIZABLE,
    ScanConfig,
    Triple,
    Z,
    ZSQRT5,
    check_triple,
    cross_check_checker,
    enumerate_realized_triples,
    verify_bound_theorems,
)
from detdiv import _scan
from detdiv.oracle import _valid_chains_z2


def test_one_by_one_triples():
    cfg = ScanConfig(n=1, entry_bound=3, mode="exhaustive")
    report = enumerate_realized_triples(cfg)
    expect = sorted({((a,), (b,), (a * b,)) for a in range(1, 4) for b in range(1, 4)})
    assert report.realized_triples == expect


def test_generic_path_matches_kernels():
    cfg = ScanConfig(n=2, entry_bound=1, mode="exhaustive")
    generic = {
        tuple(t) for t in enumerate_realized_triples(cfg).realized_triples
    }
    for backend in ("numpy", "numba"):
        triples, stats = _scan.scan_realized(1, backend=backend)
        assert {tuple(t) for t in triples} == generic
        assert stats["backend"] == backend
    # entry bound 1 only realizes unimodular-chain data
    assert ((1, 1), (1, 1), (1, 1)) in generic


def test_kernel_backends_agree_on_larger_bound():
    a, _ = _scan.scan_realized(2, backend="numpy")
    b, _ = _scan.scan_realized(2, backend="numba")
    assert a == b


def test_backend_env_flag(monkeypatch):
    monkeypatch.setenv("DETDIV_SCAN_BACKEND", "numpy")
    assert _scan.backend_name() == "numpy"
    monkeypatch.setenv("DETDIV_SCAN_BACKEND", "nope")
    with pytest.raises(ValueError):
        _scan.backend_name()
    monkeypatch.delenv("DETDIV_SCAN_BACKEND")
    assert _scan.backend_name() in ("numpy", "numba")


def test_fast_path_used_for_z_2x2(monkeypatch):
    monkeypatch.setenv("DETDIV_SCAN_BACKEND", "numpy")
    cfg = ScanConfig(n=2, entry_bound=2, mode="exhaustive")
    report = enumerate_realized_triples(cfg)
    assert report.stats["backend"] == "numpy"
    assert report.stats["matrices"] > 0


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("DETDIV_THREADS", "1")
    triples, stats = _scan.scan_realized(1, backend="numba")
    reference, _ = _scan.scan_realized(1, backend="numpy")
    assert triples == reference


def test_det_bound_filter():
    cfg = ScanConfig(n=2, entry_bound=2, det_bound=2, mode="exhaustive")
    report = enumerate_realized_triples(cfg)
    assert all(t[0][1] <= 2 and t[1][1] <= 2 for t in report.realized_triples)


def test_exhaustive_refusal_over_ceiling():
    cfg = ScanConfig(n=3, entry_bound=9, mode="exhaustive", pair_ceiling=1000)
    with pytest.raises(ValueError, match="ceiling"):
        enumerate_realized_triples(cfg)


def test_sampled_mode_needs_count():
    with pytest.raises(ValueError):
        enumerate_realized_triples(ScanConfig(n=3, entry_bound=9, mode="sampled"))


def test_bound_checks_small_exhaustive():
    report = verify_bound_theorems(ScanConfig(n=2, entry_bound=1, mode="exhaustive"))
    assert report.passed
    assert report.stats["pairs_checked"] == report.stats["lower_bound_ok"]


def test_bound_checks_sampled_z3():
    cfg = ScanConfig(n=3, entry_bound=4, mode="sampled", sample_count=50, seed=5)
    report = verify_bound_theorems(cfg)
    assert report.passed
    assert report.stats["pairs_checked"] == 50


def test_bound_checks_quadratic_sampled():
    cfg = ScanConfig(n=2, entry_bound=2, ring=ZSQRT5, mode="sampled",
                     sample_count=25, seed=6)
    report = verify_bound_theorems(cfg)
    assert report.passed


def test_sampled_determinism():
    cfg = ScanConfig(n=3, entry_bound=4, mode="sampled", sample_count=20, seed=7)
    a = enumerate_realized_triples(cfg)
    b = enumerate_realized_triples(cfg)
    assert a.realized_triples == b.realized_triples
    assert a.stats == b.stats


def test_valid_chain_universe():
    chains = _valid_chains_z2(12)
    assert (1, 12) in chains and (2, 4) in chains and (3, 9) in chains
    assert (2, 2) not in chains and (2, 6) not in chains
    assert len(chains) == 16


def test_cross_check_small():
    cfg = ScanConfig(n=2, entry_bound=3, det_bound=6, mode="exhaustive")
    report = cross_check_checker(cfg)
    assert report.passed, report.counterexamples[:3]
    assert report.stats["universe_accepted"] == report.stats["witnesses_verified"]
    assert report.stats["scanned_accepted"] == report.stats["scanned_triples"]


def test_cross_check_requires_configuration():
    with pytest.raises(ValueError):
        cross_check_checker(ScanConfig(n=3, entry_bound=2, det_bound=4))
    with pytest.raises(ValueError):
        cross_check_checker(ScanConfig(n=2, entry_bound=2))


def test_accepted_triples_within_coverage_are_realized():
    # with det_bound 4 every accepted triple has witness entries within 4,
    # so acceptance and scan membership coincide exactly on the universe
    bound = 4
    cfg = ScanConfig(n=2, entry_bound=bound, det_bound=bound, mode="exhaustive",
                     pair_ceiling=200_000_000)
    realized = set(map(tuple, enumerate_realized_triples(cfg).realized_triples))
    chains = _valid_chains_z2(bound)
    for a1, a2 in chains:
        for b1, b2 in chains:
            for c1, c2 in _valid_chains_z2(bound * bound):
                t = Triple(
                    DivisorChain.from_divisors([Ideal(Z, a1), Ideal(Z, a2)]),
                    DivisorChain.from_divisors([Ideal(Z, b1), Ideal(Z, b2)]),
                    DivisorChain.from_divisors([Ideal(Z, c1), Ideal(Z, c2)]),
                )
                verdict = check_triple(t)
                enc = ((a1, a2), (b1, b2), (c1, c2))
                if verdict.outcome == REALIZABLE:
                    assert enc in realized, enc
                else:
                    assert enc not in realized, enc
