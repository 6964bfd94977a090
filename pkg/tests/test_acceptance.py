"""Exit criteria. Each test records one PASS/FAIL line, shown in the pytest summary."""
import contextlib
import itertools
import random
import time
from pathlib import Path

import numpy as np
import pytest

from latticesync.cli import main
from latticesync.oracle import verify_closed_form
from latticesync.spectra import full_spectrum
from latticesync.sweep import parse_config, render_csv, run_sweep
from latticesync.sync import connectivity, extremes_separable, sync_exact, verify_theorems
from latticesync.topology import Family, GraphSpec, validate_spec

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


@contextlib.contextmanager
def criterion(log, label):
    try:
        yield
    except BaseException:
        log.append(f"FAIL  {label}")
        raise
    log.append(f"PASS  {label}")


def _valid(spec):
    try:
        validate_spec(spec)
    except ValueError:
        return False
    return True


def test_1_closed_forms_match_oracle(acceptance_log):
    specs = [GraphSpec.cycle(n, r) for n in range(3, 65) for r in range(1, (n - 1) // 2 + 1)]
    specs += [
        GraphSpec.torus(k1, k2, r)
        for k1, k2 in itertools.product(range(4, 11), repeat=2)
        for r in range(1, (min(k1, k2) - 1) // 2 + 1)
    ]
    # r = 2 on [4,4,4] violates 2r+1 <= k and is rejected by validation
    specs += [s for s in (GraphSpec.mtorus(d, r) for d in [(4, 4, 4), (5, 5, 5)] for r in (1, 2)) if _valid(s)]
    with criterion(acceptance_log, f"1 closed-form spectra vs Jacobi oracle, {len(specs)} graphs, dev < 1e-8, < 60 s"):
        start = time.perf_counter()
        worst = max(verify_closed_form(s) for s in specs)
        elapsed = time.perf_counter() - start
        assert worst < 1e-8, worst
        assert elapsed < 60.0, elapsed


def _random_spec(rng):
    family = rng.choice(list(Family))
    while True:
        m = {Family.CYCLE: 1, Family.TORUS2D: 2}.get(family) or rng.randint(1, 4)
        top = max(3, int(5000 ** (1 / m)))
        dims = tuple(rng.randint(3, top) for _ in range(m))
        if np.prod(dims) <= 5000:
            return GraphSpec(family, dims, rng.randint(1, (min(dims) - 1) // 2))


def test_2_separable_extremes_exact(acceptance_log):
    rng = random.Random(20261019)
    specs = [_random_spec(rng) for _ in range(200)]
    with criterion(acceptance_log, "2 separable extremes == full-grid enumeration on 200 random graphs (1e-12, < 30 s)"):
        start = time.perf_counter()
        for spec in specs:
            ext = extremes_separable(spec)
            values = full_spectrum(spec).sorted_values
            assert abs(ext.lambda_conn - values[1]) <= 1e-12, spec
            assert abs(ext.lambda_max - values[-1]) <= 1e-12, spec
        assert time.perf_counter() - start < 30.0


def test_3_even_case_audit(acceptance_log):
    with criterion(acceptance_log, "3 even-case closed forms exact at r=1; mismatch > 1e-2 found for some r >= 2"):
        for n in range(4, 65, 2):
            rec = verify_theorems(GraphSpec.cycle(n, 1), tol=1e-9)
            assert rec.exact_match, (n, rec.deviation)
        for k in (4, 6, 8, 10):
            rec = verify_theorems(GraphSpec.torus(k, k, 1), tol=1e-9)
            assert rec.exact_match, (k, rec.deviation)
        large = [
            (n, r)
            for n in range(8, 41, 2)
            for r in (2, 3, 4)
            if _valid(GraphSpec.cycle(n, r)) and verify_theorems(GraphSpec.cycle(n, r)).deviation > 1e-2
        ]
        assert large
        rec = verify_theorems(GraphSpec.cycle(12, 2))
        assert (12, 2) in large and rec.claimed_argmax_index == (6,) and rec.exact_argmax_index != (6,)


def test_4_complete_graph_degeneracy(acceptance_log):
    with criterion(acceptance_log, "4 complete graphs K_n (odd n 3..15): R = 1, spectrum {0, n x (n-1)}"):
        for n in range(3, 16, 2):
            spec = GraphSpec.cycle(n, (n - 1) // 2)
            assert abs(sync_exact(spec).ratio_exact - 1.0) <= 1e-12
            values = full_spectrum(spec).sorted_values
            assert abs(values[0]) <= 1e-9
            assert np.all(np.abs(values[1:] - n) <= 1e-9)


def test_5_connectivity_independent_of_dimension(acceptance_log):
    with criterion(acceptance_log, "5 connectivity bitwise equal across m = 1..4 (k = 10, r = 1..3)"):
        for r in (1, 2, 3):
            values = {connectivity(GraphSpec.mtorus((10,) * m, r)) for m in (1, 2, 3, 4)}
            assert len(values) == 1, (r, values)


def _column(config_text, name):
    rows = render_csv(run_sweep(parse_config(config_text))).splitlines()
    header = rows[0].split(",")
    cells = [dict(zip(header, line.split(","))) for line in rows[1:]]
    assert all(c["status"] == "ok" for c in cells)
    return [float(c[name]) for c in cells]


def _strict(values, increasing):
    pairs = list(zip(values, values[1:]))
    return all(b > a for a, b in pairs) if increasing else all(b < a for a, b in pairs)


def test_6_trends(acceptance_log):
    with criterion(acceptance_log, "6 trends: up in r (n=100), down in n (r=2), down in m (k=10, r=1); strict"):
        by_r = "family = cycle\ndims = 100\naxis = overhead\naxis_values = 1..10\nmetrics = connectivity, sync_ratio\n"
        by_n = "family = cycle\nr = 2\naxis = nodes\naxis_values = 6..60:2\nmetrics = connectivity, sync_ratio\n"
        by_m = "family = torusm\ndims = 10\nr = 1\naxis = dimension\naxis_values = 1..5\nmetrics = sync_ratio\n"
        for metric in ("connectivity", "sync_ratio"):
            assert _strict(_column(by_r, metric), increasing=True), metric
            assert _strict(_column(by_n, metric), increasing=False), metric
        assert _strict(_column(by_m, "sync_ratio"), increasing=False)


def test_7_sweeps_are_deterministic(tmp_path, acceptance_log):
    configs = sorted(CONFIGS.glob("*.cfg"))
    with criterion(acceptance_log, f"7 byte-identical output across two runs ({len(configs)} configs, csv + json)"):
        assert configs
        for cfg in configs:
            for fmt in ("csv", "json"):
                outputs = []
                for run in (1, 2):
                    path = tmp_path / f"{cfg.stem}.{run}.{fmt}"
                    assert main(["sweep", str(cfg), "--format", fmt, "--output", str(path)]) == 0
                    outputs.append(path.read_bytes())
                assert outputs[0] == outputs[1], cfg
