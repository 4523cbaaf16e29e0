"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import math
import time

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import logsumexp, xlogy

from conftest import EX1, EX1_RANKINGS, EX1_SPECTRUM, random_matrix, random_schedule_matrix, to_zero_based
from rankability.core import (
    all_optimal_rankings,
    brute_force_optimal_rankings,
    brute_force_spectrum,
    slater_index,
    slater_spectrum,
)
from rankability.inference import (
    ModeStatus,
    degree_of_linearity,
    joint_posterior,
    lambda_joint,
    mode_estimate,
    normalizer_z,
    posterior_mean,
    summarize,
    thresholds,
)
from rankability.sim import Decision, GeneratorConfig, generate_league, generate_matrix, slater_mc_test

CRICKET_S = [20, 19, 19, 14, 16, 17, 15, 17, 17, 18]
CRICKET_T = [68, 70, 72, 56, 53, 56, 55, 56, 55, 56]
VOLLEY_S = [32, 40, 41, 26, 32, 25, 23, 37, 25, 22]
VOLLEY_T = [210, 182, 182, 132, 132, 156, 132, 182, 182, 182]


@pytest.fixture
def verdict(capsys):
    def emit(number, name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"
    return emit


def _median_ms(f, *args, repeat=30):
    f(*args)
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        f(*args)
        ts.append(time.perf_counter() - t0)
    return float(np.median(ts)) * 1e3


def _oracle_matrices():
    rng = np.random.default_rng(20240501)
    return [random_matrix(rng, int(rng.integers(2, 9))) for _ in range(200)]


def test_criterion_1_example(verdict):
    s = slater_spectrum(EX1)
    r = all_optimal_rankings(EX1)
    exact = (s.a == EX1_SPECTRUM and s.s_hat == 1 and s.a_s_hat == 3
             and r.as_set() == to_zero_based(EX1_RANKINGS) and all(rho[-1] == 2 for rho in r))
    t_spec = _median_ms(slater_spectrum, EX1)
    t_rank = _median_ms(all_optimal_rankings, EX1)
    ok = exact and t_spec < 1.0 and t_rank < 1.0
    verdict(1, "example spectrum, Slater index and optimal rankings", ok,
            f"exact={exact}, spectrum {t_spec:.3f} ms, rankings {t_rank:.3f} ms")


def test_criterion_2_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    bad = 0
    for w in _oracle_matrices():
        if slater_spectrum(w).a != brute_force_spectrum(w).a:
            bad += 1
        elif all_optimal_rankings(w).as_set() != brute_force_optimal_rankings(w).as_set():
            bad += 1
    dt = time.perf_counter() - t0
    verdict(2, "DP matches brute force on 200 random matrices", bad == 0 and dt < 60,
            f"{bad} mismatches, {dt:.1f} s")


def test_criterion_3_spectrum_invariants(verdict):
    bad = 0
    for w in _oracle_matrices():
        s = slater_spectrum(w)
        T = int(w.sum())
        nz = [t for t, a in enumerate(s.a) if a]
        if not (sum(s.a) == math.factorial(w.shape[0]) and s.a == s.a[::-1]
                and nz[0] == s.s_hat and nz[-1] == T - s.s_hat
                and s.s_hat == slater_index(w)):
            bad += 1
    verdict(3, "mass M!, symmetry and support [S, T-S]", bad == 0, f"{bad} violations")


def _realize(m, s_hat, t):
    pairs = [(a, b) for a in range(m) for b in range(a + 1, m)]
    w = np.zeros((m, m), dtype=np.int64)
    for a, b in pairs[:s_hat]:
        w[a, b] = w[b, a] = 1
    rest = pairs[s_hat:]
    for g in range(t - 2 * s_hat):
        a, b = rest[g % len(rest)]
        w[a, b] += 1
    return w


def test_criterion_4_table_formulas(verdict):
    checks = {
        "lambda(20,68)": (round(degree_of_linearity(20, 68), 2), 0.71),
        "lambda(22,182)": (round(degree_of_linearity(22, 182), 2), 0.88),
        "lambda_joint cricket": (round(lambda_joint(CRICKET_S, CRICKET_T), 2), 0.71),
        "lambda_joint volleyball": (round(lambda_joint(VOLLEY_S, VOLLEY_T), 2), 0.82),
    }
    # matrices realizing the (S, T) pairs give the same pooled value end to end
    cricket_m = [10, 9, 9, 8, 8, 8, 8, 8, 8, 8]
    volley_m = [15, 14, 14, 12, 12, 13, 12, 14, 14, 14]
    for tag, ms, ss, ts, want in (("cricket", cricket_m, CRICKET_S, CRICKET_T, 0.71), ("volleyball", volley_m, VOLLEY_S, VOLLEY_T, 0.82)):
        ws = [_realize(m, s, t) for m, s, t in zip(ms, ss, ts)]
        got_s = [slater_index(w) for w in ws]
        got_t = [int(w.sum()) for w in ws]
        checks[f"realized {tag}"] = ((got_s, got_t, round(lambda_joint(got_s, got_t), 2)), (ss, ts, want))
    bad = [k for k, (got, want) in checks.items() if got != want]
    verdict(4, "degree-of-linearity formulas on league tables", not bad, f"mismatched: {bad or 'none'}")


def _log_phi_ref(a, T, p):
    """Direct log-sum of the spectrum terms; scalar or array ``p`` in [0, 1]."""
    t = np.array([i for i, x in enumerate(a) if x], dtype=float)
    la = np.array([math.log(a[int(i)]) for i in t])
    q = np.asarray(p, dtype=float)[..., None]
    out = logsumexp(la + xlogy(T - t, q) + xlogy(t, 1.0 - q), axis=-1)
    return float(out) if np.ndim(p) == 0 else out


def test_criterion_5_inference_numerics(verdict):
    t0 = time.perf_counter()
    spectra = [s for s in (slater_spectrum(w) for w in _oracle_matrices()) if s.t > 0][:100]
    grid = np.linspace(0.5, 1.0, 10_000)
    worst = dict(z=0.0, mean=0.0, dphi=0.0, mode=0.0)
    mpmath.mp.dps = 30
    for s in spectra:
        T, a = s.t, s.a
        ref = float(np.max(_log_phi_ref(a, T, grid)))
        f = lambda p: math.exp(_log_phi_ref(a, T, p) - ref)  # noqa: E731
        z_q = quad(f, 0.5, 1.0, epsabs=0, epsrel=1e-13, limit=200)[0]
        m_q = quad(lambda p: p * f(p), 0.5, 1.0, epsabs=0, epsrel=1e-13, limit=200)[0] / z_q
        z_q *= math.exp(ref)
        worst["z"] = max(worst["z"], abs(normalizer_z(s) - z_q) / z_q)
        worst["mean"] = max(worst["mean"], abs(posterior_mean(s) - m_q))
        phi = lambda p: mpmath.fsum(c * p ** (T - t) * (1 - p) ** t for t, c in enumerate(a) if c)  # noqa: E731
        d1 = mpmath.diff(phi, mpmath.mpf("0.5"))
        worst["dphi"] = max(worst["dphi"], float(abs(d1) / phi(mpmath.mpf("0.5"))))
        lp = _log_phi_ref(a, T, grid)
        # ties (a flat posterior) make every maximizing grid point an argmax
        top = grid[lp >= lp.max() - 1e-12 * max(1.0, abs(lp.max()))]
        worst["mode"] = max(worst["mode"], float(np.min(np.abs(top - mode_estimate(s).mode))))
    dt = time.perf_counter() - t0
    ok = (len(spectra) == 100 and worst["z"] <= 1e-8 and worst["mean"] <= 1e-8
          and worst["dphi"] <= 1e-9 and worst["mode"] <= 1e-3 and dt < 120)
    verdict(5, "Z, mean, phi'(0.5) and mode against independent numerics", ok,
            ", ".join(f"{k} {v:.2e}" for k, v in worst.items()) + f", {dt:.1f} s")


def test_criterion_6_thresholds(verdict):
    exact = thresholds(100)[1] == 0.55
    bad = [t for t in range(1, 10_001) if thresholds(t)[1] != 1 - thresholds(t)[0] / t]
    verdict(6, "lambda_th(100) = 0.55 and lambda_th = 1 - S_th/T", exact and not bad,
            f"lambda_th(100)={thresholds(100)[1]!r}, {len(bad)} identity failures")


def test_criterion_7_synthetic_protocol(verdict):
    t0 = time.perf_counter()
    high = [slater_spectrum(w) for w in generate_league(10, 0.9, 30, schedule=2, seed=90)]
    joint_mode = joint_posterior(high).mode
    fair = [slater_spectrum(w) for w in generate_league(10, 0.5, 30, schedule=2, seed=50)]
    at_half = np.mean([summarize(s).mode == 0.5 for s in fair])
    sig_neg = np.mean([summarize(s).mode_status is ModeStatus.AT_HALF for s in fair])
    means = []
    for p in (0.5, 0.7, 0.9):
        per_seed = [np.mean([slater_index(w) for w in generate_league(10, p, 30, schedule=2, seed=sd)])
                    for sd in range(50)]
        means.append(float(np.mean(per_seed)))
    dt = time.perf_counter() - t0
    ok = 0.85 <= joint_mode <= 0.95 and at_half >= 0.4 and means[0] > means[1] > means[2] and dt < 300
    verdict(7, "synthetic leagues: joint mode, modes at 0.5, mean Slater index trend", ok,
            f"joint mode {joint_mode:.4f}, modes at 0.5 {at_half:.0%} (sigma<0 {sig_neg:.0%}), "
            f"mean S {means[0]:.2f}>{means[1]:.2f}>{means[2]:.2f}, {dt:.1f} s")


def _best_time(f, w, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        f(w)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_8_scaling(verdict):
    rng = np.random.default_rng(8)
    times = {}
    for m, rep in ((12, 5), (14, 3), (16, 2), (18, 1)):
        times[m] = _best_time(slater_spectrum, random_schedule_matrix(rng, m), rep)
    ratios = [times[m + 2] / times[m] for m in (12, 14, 16)]
    t_idx = _best_time(slater_index, random_schedule_matrix(rng, 20), 1)
    ok = times[16] < 30 and min(ratios) >= 3 and t_idx < 60
    verdict(8, "spectrum and Slater index timings", ok,
            f"M=16 {times[16]:.2f} s, ratios " + "/".join(f"{r:.1f}" for r in ratios)
            + f", slater_index M=20 {t_idx:.2f} s")


def test_criterion_9_mc_test(verdict):
    w = generate_matrix(GeneratorConfig(8, 1.0, 2, seed=0))
    res = slater_mc_test(w, n_mc=1000, epsilon=0.05, seed=1)
    hits = 0
    for trial in range(50):
        w0 = generate_matrix(GeneratorConfig(8, 0.5, 2, seed=1000 + trial))
        hits += slater_mc_test(w0, n_mc=1000, epsilon=0.05, seed=trial).p_val <= 0.05
    ok = res.p_val <= 0.01 and res.decision is Decision.REJECT and hits <= 0.15 * 50
    verdict(9, "Monte-Carlo Slater test power and size", ok,
            f"p_val {res.p_val}, {res.decision.value}; null rejections {hits}/50")
