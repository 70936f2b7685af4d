"""Pauli and depolarizing channels with a reproducible Monte Carlo harness.

Every trial derives its own random stream from (seed, trial index), so
reports are bit-identical no matter how the trials are partitioned across
workers.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .css import CssCode, PauliError
from .errors import DecodingFailure, InvalidInput

_PROB_TOL = 1e-9


@dataclass(frozen=True)
class ChannelSpec:
    p_i: float
    p_x: float
    p_y: float
    p_z: float

    def __post_init__(self):
        probs = (self.p_i, self.p_x, self.p_y, self.p_z)
        if any(p < -_PROB_TOL for p in probs):
            raise InvalidInput(f"negative probability in {probs}")
        if abs(sum(probs) - 1.0) > _PROB_TOL:
            raise InvalidInput(f"probabilities sum to {sum(probs)}, not 1")

    @classmethod
    def depolarizing(cls, p: float) -> "ChannelSpec":
        if not 0 <= p <= 1:
            raise InvalidInput(f"depolarizing parameter {p} outside [0, 1]")
        return cls(p_i=1 - p, p_x=p / 3, p_y=p / 3, p_z=p / 3)

    @classmethod
    def pauli(cls, p_x: float, p_y: float, p_z: float) -> "ChannelSpec":
        return cls(p_i=1 - p_x - p_y - p_z, p_x=p_x, p_y=p_y, p_z=p_z)

    def thresholds(self) -> tuple[float, float, float]:
        return (self.p_i, self.p_i + self.p_x, self.p_i + self.p_x + self.p_y)


def sample_error(channel: ChannelSpec, n: int, rng: np.random.Generator) -> PauliError:
    """Independent per-qubit draw: I, X, Y, Z by cumulative threshold."""
    t1, t2, t3 = channel.thresholds()
    u = rng.random(n)
    x_bits = z_bits = 0
    for j in range(n):
        v = u[j]
        if v < t1:
            continue
        if v < t2:
            x_bits |= 1 << j
        elif v < t3:
            x_bits |= 1 << j
            z_bits |= 1 << j
        else:
            z_bits |= 1 << j
    return PauliError(n, x_bits, z_bits)


@dataclass(frozen=True)
class TrialReport:
    trials: int
    successes: int
    decode_failures: int
    logical_errors: int
    seed: int
    channel: ChannelSpec

    def __post_init__(self):
        if self.successes + self.decode_failures + self.logical_errors != self.trials:
            raise InvalidInput("trial counts do not add up")

    @property
    def logical_rate(self) -> float:
        return self.logical_errors / self.trials

    @property
    def failure_rate(self) -> float:
        return self.decode_failures / self.trials

    def to_csv(self) -> str:
        lines = ["field,value"]
        for name in ("trials", "successes", "decode_failures", "logical_errors", "seed"):
            lines.append(f"{name},{getattr(self, name)}")
        lines.append(f"p_i,{self.channel.p_i}")
        lines.append(f"p_x,{self.channel.p_x}")
        lines.append(f"p_y,{self.channel.p_y}")
        lines.append(f"p_z,{self.channel.p_z}")
        return "\n".join(lines) + "\n"


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))


def _run_range(code: CssCode, channel: ChannelSpec, seed: int, lo: int, hi: int):
    successes = failures = logicals = 0
    n = code.n
    for t in range(lo, hi):
        err = sample_error(channel, n, _trial_rng(seed, t))
        syndrome = code.syndrome(err)
        try:
            estimate = code.decode(syndrome)
        except DecodingFailure:
            failures += 1
            continue
        if code.residual_is_logical(err, estimate):
            logicals += 1
        else:
            successes += 1
    return successes, failures, logicals


def monte_carlo(
    code: CssCode,
    channel: ChannelSpec,
    trials: int,
    seed: int,
    workers: int | None = None,
) -> TrialReport:
    """Sample, decode and classify `trials` errors; deterministic in `seed`.

    Worker count only affects wall time: trials are keyed by index, so the
    aggregate is identical for any partition.  Defaults to the QCSS_THREADS
    environment variable, else 1.
    """
    if trials < 1:
        raise InvalidInput(f"need at least one trial, got {trials}")
    if workers is None:
        workers = int(os.environ.get("QCSS_THREADS", "1"))
    workers = max(1, min(workers, trials))
    if workers == 1:
        s, f, l = _run_range(code, channel, seed, 0, trials)
    else:
        bounds = [trials * i // workers for i in range(workers + 1)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda span: _run_range(code, channel, seed, span[0], span[1]),
                    zip(bounds, bounds[1:]),
                )
            )
        s = sum(p[0] for p in parts)
        f = sum(p[1] for p in parts)
        l = sum(p[2] for p in parts)
    return TrialReport(
        trials=trials,
        successes=s,
        decode_failures=f,
        logical_errors=l,
        seed=seed,
        channel=channel,
    )


def component_weight_bound(n: int, p_component: float, radius: int) -> float:
    """P(component error weight exceeds the decoding radius), one component.

    Binomial tail: 1 - sum_{w <= radius} C(n, w) p^w (1-p)^(n-w).
    """
    import math

    acc = 0.0
    for w in range(radius + 1):
        acc += math.comb(n, w) * p_component**w * (1 - p_component) ** (n - w)
    return 1.0 - acc
