"""Closed-form consumption ratios of the interlacing schemes and their minimization.

All arithmetic here is floating point; exactness claims belong to the
rational simulation pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQ = (3 - math.sqrt(5)) / 2


@dataclass(frozen=True)
class Optimum:
    beta: float
    v: float
    delta: float | None = None
    achieved_maxima: tuple = ()
    iterations: int = 0


def cycle_ratio(beta):
    """Steady-cycle consumption ratio of the unshifted scheme with growth factor beta.

    ((beta - 2) + 2*beta^2) / ((beta - 2) + beta^2); defined for beta > 2 so
    the spare gap (beta - 2) * height stays positive.
    """
    if beta <= 2:
        raise ValueError(f"growth factor must be > 2, got {beta}")
    excess = beta - 2
    return (excess + 2 * beta * beta) / (excess + beta * beta)


def delta_of_beta(beta: float) -> float:
    """Shift factor equalizing the two local maxima of the shifted scheme."""
    disc = beta**4 - 2 * beta**3 + 5 * beta**2 + 4 * beta - 12
    if disc < 0:
        raise ValueError(f"no real shift equalizes the maxima at beta={beta}")
    return 0.5 * (beta - beta * beta + math.sqrt(disc))


def interlaced_maxima(beta: float, delta: float) -> tuple:
    """The two local-maximum ratios of the shifted scheme.

    First maximum: (delta + 3)/(delta + 1).  Second maximum:
    2 + (2 - beta)/(beta^2 - 1 + delta); the denominator must not vanish.
    """
    first = (delta + 3) / (delta + 1)
    denom = beta * beta - 1 + delta
    if denom == 0:
        raise ValueError(f"pole at beta={beta}, delta={delta}")
    second = 2 + (2 - beta) / denom
    return first, second


def golden_section_min(f, lo: float, hi: float, tol: float = 1e-9):
    """Golden-section search for the minimum of a unimodal f on [lo, hi].

    Returns (argmin, f(argmin), iterations) with the bracket narrowed to tol.
    """
    a, b = (lo, hi) if lo < hi else (hi, lo)
    h = b - a
    c = a + INV_PHI_SQ * h
    d = a + INV_PHI * h
    yc, yd = f(c), f(d)
    n = max(0, int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))) if h > tol else 0
    for _ in range(n):
        if yc < yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI_SQ * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)
    x = c if yc < yd else d
    return x, min(yc, yd), n


def assert_unimodal(f, lo: float, hi: float, samples: int = 1000) -> int:
    """Pre-scan f on a grid and require a single descend-then-ascend pattern.

    Returns the grid argmin index.  Raises if a second valley shows up
    beyond floating-point jitter.
    """
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    ys = [f(x) for x in xs]
    m = min(range(samples), key=ys.__getitem__)
    jitter = 1e-12
    for i in range(1, m + 1):
        if ys[i] > ys[i - 1] * (1 + jitter) + jitter:
            raise ValueError(f"not unimodal on [{lo}, {hi}]: rise before the valley at x={xs[i]}")
    for i in range(m + 1, samples):
        if ys[i] < ys[i - 1] * (1 - jitter) - jitter:
            raise ValueError(f"not unimodal on [{lo}, {hi}]: dip after the valley at x={xs[i]}")
    return m


def optimize_beta(lo: float = 2.5, hi: float = 10.0, tol: float = 1e-9) -> Optimum:
    """Minimize the unshifted cycle ratio over the growth factor."""
    assert_unimodal(cycle_ratio, lo, hi)
    beta, v, iterations = golden_section_min(cycle_ratio, lo, hi, tol)
    return Optimum(beta=beta, v=v, achieved_maxima=(v,), iterations=iterations)


def equalized_ratio(beta: float) -> float:
    """Value of both maxima of the shifted scheme once the shift equalizes them."""
    first, _ = interlaced_maxima(beta, delta_of_beta(beta))
    return first


def optimal_beta_closed_form() -> float:
    root6 = math.sqrt(6.0)
    return (
        1.5
        + (513 - 114 * root6) ** (1 / 3) / 6
        + (19 * (9 + 2 * root6)) ** (1 / 3) / (2 * 3 ** (2 / 3))
    )


def optimal_speed_closed_form() -> float:
    root6 = math.sqrt(6.0)
    return (
        10
        - 19 ** (2 / 3) / (2 * (4 + 3 * root6)) ** (1 / 3)
        + (19 * (4 + 3 * root6)) ** (1 / 3) / 2 ** (2 / 3)
    ) / 6


def optimize_beta_delta(lo: float = 2.5, hi: float = 10.0, tol: float = 1e-9) -> Optimum:
    """Minimize the equalized shifted-scheme ratio; cross-check the radical forms."""
    assert_unimodal(equalized_ratio, lo, hi)
    beta, v, iterations = golden_section_min(equalized_ratio, lo, hi, tol)
    delta = delta_of_beta(beta)
    maxima = interlaced_maxima(beta, delta)
    beta_closed = optimal_beta_closed_form()
    v_closed = optimal_speed_closed_form()
    if abs(beta - beta_closed) > 1e-6 or abs(v - v_closed) > 1e-6:
        raise AssertionError(
            f"search optimum (beta={beta}, v={v}) disagrees with the closed forms "
            f"(beta={beta_closed}, v={v_closed})"
        )
    return Optimum(beta=beta, delta=delta, v=v, achieved_maxima=maxima, iterations=iterations)


def optimum_to_document(opt: Optimum) -> dict:
    return {
        "beta": opt.beta,
        "delta": opt.delta,
        "v": opt.v,
        "maxima": list(opt.achieved_maxima),
        "iterations": opt.iterations,
    }
