"""Adaptive quadrature over [0, inf) for weights times eta powers.

Strategy: pick a finite cutoff X from the integrand's decay model
(eta(ix) <= e^{-pi x/12} and eta^3(ix) <= e^{-pi x/4} for x >= 1, times
the weight's own growth/decay), adaptively bisect [lo, X] with a nested
Gauss-Kronrod 7/15 panel rule (worst-panel-first), and account for the
tail either as an error bound (exponential decay) or as an explicit
1/X correction (the algebraic-tail Glaisher integrand).

Weights with an x^{-s}-type factor start at lo = 1e-12 instead of 0;
the eta factor decays like x^{-n/2} e^{-n pi/(12 x)} there, so the
discarded mass is bounded explicitly (in practice it underflows to 0).

Everything is deterministic: no randomized subdivision, ties broken by
insertion order, final sums accumulated with math.fsum in panel order.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from math import exp, fsum, log, pi, sqrt

from . import _backend
from . import _forms as F
from .errors import DomainError, NonConvergenceError

__all__ = [
    "KernelSpec",
    "QuadResult",
    "integrate",
    "integrate_glaisher",
    "integrate_rhs_aux",
    "EVAL_BUDGET",
]

EVAL_BUDGET = 100_000
_LO_CLIP = 1e-12
_MIN_TOL = 1e-13

# Forms that carry no eta factor (n = 0 only).
_AUX_FORMS = frozenset(
    {
        F.FORM_GLAISHER11,
        F.FORM_GLAISHER17,
        F.FORM_SECH_AUX,
        F.FORM_TP_RHS3_U,
        F.FORM_TP_RHS1_U,
    }
)


@dataclass(frozen=True)
class KernelSpec:
    """A weight function times an eta power.

    ``form`` is a name from ``_forms.FORM_IDS``; ``a`` is the primary
    parameter, ``p`` the secondary one (the shifted_recip exponent, the
    sech_aux moment, or the transform-pair F selector).  ``n`` is the
    eta power: 1 or 3 for the identity kernels, 0 for the auxiliary
    integrands that carry no eta factor.
    """

    form: str
    n: int
    a: float = 0.0
    p: float = 1.0

    def __post_init__(self):
        if self.form not in F.FORM_IDS:
            raise DomainError(f"unknown kernel form {self.form!r}")
        if self.n not in (0, 1, 3):
            raise DomainError(f"eta power must be 0, 1 or 3, got {self.n}")
        a = float(self.a)
        if math.isnan(a) or math.isinf(a):
            raise DomainError(f"kernel parameter must be finite, got {a!r}")
        fid = F.FORM_IDS[self.form]
        if fid in _AUX_FORMS:
            if self.n != 0:
                raise DomainError(f"form {self.form!r} carries no eta factor (n=0)")
        elif self.n == 0:
            raise DomainError(f"form {self.form!r} requires an eta factor (n=1 or 3)")
        if fid in (
            F.FORM_EXP,
            F.FORM_COS,
            F.FORM_SIN,
            F.FORM_EXP_RECIP,
            F.FORM_COS_RECIP,
            F.FORM_ERF_WEIGHT,
            F.FORM_SCALED_ERFC_RECIP,
            F.FORM_SHIFTED_RECIP,
            F.FORM_EXP_OVER_X,
            F.FORM_SECH_AUX,
        ):
            if a < 0.0:
                raise DomainError(f"form {self.form!r} requires parameter >= 0")
        if fid == F.FORM_IM_RSQRT and a <= 0.0:
            raise DomainError("im_rsqrt requires parameter > 0")
        if fid == F.FORM_SHIFTED_RECIP and self.p not in (0.5, 1.0):
            raise DomainError("shifted_recip exponent must be 1/2 or 1")

    @property
    def form_id(self) -> int:
        return F.FORM_IDS[self.form]


@dataclass(frozen=True)
class QuadResult:
    """Integral estimate with its error budget and tail metadata."""

    value: float
    err_est: float
    evals: int
    cutoff: float
    tail_method: str  # "exp-bound" | "algebraic-correction" | "none"
    tail_value: float = 0.0
    lower: float = 0.0


def _decay_model(k: KernelSpec) -> tuple[float, float, float]:
    """(rate, m, amp) with |integrand(x)| <= amp * x^m * e^{-rate x} for x >= 1."""
    fid = k.form_id
    if k.n == 1:
        rate, m, amp = pi / 12.0, 0.0, 1.0
    elif k.n == 3:
        rate, m, amp = pi / 4.0, 0.0, 1.0
    else:
        rate, m, amp = 0.0, 0.0, 1.0
    if fid == F.FORM_POWER:
        m -= k.a
    elif fid in (F.FORM_EXP, F.FORM_EXP_OVER_X):
        rate += k.a
        if fid == F.FORM_EXP_OVER_X:
            m -= 1.0
    elif fid in (
        F.FORM_EXP_RECIP,
        F.FORM_COS_RECIP,
        F.FORM_ERF_WEIGHT,
        F.FORM_SCALED_ERFC_RECIP,
        F.FORM_SQRT_SHIFT,
    ):
        m -= 0.5
    elif fid == F.FORM_SHIFTED_RECIP:
        m -= k.p
    elif fid == F.FORM_IM_RSQRT:
        m -= 1.5
        amp *= k.a
    elif fid == F.FORM_GLAISHER17:
        rate, m, amp = 0.5, -1.0, 2.0
    elif fid == F.FORM_SECH_AUX:
        rate, m, amp = 1.0, k.p, 2.0
    elif fid == F.FORM_TP_RHS3_U:
        rate = sqrt(pi)
        if k.p == F.FSEL_EXP:
            m, amp = 1.0, 4.0
        else:
            m, amp = 0.0, 4.0 / sqrt(pi)
    elif fid == F.FORM_TP_RHS1_U:
        rate = sqrt(pi / 3.0)
        if k.p == F.FSEL_EXP:
            m, amp = 0.0, 4.0 * sqrt(pi)
        else:
            m, amp = -1.0, 4.0
    elif fid == F.FORM_GLAISHER11:
        raise DomainError("glaisher11 uses the algebraic tail, not a decay model")
    return rate, m, amp


def _tail_integral_bound(rate: float, m: float, amp: float, x: float) -> float:
    """Bound on amp * int_x^inf t^m e^{-rate t} dt (requires rate*x > m)."""
    rx = rate * x
    if rx <= max(m, 0.0) + 1.0:
        return math.inf
    e = rx - m * log(x)
    if e > 745.0:
        return 0.0
    b = amp * exp(-e) / rate
    if m > 0.0:
        b /= 1.0 - m / rx
    return b


def _choose_cutoff(
    rate: float, m: float, amp: float, lo: float, tol_tail: float
) -> tuple[float, float]:
    x = 4.0
    if lo > 0.0 and 1.5 * lo > x:
        x = 1.5 * lo
    while True:
        b = _tail_integral_bound(rate, m, amp, x)
        if b <= tol_tail:
            return x, b
        if x > 1e5:
            raise NonConvergenceError(
                f"no cutoff below 1e5 reaches tail tolerance {tol_tail}"
            )
        x *= 1.5


def _initial_breakpoints(lo: float, hi: float) -> list[float]:
    pts = [lo]
    p = 0.25
    while p <= lo:
        p *= 2.0
    while p < hi:
        pts.append(p)
        p *= 2.0
    pts.append(hi)
    return pts


def _adaptive(
    fid: int,
    n: int,
    p1: float,
    p2: float,
    lo: float,
    hi: float,
    tol_abs: float,
    max_evals: int,
) -> tuple[float, float, int]:
    panel = _backend.panel
    pts = _initial_breakpoints(lo, hi)
    heap: list[list[float]] = []
    seq = 0
    evals = 0
    err_total = 0.0
    for a, b in zip(pts, pts[1:]):
        val, err, _ = panel(fid, n, p1, p2, a, b)
        evals += 15
        heapq.heappush(heap, [-err, seq, a, b, val, err])
        seq += 1
        err_total += err
    done: list[list[float]] = []
    while err_total > tol_abs and heap:
        if evals + 30 > max_evals:
            raise NonConvergenceError(
                f"evaluation budget {max_evals} exhausted "
                f"(err_est {err_total:.3e} > tol {tol_abs:.3e})"
            )
        item = heapq.heappop(heap)
        _, _, a, b, val, err = item
        mid = 0.5 * (a + b)
        if mid - a < 1e-15 * max(abs(a), 1.0):
            done.append(item)  # cannot split further in double precision
            continue
        v1, e1, _ = panel(fid, n, p1, p2, a, mid)
        v2, e2, _ = panel(fid, n, p1, p2, mid, b)
        evals += 30
        err_total += e1 + e2 - err
        heapq.heappush(heap, [-e1, seq, a, mid, v1, e1])
        seq += 1
        heapq.heappush(heap, [-e2, seq, mid, b, v2, e2])
        seq += 1
    panels = sorted(heap + done, key=lambda it: it[2])
    value = fsum(it[4] for it in panels)
    err = fsum(it[5] for it in panels)
    return value, err, evals


def _lower_mass_bound(k: KernelSpec, m: float, amp: float, lo: float) -> float:
    # sup over (0, lo] of amp x^m * x^{-n/2} e^{-n pi/(12 x)}, times lo.
    e = (1.0 + m - 0.5 * k.n) * log(lo) - k.n * pi / (12.0 * lo)
    if e < -745.0:
        return 0.0
    return amp * exp(e)


def _check_tol(tol: float, floor: float) -> float:
    tol = float(tol)
    if not (math.isfinite(tol) and tol >= floor):
        raise DomainError(f"tol must be >= {floor}, got {tol!r}")
    return tol


def integrate(
    kernel: KernelSpec,
    tol: float = 1e-11,
    *,
    cutoff: float | None = None,
    max_evals: int = EVAL_BUDGET,
) -> QuadResult:
    """Integrate f(x) eta^n(ix) dx over [0, inf) to absolute tolerance tol.

    ``cutoff`` overrides the automatic upper truncation point (used by
    the cutoff-robustness checks).  Raises NonConvergenceError when the
    evaluation budget is exhausted before the panel sum reaches the
    tolerance; raises DomainError for parameters outside the kernel's
    validity range.
    """
    if not isinstance(kernel, KernelSpec):
        raise DomainError("kernel must be a KernelSpec")
    if kernel.form_id == F.FORM_GLAISHER11:
        return _integrate_glaisher11(tol, cutoff, max_evals)
    tol = _check_tol(tol, _MIN_TOL)
    rate, m, amp = _decay_model(kernel)
    if rate <= 0.0:
        raise DomainError(f"kernel {kernel.form!r} has no decaying tail model")
    lo = _LO_CLIP if kernel.n >= 1 else 0.0
    if cutoff is None:
        hi, tail = _choose_cutoff(rate, m, amp, lo, 0.25 * tol)
    else:
        hi = float(cutoff)
        if not (math.isfinite(hi) and hi > lo):
            raise DomainError(f"cutoff must exceed the lower limit, got {cutoff!r}")
        tail = _tail_integral_bound(rate, m, amp, hi)
    value, perr, evals = _adaptive(
        kernel.form_id, kernel.n, kernel.a, kernel.p, lo, hi, 0.5 * tol, max_evals
    )
    mass = _lower_mass_bound(kernel, m, amp, lo) if lo > 0.0 else 0.0
    return QuadResult(
        value=value,
        err_est=perr + tail + mass,
        evals=evals,
        cutoff=hi,
        tail_method="exp-bound",
        tail_value=0.0,
        lower=lo,
    )


def _integrate_glaisher11(
    tol: float, cutoff: float | None, max_evals: int
) -> QuadResult:
    tol = _check_tol(tol, 1e-12)
    if cutoff is None:
        hi = 30.0
        while 6.0 * exp(-hi) / (hi * hi) > 0.25 * tol:
            hi *= 1.5
    else:
        hi = float(cutoff)
        if not (math.isfinite(hi) and hi >= 1.0):
            raise DomainError(f"glaisher11 cutoff must be >= 1, got {cutoff!r}")
    remainder = 6.0 * exp(-hi) / (hi * hi)
    value, perr, evals = _adaptive(
        F.FORM_GLAISHER11, 0, 0.0, 0.0, 0.0, hi, 0.5 * tol, max_evals
    )
    # Beyond X the integrand is 1/x^2 + O(e^{-x}/x^2): the tail is 1/X up
    # to `remainder`, which stays in the error budget.
    return QuadResult(
        value=value + 1.0 / hi,
        err_est=perr + remainder,
        evals=evals,
        cutoff=hi,
        tail_method="algebraic-correction",
        tail_value=1.0 / hi,
        lower=0.0,
    )


def integrate_glaisher(
    which: str,
    tol: float = 1e-11,
    *,
    cutoff: float | None = None,
    max_evals: int = EVAL_BUDGET,
) -> QuadResult:
    """The two cosh+cos denominator integrals: ``eq11`` or ``eq17``.

    eq11: (sinh x - sin x)/(x^2 (cosh x + cos x)), algebraic 1/X tail.
    eq17: sinh(x/2) sin(x/2)/(x (cosh x + cos x)), exponential tail.
    Both integrands extend continuously by 0 at x = 0 (they behave like
    x/6 and x/8 there).
    """
    if which == "eq11":
        return _integrate_glaisher11(tol, cutoff, max_evals)
    if which == "eq17":
        tol = _check_tol(tol, 1e-12)
        return integrate(
            KernelSpec("glaisher17", 0), tol, cutoff=cutoff, max_evals=max_evals
        )
    raise DomainError(f"unknown Glaisher integral {which!r}")


_RHS_AUX = {
    "A2_rhs": (1.0, "a"),
    "A4_rhs": (0.0, "a"),
    "A6_rhs": (1.0, "y"),
}


def integrate_rhs_aux(
    which: str,
    param: float,
    tol: float = 1e-11,
    *,
    max_evals: int = EVAL_BUDGET,
) -> QuadResult:
    """Right-hand sides that are themselves integrals.

    A2_rhs(a): (2/pi) int_0^inf x e^{-a x^2/pi} sech x dx
    A4_rhs(a): (2/pi) int_0^inf   e^{-a x^2/pi} sech x dx
    A6_rhs(y): (2/pi) int_{sqrt(pi y)}^inf x sech x dx
    """
    if which not in _RHS_AUX:
        raise DomainError(f"unknown auxiliary integral {which!r}")
    tol = _check_tol(tol, _MIN_TOL)
    param = float(param)
    if not (math.isfinite(param) and param >= 0.0):
        raise DomainError(f"{which} requires a finite parameter >= 0, got {param!r}")
    moment, _ = _RHS_AUX[which]
    if which == "A6_rhs":
        lo = sqrt(pi * param)
        a = 0.0
    else:
        lo = 0.0
        a = param
    scale = 2.0 / pi
    rate, m, amp = 1.0, moment, 2.0
    hi, tail = _choose_cutoff(rate, m, amp, lo, 0.25 * tol / scale)
    value, perr, evals = _adaptive(
        F.FORM_SECH_AUX, 0, a, moment, lo, hi, 0.5 * tol / scale, max_evals
    )
    return QuadResult(
        value=scale * value,
        err_est=scale * (perr + tail),
        evals=evals,
        cutoff=hi,
        tail_method="exp-bound",
        tail_value=0.0,
        lower=lo,
    )
