"""Acceptance suite: one test per criterion, at the pinned tolerances.

Run with ``pytest tests/test_acceptance.py -v`` to get one pass/fail
line per criterion.  Each test also prints its measured numbers.

KNOWN RED: ``test_criterion_4_a9_large_b_proxy_as_stated`` pins the
b -> infinity consistency proxy of A9 at b = 50 to 1e-8, exactly as the
acceptance target states.  That bound is mathematically unattainable:
A9(b) = (4/pi) arctan(tanh(sqrt(pi b)/2)) approaches 1 at the
exponential rate (4/pi) e^{-sqrt(pi b)}, which at b = 50 leaves a gap
of 4.59e-6 -- 459x the stated tolerance.  (The same closed form is
quadrature-verified to 1e-9 on its b-grid by criterion 2, so the
formula itself is right; the b = 50 proxy tolerance is not.)  The check
is kept as stated rather than loosened; see notes/decisions.md in the
work tree for the full analysis.
"""

import json
import math
import random
import time

import pytest

from etaint import cli, closed_forms, dedekind, quad, specfun, verify

from conftest import alternating_sum_euler

TWO_PI_OVER_SQRT3 = 2.0 * math.pi / math.sqrt(3.0)


def test_criterion_1_constant_identities():
    """Constant identities reproduce their exact values at tol 1e-10, < 2 s each."""
    registry = {spec.id: spec for spec in verify.default_registry()}
    targets = {
        "EQ9": TWO_PI_OVER_SQRT3,
        "A13": TWO_PI_OVER_SQRT3,
        "A14": 1.0,
        "EQ11": math.pi / 4.0,
        "EQ17": math.pi / 8.0,
        "A7": math.sqrt(2.0) - 1.0,
    }
    for ident, target in targets.items():
        t0 = time.perf_counter()
        rec = verify.verify_identity(registry[ident], {}, tol=1e-10)
        dt = time.perf_counter() - t0
        print(f"criterion 1: {ident} lhs={rec.lhs_value!r} "
              f"|lhs-target|={abs(rec.lhs_value - target):.2e} dt={dt:.3f}s")
        assert rec.rhs_value == pytest.approx(target, rel=1e-15)
        assert abs(rec.lhs_value - target) <= 1e-10
        assert rec.status == "pass"
        assert dt < 2.0


def test_criterion_2_parametric_identities(suite_report):
    """Parametric identities pass at 1e-9 on the default grids; >= 60
    records; full suite under 60 s."""
    parametric = {
        "EQ5", "EQ7", "EQ8", "EQ10", "EQ13", "EQ14", "A1", "A2", "A3",
        "A4", "A5", "A6", "A8", "A9", "A11", "A12", "A15",
    }
    records = [r for r in suite_report.records if r.id in parametric]
    assert all(r.status == "pass" for r in records), [
        (r.id, r.params) for r in records if r.status != "pass"
    ]
    assert all(r.abs_residual <= 1e-9 for r in records)
    assert len(suite_report.records) >= 60
    assert suite_report.total_ms < 60_000.0
    print(
        f"criterion 2: {len(records)} parametric records pass at 1e-9; "
        f"{len(suite_report.records)} total records in {suite_report.total_ms:.0f} ms"
    )


def test_criterion_3_a10_flagged_suite_exits_zero(suite_report, tmp_path):
    """A10 is flagged with a nonzero residual at every grid point and the
    suite still exits 0 (checked end to end through the CLI)."""
    a10 = [r for r in suite_report.records if r.id == "A10"]
    assert len(a10) == 3
    assert all(r.status == "flagged" for r in a10)
    assert all(r.abs_residual > 0.0 for r in a10)
    assert cli.exit_code_for_report(suite_report) == 0

    out = tmp_path / "suite.json"
    code = cli.main(["run", "--all", "--format", "json", "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["suite"]["totals"]["fail"] == 0
    assert payload["suite"]["totals"]["flagged"] == 3
    print(
        "criterion 3: A10 residuals "
        + ", ".join(f"a={r.params['a']:g}: {r.abs_residual:.3e}" for r in a10)
        + "; CLI exit 0"
    )


def test_criterion_4_limit_consistency_web():
    """Closed-form cross-checks with no quadrature, at 1e-10 (the A6-rhs
    link is quadrature by construction and checked at the same bound)."""
    beta2 = specfun.dirichlet_beta(2.0)
    checks = {
        "A15(0) = A14": abs(
            closed_forms.closed_form("A15", {"n": 0}) - closed_forms.closed_form("A14")
        ),
        "A3(1/2) = 1": abs(closed_forms.closed_form("A3", {"nu": 0.5}) - 1.0),
        "A3(1) = 4 beta(2)/pi": abs(
            closed_forms.closed_form("A3", {"nu": 1.0}) - 4.0 * beta2 / math.pi
        ),
        "A6rhs(0) = 4 beta(2)/pi": abs(
            quad.integrate_rhs_aux("A6_rhs", 0.0, 1e-11).value - 4.0 * beta2 / math.pi
        ),
        "EQ8(0) = EQ9": abs(closed_forms.fourier_cos_eta(0.0) - TWO_PI_OVER_SQRT3),
        "EQ5(0) = EQ9": abs(closed_forms.laplace_eta(0.0) - TWO_PI_OVER_SQRT3),
        "A11(0) = 1": abs(closed_forms.closed_form("A11", {"y": 0.0}) - 1.0),
    }
    for name, gap in checks.items():
        print(f"criterion 4: {name}: gap {gap:.3e}")
        assert gap <= 1e-10, name


def test_criterion_4_a9_large_b_proxy_as_stated():
    """A9(b=50) within 1e-8 of 1 -- unattainable as stated, kept red.

    The true gap is (4/pi) e^{-sqrt(50 pi)} (1 + o(1)) = 4.59e-6; see the
    module docstring.  The neighbouring test pins the actual behaviour.
    """
    gap = abs(closed_forms.closed_form("A9", {"b": 50.0}) - 1.0)
    print(f"criterion 4 (A9 proxy): |A9(50) - 1| = {gap:.6e}, stated bound 1e-8")
    assert gap <= 1e-8, (
        f"|A9(50) - 1| = {gap:.3e}; the b=50 proxy cannot meet 1e-8 because "
        "A9 approaches its limit like (4/pi) exp(-sqrt(pi b))"
    )


def test_criterion_4_a9_proxy_true_rate():
    """The honest version of the proxy: the gap matches the exponential
    rate (4/pi) e^{-sqrt(pi b)} and does drop below 1e-8 once b >= 125."""
    gap50 = 1.0 - closed_forms.closed_form("A9", {"b": 50.0})
    predicted = 4.0 / math.pi * math.exp(-math.sqrt(math.pi * 50.0))
    assert gap50 == pytest.approx(predicted, rel=1e-4)
    gap125 = 1.0 - closed_forms.closed_form("A9", {"b": 125.0})
    assert 0.0 < gap125 < 1e-8


def test_criterion_5_eta_oracle_equivalence():
    """Series vs 200-factor product to 1e-13; eta^3 vs cube to 1e-12."""
    worst_eta = worst_cube = 0.0
    for x in (0.1, 0.5, 1.0, 2.0, 10.0):
        series = dedekind.eta(x, 1e-15).value
        product = dedekind.eta_product(x, 200)
        worst_eta = max(worst_eta, abs(series - product))
        cube = dedekind.eta(x, 1e-16).value ** 3
        jacobi = dedekind.eta_cubed(x, 1e-15).value
        worst_cube = max(worst_cube, abs(jacobi - cube))
    print(f"criterion 5: worst series-product gap {worst_eta:.2e}, "
          f"worst jacobi-cube gap {worst_cube:.2e}")
    assert worst_eta <= 1e-13
    assert worst_cube <= 1e-12


def test_criterion_6_error_estimate_calibration(suite_report):
    """|lhs - rhs| <= 10 * lhs_err_est across all passing records."""
    worst = 0.0
    for r in suite_report.records:
        if r.status != "pass":
            continue
        assert r.abs_residual <= 10.0 * r.lhs_err_est, (r.id, r.params)
        if r.lhs_err_est > 0.0:
            worst = max(worst, r.abs_residual / r.lhs_err_est)
    print(f"criterion 6: worst residual/err_est ratio {worst:.2f} (bound 10)")


def test_criterion_7_transform_pair_engine():
    """The three built-in inverse-Laplace pairs reproduce A2, A4 and A7
    to 1e-9, i.e. the derivation mechanism and not only its outputs."""
    rec = verify.transform_pair_check("exp", 3, a=1.0, tol=1e-9)
    a2 = quad.integrate_rhs_aux("A2_rhs", 1.0, 1e-11).value
    assert rec.abs_residual <= 1e-9
    assert abs(rec.lhs_value - a2) <= 1e-9
    print(f"criterion 7: exp pair vs A2: {abs(rec.lhs_value - a2):.2e}")

    rec = verify.transform_pair_check("exp_sqrt", 3, a=1.0, tol=1e-9)
    a4 = quad.integrate_rhs_aux("A4_rhs", 1.0, 1e-11).value
    assert rec.abs_residual <= 1e-9
    assert abs(rec.lhs_value - a4) <= 1e-9
    print(f"criterion 7: exp_sqrt pair vs A4: {abs(rec.lhs_value - a4):.2e}")

    rec = verify.transform_pair_check("sin_sqrt", 3, a=1.0, tol=1e-9)
    a7 = math.sqrt(2.0) - 1.0
    # the A7 integrand is sqrt(2) x the pair kernel (Parseval step)
    assert rec.abs_residual <= 1e-9
    assert abs(math.sqrt(2.0) * rec.rhs_value - a7) <= 1e-9
    assert abs(math.sqrt(2.0) * rec.lhs_value - a7) <= 1e-9
    print(f"criterion 7: sin_sqrt pair vs A7: "
          f"{abs(math.sqrt(2.0) * rec.rhs_value - a7):.2e}")


def test_criterion_8_specfun_microsuite():
    """Digamma reflection, zeta-combination zero, Catalan, erf family."""
    refl = specfun.digamma(0.75) - specfun.digamma(0.25)
    assert refl == pytest.approx(math.pi, abs=1e-12)

    assert abs(specfun.hurwitz_zeta_combo(0.0)) <= 1e-13

    catalan = alternating_sum_euler(lambda k: (2 * k + 1) ** -2.0)
    assert specfun.dirichlet_beta(2.0) == pytest.approx(catalan, abs=1e-12)

    rng = random.Random(20260810)
    worst = 0.0
    for _ in range(1000):
        x = rng.uniform(-6.0, 6.0)
        worst = max(worst, abs(specfun.erf(x) + specfun.erfc(x) - 1.0))
        assert specfun.erf(-x) == -specfun.erf(x)
    assert worst <= 1e-13
    print(f"criterion 8: reflection gap {abs(refl - math.pi):.1e}, "
          f"combo(0) = {specfun.hurwitz_zeta_combo(0.0):.1e}, "
          f"beta(2) gap {abs(specfun.dirichlet_beta(2.0) - catalan):.1e}, "
          f"worst erf complementarity {worst:.1e}")
