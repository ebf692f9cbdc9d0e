"""
Config driven experiment runner.

`run` validates a config, executes the experiment its kind names and
writes results.json, one CSV per table and the SVG figures into the
output directory. Results depend on the config and the seed only.
"""
import logging
import os
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
from django.conf import settings

from coefficients.conditions import (
    check_at_infinity,
    check_test1,
    check_test2,
    growth_fit,
)
from coefficients.models import ConstantCoefficient, make_counterexample
from coefficients.serializers import CoefficientSerializer
from core.serializers import ConditionReportSerializer
from core.utils import trapezoid
from oracles.heat import heat_solution
from oracles.models import SelfSimilarSolution
from oracles.selfsimilar import (
    residual,
    sample_selfsimilar,
    standard_residual_grid,
)
from pde import profiles
from pde.front import detect_front
from pde.models import Trajectory
from pde.serializers import MeshSerializer, TestFunctionSerializer
from pde.solver import output_schedule, solve_ibvp
from pde.weak_form import TestFunction, weak_residual, weak_scale
from stability.envelopes import (
    analytic_rate_basic,
    envelope_value,
    generalized_odi_envelope,
    ode_comparison,
)
from stability.functionals import basic_model, compute_Y, compute_Z
from stability.models import DecayEnvelope
from stability.poincare import validate_poincare_constant
from stability.serializers import ComparisonSerializer, OdiParamsSerializer
from stability.verification import (
    verify_comparison,
    verify_envelope,
    verify_odi,
)
from weights.assumptions import check_assumption
from weights.models import AssumptionParams, PowerWeight
from weights.serializers import WeightPairSerializer

from . import plots
from .serializers import validate_config
from .writers import ensure_directory, write_figure, write_json, write_table

logger = logging.getLogger(__name__)

# Relative residual accepted for the exact self-similar solution
RESIDUAL_ACCEPTANCE = 1e-10
# Max error, relative to the amplitude, accepted against the heat solution
HEAT_ACCEPTANCE = 1e-3
# Relative gap accepted between the closed-form envelope and the integrator
ODE_GAP_ACCEPTANCE = 1e-6


@dataclass
class ExperimentResult:
    """
    Parameters
    ----------
    kind: str
    results: dict
        The body of results.json
    verdicts: dict
        Short pass/fail summary, aggregated by sweeps
    tables: dict
        CSV name -> (header, rows)
    figures: dict
        SVG name -> matplotlib Figure
    passed: bool
        Whether the experiment's acceptance checks hold
    trajectory: Trajectory, optional
        Written as trajectory.json and trajectory.csv
    """

    kind: str
    results: dict
    verdicts: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)
    figures: dict = field(default_factory=dict)
    passed: bool = True
    trajectory: Optional[Trajectory] = None


@contextmanager
def lab_overrides(tolerances: dict):
    """Applies per-run overrides of settings.LAB"""

    saved = dict(settings.LAB)
    settings.LAB.update(tolerances)
    try:
        yield settings.LAB
    finally:
        settings.LAB.clear()
        settings.LAB.update(saved)


def _report(report) -> dict:
    return dict(ConditionReportSerializer(report).data)


def _solve(attrs, coeff):
    mesh = MeshSerializer().build(attrs["mesh"])
    u0 = profiles.from_spec(mesh, attrs["initial"])
    return solve_ibvp(
        coeff, mesh, u0, attrs["t_end"], attrs.get("output_times")
    )


def _trajectory_summary(traj) -> dict:
    mesh = traj.mesh
    dt = traj.step_log.get("dt", [])
    return {
        "mesh": mesh.to_dict(),
        "times": traj.times,
        "steps": len(dt),
        "dt_min": min(dt, default=None),
        "dt_max": max(dt, default=None),
        "cfl_max": max(traj.step_log.get("cfl", []), default=None),
        "max_u": traj.states.max(axis=1),
        "mass": trapezoid(traj.states * mesh.measure(), mesh.nodes, axis=1),
    }


def analyze_coefficient(attrs: dict) -> ExperimentResult:
    coeff = CoefficientSerializer().build(attrs["coefficient"])
    conditions = attrs.get("conditions") or {}
    results = {"coefficient": coeff.to_dict(), "degenerate": coeff.degenerate}
    verdicts = {}
    tables, figures = {}, {}

    if coeff.degenerate:
        reports = {
            "test1": check_test1(coeff),
            "at-infinity": check_at_infinity(coeff),
        }
        if conditions.get("mu_grid"):
            kwargs = {
                key: conditions[key]
                for key in ("s_range", "c_min")
                if key in conditions
            }
            if "s_range" in kwargs:
                kwargs["s_range"] = tuple(kwargs["s_range"])
            reports["test2"] = check_test2(
                coeff, conditions["mu_grid"], **kwargs
            )
        results["conditions"] = {k: _report(r) for k, r in reports.items()}
        verdicts = {k: r.verdict for k, r in reports.items()}

        n_lo, n_hi = conditions.get("n_range", [8, 28])
        fit = growth_fit(coeff, range(n_lo, n_hi + 1))
        results["growth_fit"] = fit
        s = np.exp(-np.asarray(fit["n"]))
        tables["aI"] = (
            ["n", "s", "aI"],
            zip(fit["n"], s.tolist(), fit["values"]),
        )
        figures["plot"] = plots.growth_figure(s, fit["values"])
    else:
        logger.info("%s is not degenerate, conditions skipped", coeff)

    if attrs.get("assumptions"):
        w = WeightPairSerializer().build(attrs["weight"])
        checked = {}
        for spec in attrs["assumptions"]:
            params = AssumptionParams(**spec)
            report = check_assumption(w, coeff, params)
            checked[params.assumption] = _report(report)
            verdicts[params.assumption] = report.verdict
        results["assumptions"] = checked

    return ExperimentResult(
        "analyze-coefficient", results, verdicts, tables, figures
    )


def _test_functions(attrs, traj) -> list:
    if "test_functions" in attrs:
        serializer = TestFunctionSerializer()
        return [serializer.build(spec) for spec in attrs["test_functions"]]
    # Three bumps over the whole run, inside the mesh
    mesh, times = traj.mesh, traj.times
    length = mesh.x_hi - mesh.x_lo
    return [
        TestFunction(
            mesh.x_lo + fraction * length,
            0.2 * length,
            float(times[0]),
            float(times[-1]),
        )
        for fraction in (0.25, 0.5, 0.75)
    ]


def _weak_form(attrs, traj, coeff) -> dict:
    w = (
        WeightPairSerializer().build(attrs["weight"])
        if "weight" in attrs
        else PowerWeight(0)
    )
    test_fns = _test_functions(attrs, traj)
    value = weak_residual(traj, w, coeff, test_fns)
    scale = weak_scale(traj, w, test_fns)
    return {
        "weight": w.to_dict(),
        "test_functions": [asdict(phi) for phi in test_fns],
        "residual": value,
        "scale": scale,
        "relative": value / scale if scale > 0 else None,
    }


def _heat_reference(attrs, traj, coeff) -> Optional[dict]:
    """Error against exp(-K pi^2 t) sin(pi x) for a first-mode sine run"""

    initial, mesh = attrs["initial"], traj.mesh
    if (
        not isinstance(coeff, ConstantCoefficient)
        or mesh.radial_geometry
        or initial["kind"] != "sine"
        or initial.get("k", 1) != 1
    ):
        return None
    amplitude = initial.get("amplitude", 1.0)
    length = mesh.x_hi - mesh.x_lo
    z = (mesh.nodes - mesh.x_lo) / length
    exact = amplitude * heat_solution(
        coeff.k / length**2, 1, z[None, :], traj.times[:, None]
    )
    error = float(np.abs(traj.states - exact).max())
    return {
        "max_error": error,
        "relative": error / amplitude if amplitude > 0 else None,
    }


def solve(attrs: dict) -> ExperimentResult:
    coeff = CoefficientSerializer().build(attrs["coefficient"])
    traj = _solve(attrs, coeff)
    results = {
        "coefficient": coeff.to_dict(),
        **_trajectory_summary(traj),
        "weak_form": _weak_form(attrs, traj, coeff),
    }
    verdicts = {
        "steps": results["steps"],
        "weak_relative": results["weak_form"]["relative"],
    }
    passed = True
    heat = _heat_reference(attrs, traj, coeff)
    if heat is not None:
        results["heat_reference"] = heat
        verdicts["heat_error"] = heat["relative"]
        passed = heat["relative"] is None or (
            heat["relative"] < HEAT_ACCEPTANCE
        )
    return ExperimentResult(
        "solve",
        results,
        verdicts,
        figures={
            "plot": plots.profiles_figure(
                traj.mesh.nodes, traj.times, traj.states
            )
        },
        passed=passed,
        trajectory=traj,
    )


def _front_trajectory(attrs):
    if attrs["front"]["source"] == "solver":
        coeff = CoefficientSerializer().build(attrs["coefficient"])
        return coeff, _solve(attrs, coeff)
    config = attrs["counterexample"]
    lam, N = config["lam"], config["N"]
    mesh = MeshSerializer().build(attrs["mesh"])
    times = output_schedule(attrs["t_end"], attrs.get("output_times"))
    traj = sample_selfsimilar(
        SelfSimilarSolution(lam, N), mesh, np.concatenate([[0.0], times])
    )
    return make_counterexample(lam, N), traj


def front(attrs: dict) -> ExperimentResult:
    coeff, traj = _front_trajectory(attrs)
    config = attrs["front"]
    report = detect_front(
        traj,
        tuple(config["ball"]),
        config["epsilon"],
        eps_supp=config.get("eps_supp"),
        decades=config.get("decades"),
    )
    rows = []
    for threshold, hulls in zip(report.thresholds, report.supports):
        for t, hull in zip(traj.times, hulls):
            lo, hi = hull if hull is not None else ("", "")
            rows.append((threshold, float(t), lo, hi))
    return ExperimentResult(
        "front",
        {
            "coefficient": coeff.to_dict(),
            "source": config["source"],
            "front": report.to_dict(),
            **_trajectory_summary(traj),
        },
        {"verdict": report.verdict, "t_prime": report.t_prime},
        {"supports": (["threshold", "t", "lo", "hi"], rows)},
        {
            "plot": plots.support_figure(
                traj.times, report.supports[0], report.thresholds[0]
            )
        },
    )


def stability(attrs: dict) -> ExperimentResult:
    config = attrs["stability"]
    params = OdiParamsSerializer().build(config["odi"])
    if "coefficient" in attrs:
        coeff = CoefficientSerializer().build(attrs["coefficient"])
        w = (
            WeightPairSerializer().build(attrs["weight"])
            if "weight" in attrs
            else PowerWeight(0)
        )
    else:
        coeff, w = basic_model(config["K"], params.gamma)
    traj = _solve(attrs, coeff)

    # The basic model's functional is int u^m
    y_weight = PowerWeight(0) if params.theorem == "basic" else w
    series = compute_Y(traj, y_weight, params.y_exponent)
    z_series = [compute_Z(traj, w, p) for p in params.z_exponents]
    odi = verify_odi(series, params, z_series, config["odi_slack"])

    results = {
        "coefficient": coeff.to_dict(),
        "weight": w.to_dict(),
        "params": params.to_dict(),
        "series": series.to_dict(),
        "z_series": [z.to_dict() for z in z_series],
        "odi": odi.to_dict(),
    }
    passed = odi.holds
    verdicts = {"odi": odi.holds}

    env = None
    if params.theorem == "basic":
        k, beta = analytic_rate_basic(
            config["K"], params.gamma, params.m, config["c0"]
        )
        env = DecayEnvelope(k, beta, series.values[0], series.times[0])
        poincare = validate_poincare_constant(
            config["c0"],
            2 * params.m / (params.m + params.gamma),
            samples=config["poincare_samples"],
            seed=attrs["seed"],
        )
        results["poincare"] = poincare
        passed = passed and poincare["valid"]
    elif not params.z_count and (odi.rate or 0) > 0:
        env = DecayEnvelope(
            odi.rate, params.exponent, series.values[0], series.times[0]
        )

    envelope = None
    if env is not None and env.Y0 > 0:
        check = verify_envelope(series, env, config["slack"])
        envelope = envelope_value(env, series.times)
        gap = ode_comparison(env, float(series.times[-1]))
        results["envelope"] = env.to_dict()
        results["envelope_check"] = check.to_dict()
        results["envelope_ode_gap"] = gap
        verdicts["dominated"] = check.dominated
        verdicts["monotone"] = check.monotone
        verdicts["ode_gap"] = gap
        passed = (
            passed
            and check.dominated
            and check.monotone
            and gap < ODE_GAP_ACCEPTANCE
        )

    if config.get("comparison") and series.values[0] > 0:
        spec = config["comparison"]
        comparison = generalized_odi_envelope(
            ComparisonSerializer().build(spec),
            float(series.values[0]),
            float(series.times[-1]),
            t0=float(series.times[0]),
            times=series.times,
        )
        check = verify_comparison(series, comparison, config["slack"])
        results["comparison"] = {
            **spec,
            "series": comparison.to_dict(),
            "check": check.to_dict(),
        }
        verdicts["comparison"] = check.dominated
        passed = passed and check.dominated

    rows = []
    for i, (t, y) in enumerate(zip(series.times, series.values)):
        if envelope is None:
            rows.append((float(t), float(y), "", ""))
        else:
            bound = float(envelope[i])
            rows.append((float(t), float(y), bound, bound - float(y)))
    return ExperimentResult(
        "stability",
        results,
        verdicts,
        {"series": (["t", "Y", "envelope", "margin"], rows)},
        {"plot": plots.decay_figure(series.times, series.values, envelope)},
        passed,
    )


def counterexample(attrs: dict) -> ExperimentResult:
    config = attrs["counterexample"]
    lam, N = config["lam"], config["N"]
    coeff = make_counterexample(lam, N)
    sol = SelfSimilarSolution(lam, N)
    r, t = standard_residual_grid(sol, config["n_s"], config["n_t"])
    result = residual(sol, coeff, r, t)
    test1 = check_test1(coeff)
    fit = growth_fit(coeff)

    passed = (
        result.relative < RESIDUAL_ACCEPTANCE
        and test1.violated
        and fit["slope"] > 0
        and fit["r_squared"] > 0.99
    )
    s = np.exp(-np.asarray(fit["n"]))
    return ExperimentResult(
        "counterexample",
        {
            "coefficient": coeff.to_dict(),
            "solution": sol.to_dict(),
            "residual": {
                "max": result.absolute,
                "relative": result.relative,
            },
            "test1": _report(test1),
            "growth_fit": fit,
        },
        {"residual": result.relative, "test1": test1.verdict},
        {"aI": (["n", "s", "aI"], zip(fit["n"], s.tolist(), fit["values"]))},
        {"plot": plots.growth_figure(s, fit["values"])},
        passed,
    )


RUNNERS = {
    "analyze-coefficient": analyze_coefficient,
    "solve": solve,
    "front": front,
    "stability": stability,
    "counterexample": counterexample,
}


def write_result(result: ExperimentResult, out_dir: str, attrs: dict):
    write_json(
        os.path.join(out_dir, "results.json"),
        {
            "kind": result.kind,
            "seed": attrs["seed"],
            "passed": result.passed,
            "verdicts": result.verdicts,
            "results": result.results,
        },
    )
    for name, (header, rows) in result.tables.items():
        write_table(os.path.join(out_dir, f"{name}.csv"), header, rows)
    if result.trajectory is not None:
        write_json(
            os.path.join(out_dir, "trajectory.json"),
            result.trajectory.to_json(),
        )
        path = os.path.join(out_dir, "trajectory.csv")
        result.trajectory.write_csv(path)
        logger.info("Wrote %s", path)
    if attrs.get("plots", True):
        for name, figure in result.figures.items():
            write_figure(os.path.join(out_dir, f"{name}.svg"), figure)


def run(
    config: dict, out_dir: str, seed: Optional[int] = None
) -> ExperimentResult:
    """
    Validates `config`, runs the experiment and writes its files.

    Raises
    ------
    rest_framework.serializers.ValidationError
        If the config is invalid, before anything is computed
    LabError
        From the computation
    """
    attrs = validate_config(config)
    if seed is not None:
        attrs["seed"] = seed
    ensure_directory(out_dir)
    kind = attrs["kind"]
    logger.info("Running %s into %s", kind, out_dir)

    with lab_overrides(attrs.get("tolerances") or {}):
        if kind == "sweep":
            from .sweep import run_sweep

            result = run_sweep(attrs, out_dir)
        else:
            result = RUNNERS[kind](attrs)
        write_result(result, out_dir, attrs)

    logger.info("%s finished, passed=%s", kind, result.passed)
    return result
