"""Problem files, task execution, and deterministic reports.

A problem file is JSON::

    {
      "variety": {"surface": {"p": 2, "q": 1}},
      "polynomials": {"f": "z2^2 - z1^3", "g": "z1 - z3^2"},
      "tasks": [{"kind": "morse", "inputs": {"f": "f", "g": "g"}, "mode": "paper-example", "seed": 0}]
    }

``variety`` may instead be ``{"general": {"sigma_rays": [...], "semigroup_generators": [...]}}``.
Rational coefficients are written as "num/den" inside polynomial text.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .errors import HYPOTHESIS_FAILURES, DimensionMismatch, ToricWarning, ZeroPolynomial
from .invariants import (
    DEFAULT_SAMPLES,
    EulerTable,
    InvariantReport,
    brasselet_ci,
    brasselet_ci_prepolar,
    brasselet_hypersurface,
    bruce_roberts,
    euler_obstruction_of_function,
    euler_obstruction_origin,
    family_constancy_report,
    gsv_index,
    milnor_number,
    morse_number,
)
from .newton import CompleteIntersectionData, LatticePolynomial, ToricVarietyData, nondegeneracy_heuristic
from .parsing import format_terms, parse_terms
from .toric_surface import (
    has_pure_powers,
    is_prepolar_lattice,
    orbit_decomposition,
    quasimatrix_equations,
    semigroup_generators,
)
from .volume import VolumeConvention

TASK_KINDS = (
    "brasselet",
    "brasselet-ci",
    "eu-origin",
    "eu-f",
    "morse",
    "gsv",
    "milnor",
    "bruce-roberts",
    "family",
    "surface-info",
    "check",
)

# Euler obstructions of X^g need standard mixed volumes (see README, "Volume conventions")
DEFAULT_MODES = {"bruce-roberts": VolumeConvention.STRICT, "eu-origin": VolumeConvention.STRICT}

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2


@dataclass
class Problem:
    variety: dict
    polynomials: dict  # name -> text
    tasks: list

    @classmethod
    def from_dict(cls, data: dict) -> "Problem":
        for key in ("variety", "polynomials", "tasks"):
            if key not in data:
                raise ValueError(f"problem file lacks '{key}'")
        problem = cls(data["variety"], dict(data["polynomials"]), list(data["tasks"]))
        problem.validate()
        return problem

    @classmethod
    def load(cls, path: str) -> "Problem":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def validate(self) -> None:
        for i, task in enumerate(self.tasks, 1):
            kind = task.get("kind")
            if kind not in TASK_KINDS:
                raise ValueError(f"task {i}: unknown kind {kind!r}")
            for role, names in task.get("inputs", {}).items():
                for name in names if isinstance(names, list) else [names]:
                    if name not in self.polynomials:
                        raise ValueError(f"task {i}: polynomial {name!r} ({role}) is not declared")
            if "mode" in task:
                VolumeConvention.parse(task["mode"])
            fam = task.get("family") or {}
            for role, names in (fam.get("deformations") or {}).items():
                for name in names:
                    if name not in self.polynomials:
                        raise ValueError(f"task {i}: deformation {name!r} is not declared")


@dataclass
class Context:
    problem: Problem
    X: ToricVarietyData
    surface: Any  # SurfaceData or None
    trials: int = 64

    def terms(self, name: str):
        return parse_terms(self.problem.polynomials[name], self.X.n_ambient, allow_zero=True)

    def poly(self, name: str) -> LatticePolynomial:
        terms = self.terms(name)
        if not terms:
            raise ZeroPolynomial(f"polynomial {name!r} is zero")
        return LatticePolynomial.from_ambient(terms, self.X)


def build_variety(spec: dict):
    if "surface" in spec:
        s = semigroup_generators(int(spec["surface"]["p"]), int(spec["surface"]["q"]))
        return s.variety(), s
    if "general" in spec:
        g = spec["general"]
        iso = g.get("isolated_singularity")
        X = ToricVarietyData.from_cone(g["sigma_rays"], g["semigroup_generators"], iso, g.get("name", ""))
        return X, None
    if "affine_space" in spec:
        return ToricVarietyData.affine_space(int(spec["affine_space"]["n"])), None
    raise ValueError("variety must be given as 'surface', 'general' or 'affine_space'")


def variety_summary(X: ToricVarietyData, surface) -> dict:
    out = {}
    if surface is not None:
        out["surface"] = {"p": surface.p, "q": surface.q}
    out["name"] = X.name
    out["dimension"] = X.d
    out["sigma_rays"] = [list(r) for r in X.sigma.rays]
    out["semigroup_generators"] = [list(g) for g in X.semigroup_generators]
    return out


# -- result helpers ---------------------------------------------------------------

def _report_dict(r: InvariantReport) -> dict:
    return {
        "kind": r.kind,
        "total": r.total,
        "faces": [
            {
                "face": t.face,
                "rays": t.label,
                "dim": t.dim,
                "m": t.m,
                "sign": t.sign,
                "volume_sum": t.volume_sum,
                "eu": t.eu_value,
                "contribution": t.contribution,
            }
            for t in r.per_face_terms
        ],
        "skipped_faces": list(r.skipped_faces),
        "assumptions": list(r.assumptions),
    }


def _verdict_dict(v, what: str) -> dict:
    out = {"system": what, "verdict": v.kind, "seed": v.seed, "trials": v.trials}
    if v.degenerate:
        out["face"] = v.face
        out["u"] = list(v.u)
        out["point"] = list(v.point)
    return out


def _euler_table(task: dict, X: ToricVarietyData, key: str = "eu") -> EulerTable | None:
    entries = task.get(key)
    if entries is None:
        return None
    values = {}
    for entry in entries:
        face = X.face_by_rays(entry["rays"])
        values[face.id] = int(entry["value"])
    for face in X.faces:
        if face.dim == X.d:
            values.setdefault(face.id, 1)
    return EulerTable(values)


def _names(task, role):
    v = task.get("inputs", {}).get(role)
    if v is None:
        return []
    return v if isinstance(v, list) else [v]


@dataclass
class TaskOutcome:
    result: dict
    exit_code: int = EXIT_OK
    verdicts: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def run_task(ctx: Context, task: dict) -> TaskOutcome:
    kind = task["kind"]
    mode = VolumeConvention.parse(task.get("mode", DEFAULT_MODES.get(kind, VolumeConvention.PAPER_EXAMPLE)))
    seed = int(task.get("seed", 0))
    X = ctx.X
    outcome = TaskOutcome({})
    res = outcome.result

    def verdict(components, what):
        ci = CompleteIntersectionData(tuple(components))
        v = nondegeneracy_heuristic(X, ci, ctx.trials, seed)
        outcome.verdicts.append(_verdict_dict(v, what))
        if v.degenerate:
            outcome.exit_code = EXIT_HYPOTHESIS
        return v

    def need(role):
        names = _names(task, role)
        if not names:
            raise ValueError(f"task '{kind}' needs input '{role}'")
        return [ctx.poly(n) for n in names]

    if kind == "surface-info":
        s = ctx.surface
        if s is None:
            raise DimensionMismatch("surface-info needs a surface variety")
        res["p"], res["q"] = s.p, s.q
        res["hj_digits"] = list(s.hj_digits)
        res["generators"] = [list(m) for m in s.generators]
        res["determinantal"] = s.determinantal
        res["equations"] = [format_terms(qm.as_polynomial()) for qm in quasimatrix_equations(s)]
        res["orbits"] = [
            {"face": o.face, "dim": o.dim, "rays": [list(r) for r in o.rays], "parametrization": o.describe()}
            for o in orbit_decomposition(s)
        ]
        return outcome

    eu = _euler_table(task, X)
    if kind == "eu-origin":
        g = [ctx.poly(n) for n in _names(task, "g")]
        r = euler_obstruction_origin(X, eu, seed, g=g, mode=mode)
        res["draws"] = [{"coefficients": list(c), "value": v} for c, v in r.draws]
        res["symbolic_value"] = r.symbolic_value
        res["Eu(0)"] = r.value
        return outcome

    if kind == "check":
        f = need("f")[0]
        verdict([f], "f")
        gs = [ctx.poly(n) for n in _names(task, "g")]
        if gs:
            verdict(gs, "g")
            verdict(gs + [f], "g,f")
        if ctx.surface is not None:
            n = X.n_ambient
            res["f_isolated"] = has_pure_powers(ctx.terms(_names(task, "f")[0]), n)
            if gs:
                res["g_isolated"] = has_pure_powers(ctx.terms(_names(task, "g")[0]), n)
                try:
                    res["prepolar"] = is_prepolar_lattice(X, gs[0], f)
                except HYPOTHESIS_FAILURES as exc:
                    res["prepolar"] = False
                    res["prepolar_failure"] = exc.code
                if not res["prepolar"]:
                    outcome.exit_code = EXIT_HYPOTHESIS
        return outcome

    if kind in ("brasselet", "milnor"):
        f = need("f")[0]
        verdict([f], "f")
        if kind == "milnor":
            res["mu"] = milnor_number(f, X)
            return outcome
        r = brasselet_hypersurface(X, f, eu, mode, task.get("assumptions", ()))
        res["report"] = _report_dict(r)
        res["B"] = r.total
        return outcome

    if kind == "eu-f":
        f = need("f")[0]
        verdict([f], "f")
        origin = euler_obstruction_origin(X, eu, seed, mode=mode).value
        r = brasselet_hypersurface(X, f, eu, mode, task.get("assumptions", ()))
        res["report"] = _report_dict(r)
        res["Eu(0)"] = origin
        res["B"] = r.total
        res["Eu_f(0)"] = euler_obstruction_of_function(origin, r)
        return outcome

    f = need("f")[0]
    gs = need("g")
    ci = CompleteIntersectionData(tuple(gs) + (f,), bool(task.get("whitney_assertion", True)))
    if kind != "bruce-roberts":
        verdict(gs + [f], "g,f")
    assumptions = task.get("assumptions", ())

    if kind == "brasselet-ci":
        if task.get("prepolar"):
            r = brasselet_ci_prepolar(X, ci, eu, mode, assumptions)
        else:
            r = brasselet_ci(X, ci, _euler_table(task, X, "eu_on_Xg") or eu, mode, assumptions)
        res["report"] = _report_dict(r)
        res["B"] = r.total
    elif kind == "morse":
        b_x = brasselet_hypersurface(X, f, eu, mode, assumptions)
        b_g = brasselet_ci_prepolar(X, ci, eu, mode, assumptions)
        res["B_X"] = b_x.total
        res["B_Xg"] = b_g.total
        res["report_X"] = _report_dict(b_x)
        res["report_Xg"] = _report_dict(b_g)
        res["n"] = morse_number(b_x, b_g, X.d)
    elif kind == "gsv":
        res["GSV"] = gsv_index(X, ci, mode)
    elif kind == "bruce-roberts":
        verdict([f], "f")
        verdict(gs, "g")
        r = bruce_roberts(f, gs[0], X, seed, mode)
        res["mu"] = r.milnor
        res["Eu_Xg(0)"] = r.eu_origin_Xg
        res["B_f_Xg"] = r.b_f_Xg
        res["Eu_f_Xg(0)"] = r.eu_f_Xg
        res["mu_BR"] = r.value
    elif kind == "family":
        fam = task.get("family") or {}
        defs = fam.get("deformations") or {}
        hs = [ctx.poly(n) for n in defs.get("f", [])]
        ls = [[ctx.poly(n) for n in defs.get(name, [])] for name in _names(task, "g")]
        samples = [tuple(Fraction(str(x)) for x in pair) for pair in fam.get("samples", DEFAULT_SAMPLES)]
        rep = family_constancy_report(X, ci, hs, ls, samples, mode, eu, seed)
        res["conditions"] = list(rep.conditions)
        res["samples"] = [[str(s), str(t)] for s, t in rep.samples]
        res["values"] = dict(rep.values)
        res["constant"] = True
    return outcome


def run_problem(problem: Problem, trials: int = 64, mode_override=None, seed_override=None):
    """Run every task; returns (report dict, exit code). Input errors propagate."""
    X, surface = build_variety(problem.variety)
    ctx = Context(problem, X, surface, trials)
    tasks_out = []
    exit_code = EXIT_OK
    for task in problem.tasks:
        task = dict(task)
        if mode_override is not None:
            task["mode"] = VolumeConvention.parse(mode_override).value
        if seed_override is not None:
            task["seed"] = int(seed_override)
        mode = VolumeConvention.parse(task.get("mode", DEFAULT_MODES.get(task["kind"], VolumeConvention.PAPER_EXAMPLE)))
        entry = {
            "kind": task["kind"],
            "mode": mode.value,
            "seed": int(task.get("seed", 0)),
            "inputs": {
                role: [format_terms(ctx.terms(n)) for n in (names if isinstance(names, list) else [names])]
                for role, names in task.get("inputs", {}).items()
            },
            "assumptions": list(task.get("assumptions", [])),
        }
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ToricWarning)
            try:
                outcome = run_task(ctx, task)
            except HYPOTHESIS_FAILURES as exc:
                outcome = TaskOutcome({"error": exc.code, "message": str(exc)}, EXIT_HYPOTHESIS)
        entry["verdicts"] = outcome.verdicts
        entry["warnings"] = sorted({f"{w.category.__name__}: {w.message}" for w in caught if issubclass(w.category, ToricWarning)})
        entry["result"] = outcome.result
        tasks_out.append(entry)
        exit_code = max(exit_code, outcome.exit_code)
    report = {
        "tool": "toric-brasselet",
        "version": __version__,
        "variety": variety_summary(X, surface),
        "tasks": tasks_out,
    }
    return report, exit_code


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


# text rendering ---------------------------------------------------------------

_HEADLINE = {
    "brasselet": ["B"],
    "brasselet-ci": ["B"],
    "eu-origin": ["Eu(0)"],
    "eu-f": ["Eu(0)", "B", "Eu_f(0)"],
    "morse": ["B_X", "B_Xg", "n"],
    "gsv": ["GSV"],
    "milnor": ["mu"],
    "bruce-roberts": ["mu", "Eu_Xg(0)", "B_f_Xg", "Eu_f_Xg(0)", "mu_BR"],
}


def _face_lines(rep: dict, indent="  ") -> list[str]:
    lines = []
    for t in rep["faces"]:
        lines.append(
            f"{indent}face {t['face']} {t['rays']} dim {t['dim']} m {t['m']}: "
            f"{t['sign']:+d} * {t['volume_sum']} * eu {t['eu']} = {t['contribution']}"
        )
    if rep["skipped_faces"]:
        lines.append(f"{indent}skipped faces (dim < m): {', '.join(map(str, rep['skipped_faces']))}")
    for a in rep["assumptions"]:
        lines.append(f"{indent}assumption: {a}")
    return lines


def to_text(report: dict) -> str:
    lines = [f"{report['tool']} {report['version']}"]
    v = report["variety"]
    if "surface" in v:
        lines.append(f"variety: surface p={v['surface']['p']} q={v['surface']['q']}")
    else:
        lines.append(f"variety: {v['name'] or 'toric'} of dimension {v['dimension']}")
    lines.append("semigroup generators: " + " ".join(str(tuple(g)) for g in v["semigroup_generators"]))
    for i, task in enumerate(report["tasks"], 1):
        lines.append(f"task {i}: {task['kind']} (mode {task['mode']}, seed {task['seed']})")
        for role, polys in task["inputs"].items():
            for p in polys:
                lines.append(f"  {role} = {p}")
        for a in task["assumptions"]:
            lines.append(f"  assumption: {a}")
        for vd in task["verdicts"]:
            extra = ""
            if vd["verdict"] == "DegenerateWitness":
                extra = f" on face {vd['face']} u={tuple(vd['u'])} at ({', '.join(vd['point'])})"
            lines.append(f"  nondegeneracy[{vd['system']}]: {vd['verdict']}{extra} (seed {vd['seed']}, trials {vd['trials']})")
        for w in task["warnings"]:
            lines.append(f"  warning: {w}")
        res = task["result"]
        if "error" in res:
            lines.append(f"  error: {res['error']}: {res['message']}")
            continue
        for key in ("report", "report_X", "report_Xg"):
            if key in res:
                lines.append(f"  {key.replace('report', 'faces').replace('_', ' on ')}:")
                lines.extend(_face_lines(res[key], "    "))
        kind = task["kind"]
        if kind == "surface-info":
            lines.append(f"hj digits = {res['hj_digits']}")
            lines.append("generators = " + " ".join(str(tuple(g)) for g in res["generators"]))
            lines.append(f"determinantal = {str(res['determinantal']).lower()}")
            for eq in res["equations"]:
                lines.append(f"equation: {eq}")
            for o in res["orbits"]:
                lines.append(f"orbit face {o['face']} dim {o['dim']}: {o['parametrization']}")
        elif kind == "check":
            for key in ("f_isolated", "g_isolated", "prepolar"):
                if key in res:
                    lines.append(f"{key} = {str(res[key]).lower()}")
            if "prepolar_failure" in res:
                lines.append(f"prepolar failure = {res['prepolar_failure']}")
        elif kind == "family":
            for c in res["conditions"]:
                lines.append(f"  condition: {c}")
            lines.append("  samples (s,t): " + " ".join(f"({s},{t})" for s, t in res["samples"]))
            for key, val in res["values"].items():
                lines.append(f"{key} = {val}")
            lines.append("constant = true")
        elif kind == "eu-origin":
            for d in res["draws"]:
                lines.append(f"  draw {tuple(d['coefficients'])}: {d['value']}")
            lines.append(f"  all-ones run: {res['symbolic_value']}")
            lines.append(f"Eu(0) = {res['Eu(0)']}")
        else:
            for key in _HEADLINE[kind]:
                lines.append(f"{key} = {res[key]}")
    return "\n".join(lines) + "\n"
