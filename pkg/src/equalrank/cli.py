"""Command-line frontend: ``python -m equalrank <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails, and 2 for
malformed input.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cliffmat
from .chars import alternating_sum, freudenthal_character, weyl_dimension
from .embed import CATALOG, Embedding, branch, build_embedding
from .gkrs import (
    dirac_induce,
    euler_restriction,
    gkrs_multiplet,
    induce_agrees,
    induce_truncated,
    mu_grid,
    verify_adjointness,
)
from .rootdata import RootSystem, build_root_system, format_weight, weight_str, weyl_elements
from .superring import classify_clifford

COMMANDS = ("rootdata", "branch", "gkrs", "dirac", "induce", "verify")
SUITES = ("gkrs", "thom", "clifford", "frobenius", "weyl")

class InputError(ValueError):
    def __init__(self, fieldname: str, message: str):
        super().__init__(f"{fieldname}: {message}")
        self.field = fieldname


# --- parsing ---------------------------------------------------------------------------

def _scalar(tok, fieldname: str):
    try:
        x = Fraction(str(tok).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(fieldname, f"cannot read {tok!r} as a rational number") from None
    return int(x) if x.denominator == 1 else x


def parse_weight_arg(text: str, fieldname: str) -> tuple:
    """"1,0", "[1,0]", "2,5/2" or "3"."""
    body = text.strip().strip("[]()")
    if not body:
        raise InputError(fieldname, "empty weight")
    return tuple(_scalar(t, fieldname) for t in body.split(","))


def parse_roots_arg(text: str) -> tuple[Optional[str], list]:
    """h roots as JSON ("[2,-1]" or "[[2,-2],[0,2]]"), "" for the torus, or a catalog name."""
    text = text.strip()
    if text in ("", "[]", "t"):
        return None, []
    if text in CATALOG:
        return CATALOG[text]
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("--h", f"not JSON or a catalog name ({exc.msg} at column {exc.colno})") from None
    if not isinstance(data, list):
        raise InputError("--h", "expected a list of root vectors")
    if data and not isinstance(data[0], list):
        data = [data]
    out = []
    for k, root in enumerate(data):
        if not isinstance(root, list) or not root:
            raise InputError("--h", f"root #{k} is not a non-empty list")
        out.append([_scalar(c, f"--h root #{k}") for c in root])
    return None, out


@dataclass
class JobSpec:
    command: str
    g: Optional[str] = None
    h_roots: Optional[list] = None
    weight: Optional[tuple] = None
    bound: int = 12
    output: str = "text"
    suite: Optional[str] = None
    max_coord: int = 3

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise InputError("command", f"unknown command {self.command!r}")
        if self.output not in ("text", "json"):
            raise InputError("--output", f"expected text or json, got {self.output!r}")
        if self.command == "verify":
            if self.suite not in SUITES:
                raise InputError("--suite", f"expected one of {', '.join(SUITES)}")
            if self.max_coord < 0:
                raise InputError("--max-coord", "must be non-negative")
            if self.suite in ("thom", "clifford"):
                return
        if not self.g:
            raise InputError("--g", "a type descriptor is required")
        if self.command in ("branch", "gkrs", "dirac", "induce") and self.h_roots is None:
            raise InputError("--h", f"{self.command} requires h roots (use \"\" for the Cartan subalgebra)")
        if self.command in ("branch", "gkrs", "dirac", "induce") and self.weight is None:
            flag = "--mu" if self.command in ("dirac", "induce") else "--lambda"
            raise InputError(flag, "a weight is required")
        if self.bound < 0:
            raise InputError("--bound", "must be non-negative")


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    """Explicit root vectors (``--embedding`` or ``--h``) win over catalog names."""
    g, h_roots = ns.g, None
    if g in CATALOG:
        g, h_roots = CATALOG[g]
    if ns.h is not None:
        cat_g, roots = parse_roots_arg(ns.h)
        if cat_g is not None:
            if g is not None and g != cat_g:
                raise InputError("--h", f"catalog embedding lives in {cat_g}, not {g}")
            g = cat_g
        h_roots = roots
    if ns.embedding:
        try:
            data = json.loads(ns.embedding)
            g = data["g"]
            h_roots = [[_scalar(c, "--embedding") for c in r] for r in data.get("h_roots", [])]
        except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
            raise InputError("--embedding", f'expected {{"g": ..., "h_roots": [...]}} ({exc})') from None
    if ns.command == "verify" and h_roots is None:
        h_roots = []
    induced = ns.command in ("dirac", "induce")
    text = ns.mu if induced else ns.lam
    weight = parse_weight_arg(text, "--mu" if induced else "--lambda") if text else None
    return JobSpec(ns.command, g, h_roots, weight, ns.bound, ns.output, ns.suite, ns.max_coord)


def _root_system(job: JobSpec) -> RootSystem:
    try:
        return build_root_system(job.g)
    except ValueError as exc:
        raise InputError("--g", str(exc)) from None


def _embedding(job: JobSpec) -> Embedding:
    rs = _root_system(job)
    try:
        return build_embedding(rs, job.h_roots or [])
    except ValueError as exc:
        raise InputError("--h", str(exc)) from None


def _check_weight(job: JobSpec, rs: RootSystem, fieldname: str) -> tuple:
    w = job.weight
    if len(w) != rs.dim:
        raise InputError(fieldname, f"weight has {len(w)} coordinates, {rs.label} needs {rs.dim}")
    return w


# --- output ----------------------------------------------------------------------------

class Result:
    def __init__(self, status: int, payload: dict, lines: list[str]):
        self.status, self.payload, self.lines = status, payload, lines

    def render(self, output: str) -> str:
        if output == "json":
            return json.dumps(self.payload, sort_keys=True)
        return "\n".join(self.lines)


def _terms_json(decomp) -> list:
    return [{"weight": format_weight(w), "coeff": c} for w, c in decomp.sorted_items()]


def _fmt(w) -> str:
    return weight_str(w)


# --- commands --------------------------------------------------------------------------

def cmd_rootdata(job: JobSpec) -> Result:
    rs = _root_system(job)
    payload = {
        "g": rs.label,
        "rank": rs.dim,
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": [format_weight(b) for b in rs.positive_roots],
        "rho": format_weight(rs.rho),
        "weyl_order": rs.weyl_order,
    }
    lines = [
        f"type {rs.label}  rank {rs.dim}  |W| = {rs.weyl_order}",
        f"rho = {_fmt(rs.rho)}",
        f"{len(rs.positive_roots)} positive roots:",
    ] + [f"  {_fmt(b)}" for b in sorted(rs.positive_roots)]
    return Result(0, payload, lines)


def cmd_branch(job: JobSpec) -> Result:
    e = _embedding(job)
    lam = _check_weight(job, e.ambient, "--lambda")
    try:
        dec = branch(e, lam)
    except ValueError as exc:
        raise InputError("--lambda", str(exc)) from None
    payload = {"embedding": e.to_json(), "lambda": format_weight(lam), "terms": _terms_json(dec)}
    lines = [f"{e.ambient.label} -> h, V{_fmt(lam)} restricts to:"]
    lines += [f"  {c:+d}  U{_fmt(w)}" for w, c in dec.sorted_items()]
    return Result(0, payload, lines)


def cmd_gkrs(job: JobSpec) -> Result:
    e = _embedding(job)
    lam = _check_weight(job, e.ambient, "--lambda")
    try:
        mult = gkrs_multiplet(e, lam)
    except ValueError as exc:
        raise InputError("--lambda", str(exc)) from None
    brute = euler_restriction(e, lam)
    ok = mult.as_decomposition() == brute
    payload = {
        "embedding": e.to_json(),
        "lambda": format_weight(lam),
        "multiplet": mult.to_json(),
        "cross_check": "PASS" if ok else "FAIL",
    }
    lines = [f"multiplet of V{_fmt(lam)} ({len(mult.members)} members)", "  sign  weight"]
    lines += [f"  {s:+d}    {_fmt(w)}" for s, w in mult.members]
    lines.append(f"cross-check against Euler restriction: {'PASS' if ok else 'FAIL'}")
    if not ok:
        payload["brute_force"] = _terms_json(brute)
        lines.append(f"  brute force gives {brute!r}")
    return Result(0 if ok else 1, payload, lines)


def _dirac(job: JobSpec, e: Embedding):
    mu = _check_weight(job, e.ambient, "--mu")
    try:
        return mu, dirac_induce(e, mu)
    except ValueError as exc:
        raise InputError("--mu", str(exc)) from None


def cmd_dirac(job: JobSpec) -> Result:
    e = _embedding(job)
    mu, res = _dirac(job, e)
    if res is None:
        return Result(0, {"mu": format_weight(mu), "result": None}, ["0"])
    sign, lam = res
    payload = {"mu": format_weight(mu), "result": {"sign": sign, "weight": format_weight(lam)}}
    return Result(0, payload, [f"{sign:+d} V{_fmt(lam)}"])


def cmd_induce(job: JobSpec) -> Result:
    e = _embedding(job)
    mu, res = _dirac(job, e)
    push = induce_truncated(e, mu, job.bound)
    ok = induce_agrees(e, mu, job.bound)
    payload = {
        "mu": format_weight(mu),
        "bound": job.bound,
        "pushforward": push.to_json(),
        "dirac": None if res is None else {"sign": res[0], "weight": format_weight(res[1])},
        "agrees": ok,
    }
    lines = [f"truncated pushforward (coordinate sum <= {job.bound}):"]
    lines += [f"  {c:+d}  V{_fmt(w)}" for w, c in push.terms.sorted_items()] or ["  0"]
    lines.append(f"dirac: {'0' if res is None else f'{res[0]:+d} V{_fmt(res[1])}'}")
    lines.append(f"agreement: {'PASS' if ok else 'FAIL'}")
    return Result(0 if ok else 1, payload, lines)


# --- verification suites ---------------------------------------------------------------

def _grid(rs: RootSystem, max_coord: int):
    return itertools.product(range(max_coord + 1), repeat=rs.dim)


def suite_gkrs(job: JobSpec) -> list:
    e = _embedding(job)
    index = len(weyl_elements(e.ambient)) // len(weyl_elements(e.sub))
    out = []
    for lam in _grid(e.ambient, job.max_coord):
        m = gkrs_multiplet(e, lam)
        ok = m.as_decomposition() == euler_restriction(e, lam) and len(m.members) == index
        out.append(cliffmat.CheckRecord(f"gkrs {_fmt(lam)}", "pass" if ok else "fail", None if ok else _fmt(lam)))
    return out


def suite_weyl(job: JobSpec) -> list:
    rs = _root_system(job)
    denom = alternating_sum(rs, rs.rho)
    out = []
    for lam in _grid(rs, job.max_coord):
        ch = freudenthal_character(rs, lam)
        ok = alternating_sum(rs, tuple(a + b for a, b in zip(lam, rs.rho))) == ch.convolve(denom)
        ok = ok and ch.total() == weyl_dimension(rs, lam)
        out.append(cliffmat.CheckRecord(f"weyl {_fmt(lam)}", "pass" if ok else "fail", None if ok else _fmt(lam)))
    return out


def suite_frobenius(job: JobSpec) -> list:
    e = _embedding(job)
    out = []
    for mu in mu_grid(e, job.max_coord):
        for lam in _grid(e.ambient, job.max_coord):
            lhs, rhs = verify_adjointness(e, mu, lam)
            ok = lhs == rhs
            out.append(
                cliffmat.CheckRecord(
                    f"adjoint mu={_fmt(mu)} lambda={_fmt(lam)}", "pass" if ok else "fail", None if ok else f"{lhs} != {rhs}"
                )
            )
        ok = induce_agrees(e, mu, job.bound)
        out.append(cliffmat.CheckRecord(f"induce mu={_fmt(mu)}", "pass" if ok else "fail", None if ok else _fmt(mu)))
    return out


def suite_thom(job: JobSpec) -> list:
    alg = cliffmat.build_clifford(3)
    gens = cliffmat.so3_generators()
    out = list(cliffmat.quantization_check(alg, gens))
    out += cliffmat.thom_map_check(alg, gens)
    for kind in ("trivial", "vector", "spin1/2"):
        out += [
            cliffmat.CheckRecord(f"{r.identity} [U={kind}]", r.status, r.witness)
            for r in cliffmat.twisted_action_check(alg, cliffmat.so3_module(kind))
        ]
    return out


def suite_clifford(job: JobSpec) -> list:
    out = []
    for n in range(1, cliffmat.MAX_CLIFFORD_MATRIX_N + 1):
        alg = cliffmat.build_clifford(n)
        out += [cliffmat.CheckRecord(f"{r.identity} [n={n}]", r.status, r.witness) for r in cliffmat.clifford_relations(alg)]
        expected = "Q" if classify_clifford(n).kind == "Q" else "M"
        found = cliffmat.commutant_type(alg)
        ok = found == expected
        out.append(cliffmat.CheckRecord(f"commutant type [n={n}]", "pass" if ok else "fail", None if ok else found))
    for n in range(0, 11):
        ok = classify_clifford(n).rank_of_SR == classify_clifford(n + 2).rank_of_SR
        out.append(cliffmat.CheckRecord(f"rank(n) = rank(n+2) [n={n}]", "pass" if ok else "fail", None if ok else str(n)))
    return out


SUITE_RUNNERS = {
    "gkrs": suite_gkrs,
    "weyl": suite_weyl,
    "frobenius": suite_frobenius,
    "thom": suite_thom,
    "clifford": suite_clifford,
}


def cmd_verify(job: JobSpec) -> Result:
    records = SUITE_RUNNERS[job.suite](job)
    passed = sum(r.passed for r in records)
    failed = [r for r in records if not r.passed]
    payload = {
        "suite": job.suite,
        "passed": passed,
        "total": len(records),
        "records": [r.to_json() for r in records],
    }
    lines = [f"suite {job.suite}: {passed}/{len(records)} checks pass"]
    lines += [f"  FAIL {r.identity}: {r.witness}" for r in failed]
    return Result(0 if not failed else 1, payload, lines)


DISPATCH = {
    "rootdata": cmd_rootdata,
    "branch": cmd_branch,
    "gkrs": cmd_gkrs,
    "dirac": cmd_dirac,
    "induce": cmd_induce,
    "verify": cmd_verify,
}


def run(job: JobSpec) -> Result:
    job.validate()
    return DISPATCH[job.command](job)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="equalrank", description="Equal-rank restriction and Dirac induction calculator")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--g", help='type descriptor ("A2", "B2", "A1xA1") or a catalog name ("A2>A1u1")')
    p.add_argument("--h", help='h simple roots as JSON in g fundamental coordinates, "" for the torus, or a catalog name')
    p.add_argument("--embedding", help='embedding JSON {"g": "A2", "h_roots": [[2,-1]]}')
    p.add_argument("--lambda", dest="lam", help="g-dominant weight, e.g. 1,0")
    p.add_argument("--mu", help="h-dominant weight, e.g. 2,5/2")
    p.add_argument("--bound", type=int, default=12, help="truncation bound on the coordinate sum (default 12)")
    p.add_argument("--suite", choices=SUITES)
    p.add_argument("--max-coord", type=int, default=3)
    p.add_argument("--output", default="text", choices=("text", "json"))
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = run(job_from_args(ns))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(result.render(ns.output))
    return result.status


if __name__ == "__main__":
    sys.exit(main())
