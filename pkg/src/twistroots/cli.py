"""``verify``: batch front end for every construction in the package.

Each case produces one :class:`VerificationRecord`.  With ``--json`` records
are printed one JSON object per line; otherwise as one text line each plus a
summary.  The exit status is 0 iff every record passed, 1 otherwise, and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Callable

from . import autos, braid, polygon, rootcalc, symplectic
from .errors import BudgetExceeded, TwistRootsError
from .matrix import IntegerMatrix, parse_matrix
from .rootcalc import fraction_str

log = logging.getLogger("twistroots")

STATUSES = ("pass", "fail", "error")


@dataclass
class VerificationRecord:
    case_name: str
    parameters: dict[str, int]
    status: str
    witness: dict[str, Any] | None = None
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def sort_key(self) -> tuple:
        return self.case_name, tuple(sorted(self.parameters.items()))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "VerificationRecord":
        data = json.loads(line)
        return cls(
            case_name=data["case_name"],
            parameters={k: int(v) for k, v in data["parameters"].items()},
            status=data["status"],
            witness=data.get("witness"),
            elapsed_ms=int(data.get("elapsed_ms", 0)),
        )

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        line = f"{self.status.upper():5} {self.case_name} {params}".rstrip()
        note = (self.witness or {}).get("note") or (self.witness or {}).get("error")
        if note and self.status != "pass":
            line += f"  [{note}]"
        return f"{line}  ({self.elapsed_ms} ms)"


def _matrix_json(m: IntegerMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.entries]


# -- cases ---------------------------------------------------------------
# Each case takes its parameters plus a shared options dict and returns
# (passed, witness).


def case_chain(k: int, opts: dict) -> tuple[bool, dict]:
    budget = braid.LetterBudget(opts.get("word_budget"))
    ok = braid.verify_chain_relation(k, budget)
    image = braid.artin_automorphism(braid.full_twist(k + 1)).forward
    return ok, {
        "strands": k + 1,
        "chain_word": str(braid.chain_word(k)),
        "full_twist_images": [str(w) for w in image.images],
        "letters_used": budget.used,
    }


def case_centrality(k: int, opts: dict) -> tuple[bool, dict]:
    budget = braid.LetterBudget(opts.get("word_budget"))
    ok = braid.verify_centrality(k, budget)
    return ok, {"strands": k + 1, "letters_used": budget.used}


def case_root(g: int, opts: dict) -> tuple[bool, dict]:
    factors, free_rank = rootcalc.presentation_invariants(g)
    exponent_ok = rootcalc.verify_root_identity(g)
    homological_ok = symplectic.verify_homological_root(g)
    root, t_d = symplectic.homological_root(g)
    exps = rootcalc.root_exponents(g)
    return exponent_ok and homological_ok, {
        "order": rootcalc.root_order(g),
        "root_exponents": {"w": exps.w_exp, "t": exps.t_exp},
        "invariant_factors": [str(f) for f in factors],
        "free_rank": free_rank,
        "exponent_identity": exponent_ok,
        "homological_identity": homological_ok,
        "homological_root": _matrix_json(root),
    }


def case_symplectic(g: int, opts: dict) -> tuple[bool, dict]:
    d = symplectic.verify_homological_chain(g)
    w = symplectic.chain_word_matrix(g)
    return True, {
        "boundary_class": [str(c) for c in d.coordinates],
        "boundary_class_text": str(d),
        "primitive": d.is_primitive(),
        "chain_classes": [str(c) for c in symplectic.chain_classes(g)],
        "chain_matrix": _matrix_json(w),
    }


def case_polygon(g: int, opts: dict) -> tuple[bool, dict]:
    check = polygon.check_geometric_root(g, opts.get("shift"))
    inv, rot = check.invariants, check.rotation
    realizing = polygon.realizing_shifts(g)
    witness = {
        "V": inv.vertex_orbits,
        "E": inv.edges,
        "F": inv.faces,
        "chi": inv.euler_characteristic,
        "genus": inv.genus,
        "shift": rot.shift,
        "order": rot.order_on_surface,
        "rotation_numbers": [fraction_str(r) for r in rot.fixed_point_rotation_numbers],
        "expected_rotation_numbers": [fraction_str(r) for r in polygon.expected_rotation_numbers(g)],
        "ccw_rotation_numbers": [fraction_str(r) for r in rot.ccw_rotation_numbers],
        "center_rotation_number": fraction_str(rot.center_rotation_number),
        "ledger_net": fraction_str(rootcalc.geometric_ledger(g).net),
        "rotation_ledger_net": fraction_str(polygon.rotation_ledger(rot).net),
        "checks": {
            "genus": check.genus_ok,
            "vertex_orbits": check.orbits_ok,
            "order": check.order_ok,
            "rotation_numbers": check.rotation_numbers_ok,
            "ledger": check.ledger_ok,
        },
        "realizing_shifts": realizing,
    }
    if not check.rotation_numbers_ok:
        witness["note"] = (
            f"shift {rot.shift} gives rotation numbers {', '.join(witness['rotation_numbers'])}, "
            f"expected {', '.join(witness['expected_rotation_numbers'])}; "
            f"realized by shift {', '.join(map(str, realizing))}"
        )
    return check.passed, witness


def case_half_twist(n: int, opts: dict) -> tuple[bool, dict]:
    w = rootcalc.half_twist_witness(n)
    ledger = w.ledger()
    ok = rootcalc.ledger_check(ledger) and w.q % 2 == 1 and w.q + w.central == n - 2
    witness = {
        "q": w.q,
        "p": w.p,
        "central": w.central,
        "ledger_sum": fraction_str(ledger.net),
        "source": "stated" if w.central == 1 else "derived",
    }
    if n % 2 == 0 and n >= 6:
        closed = rootcalc.half_twist_ledger((n - 2) // 2)
        witness["closed_form_ledger_sum"] = fraction_str(closed.net)
        ok = ok and rootcalc.ledger_check(closed)
    return ok, witness


def case_paper_cube(opts: dict) -> tuple[bool, dict]:
    root = opts.get("lhs") or symplectic.PAPER_CUBE_ROOT
    target = opts.get("rhs") or symplectic.PAPER_CUBE_TARGET
    cube_ok = symplectic.paper_cube_example(root, target)
    nontrivial = root != IntegerMatrix.identity(root.rows) and root ** 2 != target
    stabilized = {}
    for dim in (6, 8, 10):
        stabilized[str(dim)] = (
            symplectic.stabilize(root, dim) ** 3 == symplectic.stabilize(target, dim)
        )
    det = root.determinant()
    return cube_ok and nontrivial and det == 1 and all(stabilized.values()), {
        "determinant": str(det),
        "cube_equals_target": cube_ok,
        "nontrivial_root": nontrivial,
        "stabilized": stabilized,
    }


def case_nielsen(n: int, opts: dict) -> tuple[bool, dict]:
    fixture = opts.get("fixture")
    if fixture is not None:
        forward = fixture
        square = autos.compose(forward, forward)
    else:
        root = autos.nielsen_root(n)
        forward = root.forward
        square = autos.power(root, 2)
    target = autos.nielsen_transformation(forward.rank).forward
    return square == target, {
        "images": [str(w) for w in forward.images],
        "square": [str(w) for w in square.images],
    }


def case_nielsen_matrix(n: int, opts: dict) -> tuple[bool, dict]:
    r = symplectic.nielsen_sl_root(n)
    e = symplectic.nielsen_elementary(n)
    a = autos.abelianize(autos.nielsen_root(n).forward)
    det = r.determinant()
    ok = det == 1 and r ** 2 == e and a ** 2 == e
    return ok, {
        "matrix": _matrix_json(r),
        "determinant": str(det),
        "source": "stated" if n % 2 else "derived",
    }


def case_sl2(bound: int, max_power: int, opts: dict) -> tuple[bool, dict]:
    findings = symplectic.sl2_root_search(bound, max_power)
    return not findings, {
        "findings": [{"root": _matrix_json(f.root), "power": f.power} for f in findings],
    }


CASES: dict[str, Callable[..., tuple[bool, dict]]] = {
    "chain": case_chain,
    "centrality": case_centrality,
    "root": case_root,
    "symplectic": case_symplectic,
    "polygon": case_polygon,
    "half-twist": case_half_twist,
    "paper-cube": case_paper_cube,
    "nielsen": case_nielsen,
    "nielsen-matrix": case_nielsen_matrix,
    "sl2": case_sl2,
}


def run_case(case_name: str, parameters: dict[str, int], opts: dict) -> VerificationRecord:
    start = time.perf_counter()
    try:
        ok, witness = CASES[case_name](**parameters, opts=opts)
        status = "pass" if ok else "fail"
    except BudgetExceeded as exc:
        status, witness = "error", {"error": str(exc)}
    except TwistRootsError as exc:
        status, witness = "error", {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationRecord(case_name, dict(parameters), status, witness, elapsed)


def _run_star(job: tuple[str, dict, dict]) -> VerificationRecord:
    return run_case(*job)


def run_cases(jobs: list[tuple[str, dict[str, int]]], opts: dict, workers: int = 1) -> list[VerificationRecord]:
    payload = [(name, params, opts) for name, params in jobs]
    if workers > 1 and len(payload) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_star, payload))
    else:
        records = [_run_star(job) for job in payload]
    return sorted(records, key=VerificationRecord.sort_key)


def battery(max_g: int, max_n: int, max_k: int, bound: int, max_power: int) -> list[tuple[str, dict[str, int]]]:
    jobs: list[tuple[str, dict[str, int]]] = []
    for k in range(1, max_k + 1):
        jobs += [("chain", {"k": k}), ("centrality", {"k": k})]
    for g in range(2, max_g + 1):
        jobs += [("root", {"g": g}), ("symplectic", {"g": g}), ("polygon", {"g": g})]
    for n in range(5, max_n + 1):
        jobs.append(("half-twist", {"n": n}))
    for n in range(3, max_n + 1):
        jobs += [("nielsen", {"n": n}), ("nielsen-matrix", {"n": n})]
    jobs.append(("paper-cube", {}))
    jobs.append(("sl2", {"bound": bound, "max_power": max_power}))
    return jobs


# -- argument parsing ----------------------------------------------------


def _at_least(lo: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}, got {value}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per line")
    common.add_argument(
        "--word-budget",
        type=_at_least(1),
        default=None,
        help=f"letter budget for braid computations (default ${braid.BUDGET_ENV} or {braid.DEFAULT_WORD_BUDGET})",
    )
    common.add_argument("--jobs", type=_at_least(1), default=1, help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true")

    # global flags live on each subcommand so their defaults cannot clobber each other
    parser = argparse.ArgumentParser(prog="verify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("chain", parents=[common], help="braid-level chain relation and centrality")
    p.add_argument("--k", type=_at_least(1), required=True)
    p = sub.add_parser("root", parents=[common], help="root identity: exponent calculus and homology")
    p.add_argument("--g", type=_at_least(2), required=True)
    p = sub.add_parser("half-twist", parents=[common], help="half-twist root witness")
    p.add_argument("--n", type=_at_least(5), required=True)
    p = sub.add_parser("symplectic", parents=[common], help="homological chain relation")
    p.add_argument("--g", type=_at_least(2), required=True)
    p = sub.add_parser("paper-cube", parents=[common], help="displayed 4x4 cube root")
    p.add_argument("--lhs", type=Path, help="matrix fixture overriding the root")
    p.add_argument("--rhs", type=Path, help="matrix fixture overriding the target")
    p = sub.add_parser("nielsen", parents=[common], help="square root of a Nielsen transformation")
    p.add_argument("--n", type=_at_least(3), default=3)
    p.add_argument("--fixture", type=Path, help="endomorphism fixture, one image per line")
    p = sub.add_parser("nielsen-matrix", parents=[common], help="square root of an elementary matrix in SL(n,Z)")
    p.add_argument("--n", type=_at_least(3), required=True)
    p = sub.add_parser("sl2", parents=[common], help="bounded search for roots of the torus twist")
    p.add_argument("--bound", type=_at_least(1), default=50)
    p.add_argument("--max-power", type=_at_least(2), default=6)
    p = sub.add_parser("polygon", parents=[common], help="polygon rotation invariants")
    p.add_argument("--g", type=_at_least(2), required=True)
    p.add_argument("--shift", type=_at_least(1), default=None, help="rotation in side positions (default 2g)")
    p = sub.add_parser("all", parents=[common], help="run the full battery")
    p.add_argument("--max-g", type=_at_least(2), default=10)
    p.add_argument("--max-n", type=_at_least(5), default=40)
    p.add_argument("--max-k", type=_at_least(1), default=7)
    p.add_argument("--bound", type=_at_least(1), default=50)
    p.add_argument("--max-power", type=_at_least(2), default=6)
    return parser


def _jobs_for(args: argparse.Namespace) -> list[tuple[str, dict[str, int]]]:
    cmd = args.command
    if cmd == "chain":
        return [("chain", {"k": args.k}), ("centrality", {"k": args.k})]
    if cmd in ("root", "symplectic", "polygon"):
        return [(cmd, {"g": args.g})]
    if cmd in ("half-twist", "nielsen", "nielsen-matrix"):
        return [(cmd, {"n": args.n})]
    if cmd == "paper-cube":
        return [("paper-cube", {})]
    if cmd == "sl2":
        return [("sl2", {"bound": args.bound, "max_power": args.max_power})]
    return battery(args.max_g, args.max_n, args.max_k, args.bound, args.max_power)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)

    opts: dict[str, Any] = {"word_budget": args.word_budget}
    try:
        if getattr(args, "lhs", None):
            opts["lhs"] = parse_matrix(args.lhs.read_text())
        if getattr(args, "rhs", None):
            opts["rhs"] = parse_matrix(args.rhs.read_text())
        if getattr(args, "fixture", None):
            opts["fixture"] = autos.parse_endomorphism(args.fixture.read_text())
    except (OSError, TwistRootsError) as exc:
        parser.error(str(exc))
    if getattr(args, "shift", None) is not None:
        opts["shift"] = args.shift

    jobs = _jobs_for(args)
    if "fixture" in opts:
        jobs = [("nielsen", {"n": opts["fixture"].rank})]
    records = run_cases(jobs, opts, args.jobs)
    for rec in records:
        print(rec.to_json() if args.json else rec.to_text())
    bad = [r for r in records if r.status != "pass"]
    if not args.json:
        print(f"{len(records)} records: {len(records) - len(bad)} pass, {len(bad)} fail or error")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
