"""Command-line interface: ``diffpoly {check, verify, mul, generate}``.

Exit codes: 0 when everything passes, 1 for a verified failure or a violated
hypothesis, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from .algebra import algebra_nilpotency_index
from .derivation import is_locally_nilpotent
from .errors import (
    AssociativityViolation,
    DiffPolyError,
    LeibnizViolation,
    NotLocallyNilpotent,
    SizeExceeded,
)
from .expr import ExpressionError, parse_expression
from .harness import SUITE_ORDER, LemmaId, run_suite
from .instance_file import InputError, dumps, generated_instance, instance_document, load_instance, read_document
from .ore import ore_mul

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _err(message: str) -> None:
    print(f"diffpoly: {message}", file=sys.stderr)


def _load(path: str, bound: Optional[int] = None):
    """Returns ``(doc, instance)`` or an exit code."""
    try:
        doc = read_document(path)
        inst = load_instance(doc)
    except InputError as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    except SizeExceeded as exc:
        _err(str(exc))
        return EXIT_INPUT
    except AssociativityViolation as exc:
        _err(f"algebra invalid: associativity fails on triple {exc.triple}: {exc}")
        return EXIT_FAIL
    except LeibnizViolation as exc:
        _err(f"derivation invalid: Leibniz's rule fails on {exc.pair}: {exc}")
        return EXIT_FAIL
    except (DiffPolyError, KeyError, ValueError, TypeError) as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    if bound is not None:
        inst.nilpotency_bound = bound
    return doc, inst


def cmd_check(args) -> int:
    loaded = _load(args.path, args.bound)
    if isinstance(loaded, int):
        return loaded
    _, inst = loaded
    d = inst.derivation
    if not is_locally_nilpotent(d, max(inst.nilpotency_bound, inst.algebra.dim)):
        print("algebra valid, derivation valid, not locally nilpotent")
        return EXIT_FAIL
    line = f"algebra valid, derivation valid, locally nilpotent (matrix nilindex {d.nil_index})"
    nil = algebra_nilpotency_index(inst.algebra, inst.nilpotency_bound)
    print(line)
    if args.verbose:
        print(f"dimension {inst.algebra.dim}; "
              + (f"R^{nil} = 0" if nil else f"no vanishing power of R up to {inst.nilpotency_bound}"))
    return EXIT_OK


def _parse_lemmas(selection: Optional[str]) -> List[LemmaId]:
    if not selection:
        return list(SUITE_ORDER)
    by_name = {lid.value.lower(): lid for lid in LemmaId}
    by_name.update({"weyl": LemmaId.WEYL_HOM, "main": LemmaId.MAIN_THEOREM})
    chosen = []
    for name in selection.split(","):
        key = name.strip().lower()
        if key not in by_name:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(l.value for l in SUITE_ORDER)}")
        if by_name[key] not in chosen:
            chosen.append(by_name[key])
    return [lid for lid in SUITE_ORDER if lid in chosen]


def _suite_worker(doc: Dict, lemma_id: str, bound: Optional[int]):
    inst = load_instance(doc)
    if bound is not None:
        inst.nilpotency_bound = bound
    return _timed_suite(inst, LemmaId(lemma_id))


def _timed_suite(inst, lemma_id: LemmaId):
    start = time.perf_counter()
    report = run_suite(lemma_id, inst.algebra, inst.derivation, inst.a, inst.nilpotency_bound, inst.power_bound)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return report.to_dict(), elapsed


def build_report(doc: Dict, inst, lemmas: Sequence[LemmaId], parallel: bool = False,
                 bound: Optional[int] = None) -> Dict:
    """Report with keys ``instance``, ``suites``, ``overall`` and a trailing ``timing`` (milliseconds)."""
    if parallel and len(lemmas) > 1:
        with ProcessPoolExecutor() as pool:
            futures = [pool.submit(_suite_worker, doc, lid.value, bound) for lid in lemmas]
            results = [f.result() for f in futures]
    else:
        results = [_timed_suite(inst, lid) for lid in lemmas]
    suites = [entry for entry, _ in results]
    return {
        "instance": instance_document(inst),
        "suites": suites,
        "overall": "pass" if all(s["passed"] for s in suites) else "fail",
        "timing": {entry["id"]: ms for entry, ms in results},
    }


def stable_part(report: Dict) -> Dict:
    """The report without its timing section; identical inputs give identical stable parts."""
    return {key: value for key, value in report.items() if key != "timing"}


def cmd_verify(args) -> int:
    try:
        lemmas = _parse_lemmas(args.lemmas)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    loaded = _load(args.path, args.bound)
    if isinstance(loaded, int):
        return loaded
    doc, inst = loaded
    report = build_report(doc, inst, lemmas, args.parallel, args.bound)
    for suite in report["suites"]:
        status = "PASS" if suite["passed"] else "FAIL"
        print(f"{status} {suite['id']:<12} {suite['checks']:>5} checks  {report['timing'][suite['id']]:>9.1f} ms")
        for failure in suite["failures"][:5]:
            print(f"    {failure['description']}: expected {failure['expected']!r}, got {failure['actual']!r}")
        if len(suite["failures"]) > 5:
            print(f"    ... {len(suite['failures']) - 5} more")
        if suite["id"] == LemmaId.MAIN_THEOREM.value and suite["passed"]:
            det = suite["details"]
            print(f"    k={det['k']}, deg T={det['t_degree']}, m={det['m']}, M={det['M']}, "
                  f"Q identically zero, a^{det['m']} = {det['a_power']}")
        if suite.get("details", {}).get("error") == "NotNilpotentWithinBound":
            print("    R has no vanishing power within the bound, so the quasi-inverses the argument needs "
                  "are not certified; no conclusion is drawn")
    print(f"overall: {report['overall']}")
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
    return EXIT_OK if report["overall"] == "pass" else EXIT_FAIL


def cmd_mul(args) -> int:
    loaded = _load(args.path, args.bound)
    if isinstance(loaded, int):
        return loaded
    _, inst = loaded
    try:
        left = parse_expression(args.left, inst.derivation)
        right = parse_expression(args.right, inst.derivation)
    except ExpressionError as exc:
        _err(f"parse error: {exc}")
        return EXIT_INPUT
    except NotLocallyNilpotent as exc:
        _err(str(exc))
        return EXIT_FAIL
    print(ore_mul(left, right))
    return EXIT_OK


def cmd_generate(args) -> int:
    kind = args.kind
    try:
        if kind == "heisenberg":
            if args.params:
                raise ValueError("heisenberg takes no parameters")
            doc = generated_instance("heisenberg")
        elif kind == "free-nilpotent":
            if len(args.params) != 2:
                raise ValueError("free-nilpotent needs two integers: generators and class")
            g, n = args.params
            doc = generated_instance("free-nilpotent", g, n)
        else:
            raise ValueError(f"unknown kind {kind!r}; choose heisenberg or free-nilpotent")
    except SizeExceeded as exc:
        _err(f"SizeExceeded: {exc}")
        return EXIT_INPUT
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diffpoly", description="Exact computation in R[x; d] and verification of "
                                     "the nil argument on finite-dimensional instances.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_bound(p):
        p.add_argument("--bound", type=int, default=None,
                       help="search bound for a vanishing power of R (overrides the file)")
        return p

    p = with_bound(sub.add_parser("check", help="validate an instance file"))
    p.add_argument("path")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check)

    p = with_bound(sub.add_parser("verify", help="run verification suites on an instance"))
    p.add_argument("path")
    p.add_argument("--lemmas", help="comma-separated subset, e.g. lemma4,MainTheorem")
    p.add_argument("--json-out", help="write the machine-readable report here")
    p.add_argument("--parallel", action="store_true", help="run suites in worker processes")
    p.set_defaults(func=cmd_verify)

    p = with_bound(sub.add_parser("mul", help="multiply two expressions in R[x, x^-1; d]"))
    p.add_argument("path")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("generate", help="write a ready-to-run instance file")
    p.add_argument("kind", help="heisenberg | free-nilpotent")
    p.add_argument("params", nargs="*", type=int, help="generators and class for free-nilpotent")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
