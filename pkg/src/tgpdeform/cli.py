"""Command-line front end.

Every command prints one JSON document on stdout. Exit codes: 0 ok, 1 a check
failed, 2 unparsable input, 3 precondition violated, 4 a computed value
contradicts a theorem (an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from .errors import PreconditionError, TheoremViolation
from .partitions import (
    Partition,
    cocharge_word,
    kostka_number,
    modified_kostka,
    partitions_of,
    standard_subwords,
    word_content,
)

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_THEOREM = 0, 1, 2, 3, 4
MAX_SUITE_D = 7
SHIFT_PAIRS = ((2, -1), (Fraction(-1, 2), 3), (3, 0))


class CheckFailed(Exception):
    def __init__(self, payload: Any):
        super().__init__("check failed")
        self.payload = payload


class TheoremFailed(Exception):
    def __init__(self, payload: Any):
        super().__init__("theorem violated")
        self.payload = payload


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _params(lam: Partition, text: str | None):
    from .tgp import EvalParams, as_params
    if text is None:
        return as_params(lam, None)
    try:
        a = EvalParams.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad parameter list {text!r}: {exc}") from None
    return as_params(lam, a)


class ParseError(ValueError):
    pass


def _rational(text: str):
    from .polyring import to_rational
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


# --------------------------------------------------------------------------
# commands


def cmd_kostka(args) -> Any:
    if args.shape.size != args.content.size:
        raise PreconditionError(f"|{args.shape}| != |{args.content}|")
    if args.modified:
        return modified_kostka(args.shape, args.content).to_json()
    return kostka_number(args.shape, args.content)


def cmd_cocharge(args) -> Any:
    text = args.word.strip()
    # a bare digit string such as 422311123 lists one letter per digit
    toks = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
    try:
        word = [int(tok) for tok in toks]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if not word or any(x < 1 for x in word):
        raise ParseError("letters must be positive integers")
    try:
        content = word_content(word)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    return {
        "word": word,
        "content": str(content),
        "standard_subwords": [list(w) for w in standard_subwords(word)],
        "cocharge": cocharge_word(word),
    }


def cmd_tanisaki(args) -> Any:
    from .tgp import deformed_generators, reduced_generators, tanisaki_generators
    if args.params is None and not args.reduced:
        return tanisaki_generators(args.lam).to_json()
    a = _params(args.lam, args.params)
    fn = reduced_generators if args.reduced else deformed_generators
    return fn(args.lam, a).to_json()


def cmd_dim(args) -> Any:
    from .tgp import build_quotient, d_lambda
    R = build_quotient(args.lam, _params(args.lam, args.params))
    out = {"dim": R.dim, "d_lambda": d_lambda(args.lam), "flat": R.dim == d_lambda(args.lam)}
    if not out["flat"]:
        raise TheoremFailed(out)
    return out


def cmd_gchar(args) -> Any:
    from .tgp import build_quotient, graded_character, graded_character_json, predicted_graded_character
    R = build_quotient(args.lam)
    got = graded_character(R)
    pred = predicted_graded_character(args.lam)
    out = {
        "lambda": str(args.lam),
        "graded_character": graded_character_json(got),
        "predicted": graded_character_json(pred),
        "match": got == pred,
    }
    if not out["match"]:
        raise TheoremFailed(out)
    return out


def cmd_char(args) -> Any:
    from .tgp import build_quotient, character, predicted_character
    R = build_quotient(args.lam, _params(args.lam, args.params))
    ch, pred = character(R), predicted_character(args.lam)
    out = {
        "lambda": str(args.lam),
        "params": R.params.to_json(),
        "character": ch.to_json(),
        "predicted": pred.to_json(),
        "match": ch == pred,
    }
    if not out["match"]:
        raise TheoremFailed(out)
    return out


def cmd_flat_check(args) -> Any:
    from .tgp import algebra_report
    out = algebra_report(args.lam, _params(args.lam, args.params))
    if not all(out["checks"].values()):
        raise TheoremFailed(out)
    return out


def cmd_split_check(args) -> Any:
    from .tgp import split_check
    out = split_check(args.lam, _params(args.lam, args.params))
    if not out["ok"]:
        raise TheoremFailed(out)
    return out


def cmd_schur_weyl(args) -> Any:
    from .schurweyl import dualweyl_check
    n = args.rank if args.rank is not None else args.lam.size
    out = dualweyl_check(args.lam, _params(args.lam, args.params), n)
    if not out["ok"]:
        raise TheoremFailed(out)
    return out


def cmd_rep_matrices(args) -> Any:
    from .modules import verify_affine_relations
    from .tgp import build_quotient, rep_matrices
    R = build_quotient(args.lam, _params(args.lam, args.params))
    M = rep_matrices(R, amended=args.amended)
    invertible = not any(v == 0 for v in R.params)
    out = {
        "lambda": str(args.lam),
        "params": R.params.to_json(),
        "basis": [list(m) for m in R.basis],
        "matrices": M.to_json(),
        "relations": verify_affine_relations(M, require_invertible=invertible),
    }
    if not out["relations"]:
        raise TheoremFailed(out)
    return out


def cmd_example6(args) -> Any:
    from .limits import example_report
    out = example_report(_rational(args.a), _rational(args.b))
    if not out["ok"]:
        raise CheckFailed(out)
    return out


# --------------------------------------------------------------------------
# suite


def suite_job(lam_text: str, trials: int, seed: int) -> list[tuple[str, str, bool]]:
    """All checks for one partition; returns ``(check, detail, passed)`` triples."""
    from .groebner import is_groebner
    from .schurweyl import dualweyl_check
    from .tgp import (
        annihilation_check,
        build_quotient,
        character,
        d_lambda,
        graded_character,
        multiblock_battery,
        parameter_battery,
        point_variety_oracle,
        predicted_character,
        predicted_graded_character,
        reduced_set_check,
        root_product_check,
        shift_scale_check,
        split_check,
        symmetric_evaluation_check,
    )

    lam = Partition.parse(lam_text)
    out: list[tuple[str, str, bool]] = []
    R0 = build_quotient(lam)
    out.append(("graded_character", f"{lam}", graded_character(R0) == predicted_graded_character(lam)))
    for kind, a in parameter_battery(lam, trials, seed):
        tag = f"{lam} [{a}] {kind}"
        R = build_quotient(lam, a)
        out.append(("flatness", tag, R.dim == d_lambda(lam) and character(R) == predicted_character(lam)))
        out.append(("groebner", tag, is_groebner(R.gb)))
        out.append(("reduced_set", tag, reduced_set_check(lam, a)))
        out.append(("symmetric_evaluation", tag, symmetric_evaluation_check(R) and root_product_check(R)))
        out.append(("dualweyl", tag, dualweyl_check(lam, a)["ok"]))
        out.append(("shift_scale", tag, all(shift_scale_check(lam, a, b, c)["ok"] for b, c in SHIFT_PAIRS)))
        if a.is_distinct() and len(a) >= 1 and not a.is_zero():
            try:
                ok = point_variety_oracle(lam, a) == d_lambda(lam) and annihilation_check(lam, a)
            except TheoremViolation:
                ok = False
            out.append(("annihilation", tag, ok))
    for b in multiblock_battery(lam, 3, seed):
        out.append(("split", f"{lam} [{b}]", split_check(lam, b)["ok"]))
    return out


def _workers() -> int:
    env = os.environ.get("TGP_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)


def run_suite(max_d: int, trials: int, seed: int, workers: int | None = None) -> dict:
    from .limits import example_report
    if not 0 <= max_d <= MAX_SUITE_D:
        raise PreconditionError(f"max-d must be between 0 and {MAX_SUITE_D}")
    lams = [str(lam) for d in range(1, max_d + 1) for lam in partitions_of(d)]
    workers = workers or _workers()
    if workers > 1 and len(lams) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(lams))) as pool:
            results = list(pool.map(suite_job, lams, [trials] * len(lams), [seed] * len(lams)))
    else:
        results = [suite_job(lam, trials, seed) for lam in lams]
    rows = [r for res in results for r in res]
    if max_d >= 3:
        for a, b in (("1", "2"), ("1", "1"), ("2", "2")):
            rows.append(("example6", f"a={a} b={b}", example_report(_rational(a), _rational(b))["ok"]))
    counts: dict[str, dict[str, int]] = {}
    failures = []
    for name, detail, ok in rows:
        c = counts.setdefault(name, {"pass": 0, "fail": 0})
        c["pass" if ok else "fail"] += 1
        if not ok:
            failures.append({"check": name, "case": detail})
    return {
        "max_d": max_d,
        "trials": trials,
        "seed": seed,
        "prng": "python random.Random (MT19937), seeded per partition",
        "partitions": len(lams),
        "checks": {k: counts[k] for k in sorted(counts)},
        "failures": failures,
        "ok": not failures,
    }


def cmd_suite(args) -> Any:
    out = run_suite(args.max_d, args.trials, args.seed)
    if not out["ok"]:
        raise CheckFailed(out)
    return out


# --------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tgp", description="Exact computations with deformed Tanisaki quotient rings.")
    p.add_argument("--pretty", action="store_true", help="aligned human-readable output")
    p.add_argument("--timing", action="store_true", help="report wall time on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def lam_arg(sp, required=True):
        sp.add_argument("--lambda", dest="lam", type=_partition, required=required, help='partition, e.g. "2,1"')

    def params_arg(sp):
        sp.add_argument("--params", help='column labels, e.g. "1,1/2" (default: all zero)')

    sp = sub.add_parser("kostka", help="Kostka number or modified Kostka-Foulkes polynomial")
    sp.add_argument("--shape", type=_partition, required=True)
    sp.add_argument("--content", type=_partition, required=True)
    sp.add_argument("--modified", action="store_true")
    sp.set_defaults(fn=cmd_kostka)

    sp = sub.add_parser("cocharge", help="standard subwords and cocharge of a word")
    sp.add_argument("--word", required=True, help='letters as digits ("422311123") or separated by commas or spaces')
    sp.set_defaults(fn=cmd_cocharge)

    sp = sub.add_parser("tanisaki", help="Tanisaki or deformed generating set")
    lam_arg(sp)
    params_arg(sp)
    sp.add_argument("--reduced", action="store_true", help="keep only the reduced generators")
    sp.set_defaults(fn=cmd_tanisaki)

    for name, fn, hlp in (
        ("dim", cmd_dim, "quotient dimension against the multinomial"),
        ("char", cmd_char, "S_d-character of the quotient"),
        ("flat-check", cmd_flat_check, "full report for one algebra"),
        ("split-check", cmd_split_check, "splitting by equal parameters"),
        ("rep-matrices", cmd_rep_matrices, "matrices of the affine action"),
        ("schur-weyl", cmd_schur_weyl, "character-level Schur-Weyl comparison"),
    ):
        sp = sub.add_parser(name, help=hlp)
        lam_arg(sp)
        params_arg(sp)
        sp.set_defaults(fn=fn)
        if name == "rep-matrices":
            sp.add_argument("--amended", action="store_true", help="tensor with the sign representation")
        if name == "schur-weyl":
            sp.add_argument("--rank", type=int, help="n for sl_{n+1} (default |lambda|)")

    sp = sub.add_parser("gchar", help="graded character of the undeformed quotient")
    lam_arg(sp)
    sp.set_defaults(fn=cmd_gchar)

    sp = sub.add_parser("example6", help="three-dimensional (2,1) example and its limits")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(fn=cmd_example6)

    sp = sub.add_parser("suite", help="batch verification over all partitions up to max-d")
    sp.add_argument("--max-d", type=int, default=4)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=cmd_suite)
    return p


def render(obj: Any, pretty: bool) -> str:
    if not pretty:
        return json.dumps(obj)
    if not isinstance(obj, dict):
        return json.dumps(obj, indent=2)
    width = max((len(str(k)) for k in obj), default=0)
    lines = []
    for k, v in obj.items():
        text = json.dumps(v, indent=2) if isinstance(v, (dict, list)) and len(json.dumps(v)) > 60 else json.dumps(v)
        text = text.replace("\n", "\n" + " " * (width + 2))
        lines.append(f"{str(k).ljust(width)}  {text}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    code = EXIT_OK
    try:
        result = args.fn(args)
    except CheckFailed as exc:
        result, code = exc.payload, EXIT_CHECK
    except TheoremFailed as exc:
        result, code = exc.payload, EXIT_THEOREM
    except TheoremViolation as exc:
        result, code = {"error": str(exc)}, EXIT_THEOREM
    except ParseError as exc:
        result, code = {"error": str(exc)}, EXIT_PARSE
    except PreconditionError as exc:
        result, code = {"error": str(exc)}, EXIT_PRECONDITION
    except ValueError as exc:
        result, code = {"error": str(exc)}, EXIT_PRECONDITION
    print(render(result, args.pretty))
    if args.timing:
        print(f"wall time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
