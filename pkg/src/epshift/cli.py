"""Command-line surface: parse, evaluate, classify, map and verify.

One command per invocation, JSON on stdout.  Commands:

* ``eval <element> * <element> ...``       product in the generated context
* ``closure{ <set>; ... }``                smallest closed family
* ``classify family{ ... } | closure{ ... }``  structure report
* ``green <a> <b> <R|L|H|D|J>``            Green relation query
* ``order <a> <b>``                        natural partial order query
* ``map <name> <element>``                 apply a named morphism
* ``check-hom <name>``                     verify one morphism suite
* ``oracle-check``                         product vs pointwise composition
* ``selftest [<suite>]``                   run the verification suites

Exit codes: 0 ok, 1 domain error, 2 syntax error, 3 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import grammar
from .classify import classify
from .core import SemigroupCtx, green, green_witness
from .core import natural_leq as _natural_leq
from .errors import DomainError, ParseError
from .family import DEFAULT_CLOSURE_CAP, Family, close
from .morphisms import (progression_reindex, sigma_hom, to_brandt,
                        to_ext_bicyclic, to_matrix_units)
from .omega_sets import EMPTY
from .selftest import (DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_WINDOW,
                       SuiteOptions, run_check_hom, run_suite, suite_oracle,
                       SUITES)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_SYNTAX = 2
EXIT_SELFTEST = 3


@dataclass
class RunOptions:
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    window: int = DEFAULT_WINDOW
    max_family: int = DEFAULT_CLOSURE_CAP
    pretty: bool = False


def _suite_options(opts: RunOptions) -> SuiteOptions:
    return SuiteOptions(samples=opts.samples, seed=opts.seed,
                        window=opts.window, max_family=opts.max_family)


def _eval_context(factors, opts: RunOptions) -> SemigroupCtx:
    gens = [f.fset for f in factors if not f.is_zero]
    if any(f.is_zero for f in factors) or not gens:
        gens.append(EMPTY)
    return SemigroupCtx(close(gens, cap=opts.max_family))


def _run_eval(cmd, opts: RunOptions):
    ctx = _eval_context(cmd.factors, opts)
    acc = cmd.factors[0]
    for f in cmd.factors[1:]:
        acc = ctx.mul(acc, f)
    return {"result": str(acc)}


def _run_closure(cmd, opts: RunOptions):
    fam = close(cmd.sets, cap=opts.max_family)
    return {"result": {
        "members": [str(f) for f in fam.members],
        "size": len(fam),
        "has_empty": fam.has_empty,
    }}


def _run_classify(cmd, opts: RunOptions):
    if cmd.kind == "closure":
        fam = close(cmd.sets, cap=opts.max_family)
    else:
        fam = Family(cmd.sets)  # raises NotOmegaClosed with a witness
    report = classify(SemigroupCtx(fam))
    return {"result": report.as_dict()}


def _run_green(cmd, opts: RunOptions):
    related = green(cmd.a, cmd.b, cmd.rel)
    out = {"result": related}
    if related and cmd.rel in ("R", "L", "D"):
        x, y = green_witness(cmd.a, cmd.b, cmd.rel)
        out["witness"] = [str(x), str(y)]
    return out


def _run_order(cmd, opts: RunOptions):
    return {"result": _natural_leq(cmd.a, cmd.b)}


def _run_map(cmd, opts: RunOptions):
    a = cmd.element
    if cmd.name == "brandt":
        # the ambient family is the symbolic singleton one; nothing to close
        return {"result": str(to_brandt(a))}
    if cmd.name == "reindex":
        old_start, new_start, step = cmd.args
        return {"result": str(progression_reindex(a, old_start, new_start,
                                                  step))}
    if a.is_zero:
        ctx = SemigroupCtx(close([EMPTY], cap=opts.max_family))
    else:
        ctx = SemigroupCtx(close([a.fset], cap=opts.max_family))
    if cmd.name == "sigma":
        return {"result": sigma_hom(a, ctx)}
    if cmd.name == "ext-bicyclic":
        return {"result": str(to_ext_bicyclic(ctx, a))}
    return {"result": str(to_matrix_units(ctx, a))}


def _suite_payload(results):
    payload = {
        "passed": all(r.passed for r in results),
        "suites": [r.as_dict() for r in results],
    }
    return payload


def _run_check_hom(cmd, opts: RunOptions):
    res = run_check_hom(cmd.name, _suite_options(opts))
    return {"result": _suite_payload([res])}


def _run_oracle_check(cmd, opts: RunOptions):
    res = suite_oracle(_suite_options(opts))
    return {"result": _suite_payload([res])}


def _run_selftest(cmd, opts: RunOptions):
    sopts = _suite_options(opts)
    if cmd.suite is not None:
        results = [run_suite(cmd.suite, sopts)]
    else:
        results = [fn(sopts) for fn in SUITES.values()]
    return {"result": _suite_payload(results)}


_RUNNERS = {
    grammar.EvalCmd: _run_eval,
    grammar.ClosureCmd: _run_closure,
    grammar.ClassifyCmd: _run_classify,
    grammar.GreenCmd: _run_green,
    grammar.OrderCmd: _run_order,
    grammar.MapCmd: _run_map,
    grammar.CheckHomCmd: _run_check_hom,
    grammar.OracleCheckCmd: _run_oracle_check,
    grammar.SelfTestCmd: _run_selftest,
}


def parse(text: str):
    """Parse one command; see :func:`grammar.parse_command`."""
    return grammar.parse_command(text)


def run(cmd, opts: RunOptions = None) -> str:
    """Execute a parsed command and return its JSON output."""
    text, _code = run_with_code(cmd, opts)
    return text


def run_with_code(cmd, opts: RunOptions = None):
    opts = opts or RunOptions()
    try:
        payload = _RUNNERS[type(cmd)](cmd, opts)
        code = EXIT_OK
        if "result" in payload and isinstance(payload["result"], dict) \
                and payload["result"].get("passed") is False:
            code = EXIT_SELFTEST
    except DomainError as exc:
        payload = {"error": {"code": exc.code, "message": str(exc),
                             **{k: v for k, v in exc.details.items()}}}
        code = EXIT_DOMAIN
    except ValueError as exc:
        payload = {"error": {"code": "invalid_value", "message": str(exc)}}
        code = EXIT_DOMAIN
    return _dump(payload, opts), code


def _dump(payload, opts: RunOptions) -> str:
    if opts.pretty:
        return json.dumps(payload, indent=2, sort_keys=True)
    return json.dumps(payload, separators=(",", ":"), sort_keys=True)


_VALUED_FLAGS = ("--seed", "--samples", "--window", "--max-family")


def _split_argv(argv):
    """Separate option tokens from command words, wherever they appear."""
    flags, words = [], []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in _VALUED_FLAGS and i + 1 < len(argv):
            flags.extend(argv[i:i + 2])
            i += 2
        elif arg == "--pretty" or arg in ("-h", "--help") \
                or any(arg.startswith(f + "=") for f in _VALUED_FLAGS):
            flags.append(arg)
            i += 1
        else:
            words.append(arg)
            i += 1
    return flags, words


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="epshift",
        description="exact algebra on shift semigroups decorated by "
                    "eventually periodic sets")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the sampled suites")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="sample count per sampled suite")
    parser.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                        help="window half-width for pointwise oracles")
    parser.add_argument("--max-family", type=int, default=DEFAULT_CLOSURE_CAP,
                        help="member cap for closure computations")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    flags, words = _split_argv(list(sys.argv[1:] if argv is None else argv))
    args = parser.parse_args(flags)

    opts = RunOptions(seed=args.seed, samples=args.samples,
                      window=args.window, max_family=args.max_family,
                      pretty=args.pretty)
    text = " ".join(words).strip()
    if not text:
        parser.print_usage(sys.stderr)
        return EXIT_SYNTAX
    try:
        cmd = parse(text)
    except ParseError as exc:
        payload = {"error": {"code": "syntax_error", "message": exc.message,
                             "line": exc.line, "col": exc.col,
                             "expected": list(exc.expected)}}
        print(_dump(payload, opts))
        return EXIT_SYNTAX
    out, code = run_with_code(cmd, opts)
    print(out)
    return code


def console_main():  # pragma: no cover - thin wrapper
    raise SystemExit(main())


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
