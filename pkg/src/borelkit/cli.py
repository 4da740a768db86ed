"""Command line driver: run a ``.mid`` script and print text or JSON reports."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from . import betti
from .borel import (
    is_borel_definitional,
    is_borel_exchange,
    is_stable,
    regularity,
)
from .errors import (
    BorelKitError,
    BudgetExceeded,
    DegenerateIdeal,
    NotBorelType,
    StructureViolation,
)
from .ideal import MonomialIdeal, truncation
from .primes import associated_primes, associated_primes_by_witness, check_initial_segment
from .ring import RingContext
from .script import Command, Let, RingDecl, Script, ScriptError, evaluate, parse
from .structure import BorelBudget, decompose_structure, is_borel_structural, random_borel, validate_structure

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_BUDGET = 4
EXIT_NOT_BOREL = 5


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ScriptError):
        return EXIT_PARSE
    if isinstance(exc, DegenerateIdeal):
        return EXIT_DEGENERATE
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(exc, (NotBorelType, StructureViolation)):
        return EXIT_NOT_BOREL
    return EXIT_ERROR


@dataclass
class Report:
    command: str
    data: dict
    text: str

    def to_json(self) -> dict:
        return {"command": self.command, **self.data}


class Session:
    """Evaluation state for one script run."""

    def __init__(self, seed: int = 0, budget: int | None = None):
        self.ctx: RingContext | None = None
        self.env: dict[str, MonomialIdeal] = {}
        self.rng = random.Random(seed)
        self.budget = betti.default_budget() if budget is None else budget

    def execute(self, stmt) -> Report | None:
        if isinstance(stmt, RingDecl):
            self.ctx = RingContext(stmt.n)
            return None
        if isinstance(stmt, Let):
            self.env[stmt.name] = evaluate(stmt.expr, self.ctx, self.env)
            return None
        return run_command(stmt, self)

    def ideal(self, expr) -> MonomialIdeal:
        return evaluate(expr, self.ctx, self.env)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def run_command(cmd: Command, session: Session) -> Report:
    name = cmd.name
    if name == "randborel":
        opts = dict(cmd.args)
        ctx = session.ctx
        q = opts.get("q", ctx.n)
        sizes = opts.get("sizes", (0,) * (ctx.n - q + 1))
        budget = BorelBudget(q, opts.get("maxexp", 3), tuple(sizes), opts.get("maxdeg"))
        # unseeded draws consume the session stream so one --seed fixes everything
        seed = opts["seed"] if "seed" in opts else session.rng.randrange(2**63)
        I = random_borel(ctx, budget, seed)
        return Report(name, {"ideal": str(I), "gens": I.to_json()["gens"], "seed": seed}, str(I))

    I = session.ideal(cmd.args[0])
    base = {"ideal": str(I)}

    if name == "isborel":
        d, x, s = is_borel_definitional(I), is_borel_exchange(I), is_borel_structural(I)
        agree = d == x == s
        data = {**base, "definitional": d, "exchange": x, "structural": s, "agree": agree}
        text = (f"{I}: definitional={_flag(d)} exchange={_flag(x)} structural={_flag(s)} "
                f"agree={_flag(agree)}")
        return Report(name, data, text)

    if name in ("reg", "regcheck"):
        cert = regularity(I)
        data = {**base, **cert.to_json()}
        trace = ", ".join(f"{e}:{'stable' if s else 'unstable'}" for e, s in cert.trace)
        text = f"{I}: reg={cert.reg} bound={cert.bound_used} trace=[{trace}]"
        if name == "regcheck":
            oracle = betti.regularity_oracle(I, session.budget)
            data.update(oracle=oracle, equal=oracle == cert.reg)
            text += f" oracle={oracle} equal={_flag(oracle == cert.reg)}"
        return Report(name, data, text)

    if name == "stable":
        e = cmd.args[1]
        s = is_stable(truncation(I, e))
        return Report(name, {**base, "e": e, "stable": s}, f"{I}_(>={e}): stable={_flag(s)}")

    if name == "decompose":
        st = decompose_structure(I)
        valid = validate_structure(I.ctx, st)
        data = {**base, "structure": st.to_json(), "r": list(st.counts), "valid": valid}
        text = (f"{I}: q={st.q} pure={list(st.pure_exponents)} r={tuple(st.counts)} "
                f"valid={_flag(valid)}")
        return Report(name, data, text)

    if name == "ass":
        P = associated_primes(I)
        W = associated_primes_by_witness(I, session.budget)
        seg = check_initial_segment(P)
        data = {**base, "primes": P.to_json(), "witness_agree": P == W, "initial_segments": seg}
        primes = ", ".join("(" + ",".join(I.ctx.names[i - 1] for i in p) + ")" for p in P.sorted())
        text = (f"{I}: ass={{{primes}}} witness_agree={_flag(P == W)} "
                f"initial_segments={_flag(seg)}")
        return Report(name, data, text)

    if name == "betti":
        table = betti.betti_table(I, session.budget)
        data = {**base, **table.to_json(), "reg": table.regularity()}
        return Report(name, data, f"{I}:\n{table.render()}")

    if name == "eq":
        J = session.ideal(cmd.args[1])
        same = I == J
        return Report(name, {**base, "other": str(J), "equal": same}, f"{I} == {J}: {_flag(same)}")

    raise ValueError(f"unknown command {name!r}")


def run_script(script: Script | str, seed: int = 0, budget: int | None = None):
    """Execute every statement, yielding one Report per command."""
    if isinstance(script, str):
        script = parse(script)
    session = Session(seed, budget)
    for stmt in script.statements:
        report = session.execute(stmt)
        if report is not None:
            yield report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="borelkit",
        description="Analyse monomial ideals: Borel type, regularity, structure, Betti numbers.",
    )
    p.add_argument("script", nargs="?", default="-", help="script file (.mid); '-' or omitted reads stdin")
    p.add_argument("--json", action="store_true", help="emit one JSON object per command")
    p.add_argument("--seed", type=int, default=0, help="seed for every random draw (default 0)")
    p.add_argument("--betti-budget", type=int, default=None,
                   help="max multidegrees enumerated by the Betti oracle "
                        "(default: $BORELKIT_BUDGET or 200000)")
    p.add_argument("--quiet", action="store_true", help="print nothing on success")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_ERROR
    if args.script == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        source = args.script
        try:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR

    try:
        script = parse(text)
    except ScriptError as exc:
        print(f"{source}:{exc}", file=sys.stderr)
        return EXIT_PARSE

    out = sys.stdout
    try:
        for report in run_script(script, args.seed, args.betti_budget):
            if args.quiet:
                continue
            if args.json:
                out.write(json.dumps(report.to_json(), sort_keys=True) + "\n")
            else:
                out.write(f"{report.command} {report.text}\n")
    except (BorelKitError, ValueError) as exc:
        print(f"{source}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
