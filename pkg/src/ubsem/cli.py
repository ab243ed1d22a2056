"""Command line front end.

    ubsem solve EE-WCO -f graph.tgf
    ubsem solve DC-UBPR -a b -f graph.apx --format apx --text
    ubsem report --semantics WCO,WPR,UBGR --n 6 --samples 300 --seed 0

``-f fixture:NAME`` reads one of the bundled frameworks instead of a file.
"""

from __future__ import annotations

import argparse
import contextlib
import signal
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import fixtures, formats, principles
from . import semantics as sem
from .errors import ArgumentationError, ParseError, ResourceLimitError
from .framework import Framework
from .labelling import Labelling, LabellingSet
from .propagation import grounded_labelling
from .weakly import credulous_wc

PROBLEMS = ("SE", "EE", "DC", "DS", "REPORT")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_LIMIT = 4


@dataclass(frozen=True)
class TaskSpec:
    problem: str
    semantics: str | None
    path: str
    argument: str | None = None
    fmt: str = "tgf"
    output: str = "json"
    max_args: int | None = None
    timeout: float | None = None

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise ValueError(f"unknown problem {self.problem!r}")
        if self.problem != "REPORT":
            sem.get(self.semantics or "")
        if self.problem in ("DC", "DS") and self.argument is None:
            raise ValueError(f"{self.problem} needs a query argument (-a)")
        if self.problem in ("SE", "EE") and self.argument is not None:
            raise ValueError(f"{self.problem} takes no query argument")
        if self.fmt not in ("tgf", "apx"):
            raise ValueError(f"unknown input format {self.fmt!r}")
        if self.output not in ("json", "text"):
            raise ValueError(f"unknown output format {self.output!r}")

    @classmethod
    def from_task(cls, task: str, **kw) -> TaskSpec:
        problem, sep, semantics = task.upper().partition("-")
        if not sep:
            raise ValueError(f"task must look like PROBLEM-SEMANTICS, got {task!r}")
        return cls(problem=problem, semantics=semantics, **kw)


def load_framework(path: str, fmt: str = "tgf") -> Framework:
    if path.startswith("fixture:"):
        return fixtures.load(path.split(":", 1)[1])
    return formats.parse(Path(path).read_text(), fmt)


def _witness(sem_id: str, fw: Framework, labs: LabellingSet) -> Labelling | None:
    # The grounded labelling belongs to every weakly complete family, so it
    # is the canonical witness whenever it is a member.
    g = grounded_labelling(fw)
    if g in labs:
        return g
    ordered = formats.sort_labellings(labs)
    return ordered[0] if ordered else None


def solve(spec: TaskSpec, fw: Framework) -> str:
    sid = spec.semantics.upper()
    if spec.problem == "DC" and sid == "WCO":
        fw.check_members([spec.argument])
        return formats.emit_decision(credulous_wc(fw, spec.argument))
    labs = sem.labellings(sid, fw, spec.max_args)
    if spec.problem == "EE":
        if spec.output == "text":
            return "\n".join(formats.text_labelling(lab) for lab in formats.sort_labellings(labs))
        return formats.emit_labellings(labs)
    if spec.problem == "SE":
        lab = _witness(sid, fw, labs)
        if lab is None:
            return "NO"
        return formats.text_labelling(lab) if spec.output == "text" else formats.emit_labelling(lab)
    fw.check_members([spec.argument])
    if spec.problem == "DC":
        return formats.emit_decision(any(spec.argument in lab.in_ for lab in labs))
    return formats.emit_decision(all(spec.argument in lab.in_ for lab in labs))


@contextlib.contextmanager
def time_budget(seconds: float | None):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def expire(signum, frame):
        raise ResourceLimitError(f"wall-clock budget of {seconds}s exceeded")

    old = signal.signal(signal.SIGALRM, expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def run_task(spec: TaskSpec, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        fw = load_framework(spec.path, spec.fmt)
    except (OSError, KeyError) as exc:
        print(f"error: cannot read {spec.path}: {exc}", file=err)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"error: parse: {exc}", file=err)
        return EXIT_INPUT
    try:
        with time_budget(spec.timeout):
            text = solve(spec, fw)
    except ResourceLimitError as exc:
        print(f"LIMIT: {exc}", file=err)
        return EXIT_LIMIT
    except RecursionError:
        print("LIMIT: recursion depth exhausted", file=err)
        return EXIT_LIMIT
    except ArgumentationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    print(text, file=out)
    return EXIT_OK


def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(p) for p in text.split(",") if p.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ubsem", description="Weakly complete and ub-semantics solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve SE/EE/DC/DS tasks")
    s.add_argument("task", help="PROBLEM-SEMANTICS, e.g. EE-WCO, DC-UBPR, SE-BBU-GR")
    s.add_argument("-f", "--file", required=True, help="input file, or fixture:NAME")
    s.add_argument("-a", "--argument")
    s.add_argument("--format", choices=("tgf", "apx"))
    s.add_argument("--max-args", type=int, default=None,
                   help="refuse enumeration above this many arguments (-1 for no limit)")
    s.add_argument("--timeout", type=float, default=None, help="wall-clock budget in seconds")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="output", action="store_const", const="json")
    mode.add_argument("--text", dest="output", action="store_const", const="text")
    s.set_defaults(output="json")

    r = sub.add_parser("report", help="sampled principle matrix")
    r.add_argument("--semantics", default=",".join(principles.DEFAULT_SEMANTICS))
    r.add_argument("--n", type=int, default=6, help="largest sampled framework")
    r.add_argument("--p", type=_parse_floats, default=(0.1, 0.3, 0.5), help="comma separated edge probabilities")
    r.add_argument("--samples", type=int, default=300)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--cycles", type=int, default=7, help="longest cycle for cycle-homogeneity")
    r.add_argument("--strict", action="store_true", help="exit 1 when a non-informational row disagrees")

    sub.add_parser("fixtures", help="list bundled frameworks")
    return parser


def _guess_format(path: str, given: str | None) -> str:
    if given:
        return given
    return "apx" if path.endswith(".apx") else "tgf"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "fixtures":
        print("\n".join(fixtures.names()))
        return EXIT_OK
    if ns.command == "report":
        try:
            ids = [s.strip().upper() for s in ns.semantics.split(",") if s.strip()]
            for sid in ids:
                sem.get(sid)
            spec = principles.SampleSpec(n_max=ns.n, p_values=ns.p, samples=ns.samples,
                                         seed=ns.seed, cycle_max=ns.cycles)
            report = principles.principle_report(ids, spec)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(report.render())
        return 1 if ns.strict and report.disagreements() else EXIT_OK
    try:
        spec = TaskSpec.from_task(
            ns.task, path=ns.file, argument=ns.argument, fmt=_guess_format(ns.file, ns.format),
            output=ns.output, max_args=ns.max_args, timeout=ns.timeout,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run_task(spec)


if __name__ == "__main__":
    sys.exit(main())
