# -*- coding: utf-8 -*-
import argparse
import json
import logging
import os
import sys

from . import __version__
from .config import environ
from .correspondence import (
    PROPERTIES,
    CountermodelSearch,
    ValidityQuery,
    check_property,
    valid_on_frame,
)
from .exception import CapError, Error, InputError, ParseError
from .report import Report
from .source import configure
from .syntax import DISTRIBUTIVE_LAWS, Signature, parse_formula, parse_sequent


logger = logging.getLogger(__name__)


class ArgumentError(Error):
    """A subcommand is missing a flag it needs"""
    pass


class Command(object):
    """One subcommand run, holds the parsed flags and writes the output

    :param args: argparse.Namespace
    :param stdout: file, where results are written
    """
    def __init__(self, args, stdout=None):
        self.args = args
        self.stdout = stdout or sys.stdout

    def write(self, text=""):
        self.stdout.write(f"{text}\n")

    def write_json(self, d):
        self.write(json.dumps(d, indent=2, ensure_ascii=False, default=str))

    def load_frame(self):
        if not self.args.frame:
            raise ArgumentError("--frame is required")
        return configure(self.args.frame, "frame").frame()

    def load_valuation(self, frame):
        if not self.args.valuation:
            raise ArgumentError("--valuation is required")
        return configure(self.args.valuation, "valuation").valuation(frame.lattice)

    def write_rows(self, rows):
        self.write("point, forces, refutes")
        for row in rows:
            self.write("{}, {}, {}".format(
                row["point"],
                "-" if row["forces"] is None else str(row["forces"]).lower(),
                "-" if row["refutes"] is None else str(row["refutes"]).lower(),
            ))

    def verdict(self, ok):
        """the exit code for a computed verdict, only --assert turns a false
        verdict into a failure"""
        return 1 if self.args.assert_ and not ok else 0

    def lattice(self):
        args = self.args
        if args.context:
            polarity = configure(args.context, "context").polarity()

        else:
            polarity = self.load_frame().polarity

        lattice = polarity.lattice
        if args.dot:
            try:
                with open(args.dot, "w", encoding="utf-8") as fp:
                    fp.write(lattice.to_dot())

            except OSError as e:
                raise InputError(e) from e

        if args.json:
            self.write_json({
                "concepts": [
                    {
                        "index": i,
                        "extent": list(lattice.concept(i).extent),
                        "intent": list(lattice.concept(i).intent),
                    } for i in lattice
                ],
                "hasse": [list(e) for e in lattice.hasse_edges],
                "distributive": lattice.is_distributive(),
            })

        else:
            self.write(f"{len(lattice)} concepts")
            for i in lattice:
                self.write(f"{i}: {lattice.label(i)}")

        return 0

    def eval(self):
        args = self.args
        if not args.formula:
            raise ArgumentError("--formula is required")

        frame = self.load_frame()
        v = self.load_valuation(frame)
        phi = parse_formula(frame.signature, args.formula)
        value = frame.eval(v, phi)
        rows = point_rows(frame, v, phi)

        if args.json:
            self.write_json({
                "formula": str(phi),
                "value": frame.lattice.label(value),
                "rows": rows,
            })

        else:
            self.write(f"{phi} = {frame.lattice.label(value)}")
            self.write_rows(rows)

        return 0

    def valid(self):
        args = self.args
        if not args.sequent:
            raise ArgumentError("--sequent is required")

        frame = self.load_frame()
        sequent = parse_sequent(frame.signature, args.sequent)
        q = ValidityQuery(frame, sequent, args.vars)
        if args.valuation:
            countermodel = q.check(self.load_valuation(frame))

        else:
            countermodel = q.counterexample()
        report = Report(
            str(sequent),
            ok=countermodel is None,
            witness=countermodel.witness if countermodel else None,
        )

        if countermodel and args.out:
            configure(args.out, "out").save_valuation(countermodel.valuation)

        if args.json:
            self.write(report.to_json())

        elif countermodel:
            self.write("INVALID")
            self.write(countermodel.witness["comparison"])
            for p, label in countermodel.witness["valuation"].items():
                self.write(f"{p} = {label}")

        else:
            self.write("VALID")

        return self.verdict(report.ok)

    def check(self):
        args = self.args
        frame = self.load_frame()
        formula = parse_formula(frame.signature, args.formula) if args.formula else None
        names = [
            name.strip() for name in (args.properties or "compatibility").split(",")
            if name.strip()
        ]

        reports = [check_property(frame, name, formula) for name in names]
        if args.json:
            self.write_json([r.to_dict() for r in reports])

        else:
            for r in reports:
                self.write("{}: {}".format(r.name, str(r.ok).lower()))
                for violation in r.violations:
                    self.write(f"  {violation}")

        return self.verdict(all(reports))

    def countermodel(self):
        args = self.args
        if not args.sequent:
            raise ArgumentError("--sequent is required")

        sequent = parse_sequent(Signature.preset("DML"), args.sequent)
        search = CountermodelSearch(
            sequent,
            kind=args.kind,
            max_size=args.max_size,
            seed=args.seed,
            budget=args.budget,
            var_budget=args.vars,
            constraints=args.constraint,
        )
        countermodel = search.run()

        if countermodel and args.out:
            root, ext = os.path.splitext(args.out)
            ext = ext or ".json"
            configure(f"{root}{ext}", "out").save(countermodel.frame)
            configure(f"{root}.valuation{ext}", "out").save_valuation(
                countermodel.valuation
            )

        if args.json:
            self.write_json(countermodel.to_dict() if countermodel else None)

        elif countermodel:
            self.write(countermodel.witness["comparison"])
            for p, label in countermodel.witness["valuation"].items():
                self.write(f"{p} = {label}")
            self.write_json(countermodel.frame.to_dict())

        else:
            self.write("none within budget")

        return self.verdict(countermodel is not None)

    def examples(self):
        args = self.args
        source = configure(f"example://{args.name}", "example")
        frame = source.frame()
        v = source.valuation(frame.lattice)

        lattice = frame.lattice
        report = EXAMPLE_CHECKS[args.name](frame, v)
        if args.json:
            self.write(report.to_json())

        else:
            self.write(f"{args.name}: {len(lattice)} concepts")
            for i in lattice:
                self.write(f"{i}: {lattice.label(i)}")
            for check in report.details["checks"]:
                self.write("{} {}".format("ok" if check["ok"] else "FAILED", check["claim"]))

            for text in EXAMPLE_TABLES[args.name]:
                phi = parse_formula(frame.signature, text)
                self.write()
                self.write(f"{phi} = {lattice.label(frame.eval(v, phi))}")
                self.write_rows(point_rows(frame, v, phi))

        # the worked examples always assert
        return 0 if report.ok else 1


def point_rows(frame, v, phi):
    """one row per point: whether it forces and whether it refutes phi, None
    where a polarity point can't do one of them"""
    sat, ref = frame.point_sets(v, phi)[phi]
    rows = []
    if frame.kind == "graph":
        for i, z in enumerate(frame.nodes):
            rows.append({
                "point": z,
                "forces": bool(sat & (1 << i)),
                "refutes": bool(ref & (1 << i)),
            })

    else:
        for i, a in enumerate(frame.objects):
            rows.append({
                "point": a,
                "forces": bool(sat & (1 << i)),
                "refutes": None,
            })
        for j, x in enumerate(frame.attributes):
            rows.append({
                "point": x,
                "forces": None,
                "refutes": bool(ref & (1 << j)),
            })
    return rows


def example_report(name, claims):
    """Report over (claim, computed, expected) triples"""
    report = Report(name, checks=[])
    for claim, computed, expected in claims:
        ok = computed == expected
        report.details["checks"].append({"claim": claim, "ok": ok})
        if not ok:
            report.add(
                "worked example outcome differs",
                claim=claim,
                computed=computed,
                expected=expected,
            )
    return report


def plays_report(frame, v):
    lattice = frame.lattice
    d = v["d"]
    h = v["h"]

    def value(text):
        return frame.eval(v, parse_formula(frame.signature, text))

    def valid(text):
        return valid_on_frame(
            ValidityQuery(frame, parse_sequent(frame.signature, text))
        )

    return example_report("plays", [
        ("5 concepts", len(lattice), 5),
        ("d /\\ (h \\/ r) = d", value("d /\\ (h \\/ r)"), d),
        ("(d /\\ h) \\/ (d /\\ r) = h", value("(d /\\ h) \\/ (d /\\ r)"), h),
        ("the lattice is not distributive", lattice.is_distributive(), False),
        (
            "the first distributive law fails",
            valid(DISTRIBUTIVE_LAWS[0]),
            False,
        ),
        (
            "the second distributive law fails",
            valid(DISTRIBUTIVE_LAWS[1]),
            False,
        ),
    ])


def witnesses_report(frame, v):
    def formula(text):
        return parse_formula(frame.signature, text)

    p, q, p_or_q = formula("p"), formula("q"), formula("p \\/ q")
    return example_report("witnesses", [
        ("5 concepts", len(frame.lattice), 5),
        ("v forces p \\/ q", frame.forces(v, "v", p_or_q), True),
        ("v does not force p", frame.forces(v, "v", p), False),
        ("v does not force q", frame.forces(v, "v", q), False),
        ("v refutes p", frame.refutes(v, "v", p), True),
        ("v does not refute q", frame.refutes(v, "v", q), False),
        ("u forces q", frame.forces(v, "u", q), True),
        ("z refutes q", frame.refutes(v, "z", q), True),
        ("v is indeterminate on q", "v" in frame.indeterminate_points(v, q), True),
        ("E is antisymmetric", frame.graph.is_antisymmetric(), True),
        ("E is not transitive", frame.graph.is_transitive(), False),
    ])


EXAMPLE_CHECKS = {
    "plays": plays_report,
    "witnesses": witnesses_report,
}

EXAMPLE_TABLES = {
    "plays": (),
    "witnesses": ("p", "q", "p \\/ q"),
}


def get_parser():
    parser = argparse.ArgumentParser(
        prog="lesem",
        description="Non-distributive LE-logic semantics on polarities and graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument(
        "--assert",
        dest="assert_",
        action="store_true",
        help="exit 1 when the verdict is false",
    )
    common.add_argument("--debug", action="store_true", help="log to stderr")
    common.add_argument("--out", help="file the countermodel is written to")

    frame = argparse.ArgumentParser(add_help=False)
    frame.add_argument("--frame", help="frame JSON path or source dsn")

    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser(
        "lattice",
        parents=[common, frame],
        help="list the concepts of a context or frame",
    )
    p.add_argument("--context", help="context CSV path or source dsn")
    p.add_argument("--dot", help="write the Hasse diagram to this DOT file")

    p = subparsers.add_parser(
        "eval",
        parents=[common, frame],
        help="satisfaction and refutation of a formula at every point",
    )
    p.add_argument("--valuation", help="valuation JSON path or source dsn")
    p.add_argument("--formula")

    p = subparsers.add_parser(
        "valid",
        parents=[common, frame],
        help="check a sequent under every valuation",
    )
    p.add_argument("--sequent")
    p.add_argument("--vars", type=positive_int, default=None)
    p.add_argument(
        "--valuation",
        help="check only this valuation instead of all of them",
    )

    p = subparsers.add_parser(
        "check",
        parents=[common, frame],
        help="check frame properties",
    )
    p.add_argument(
        "--properties",
        help="comma separated, any of {}".format(",".join(PROPERTIES)),
    )
    p.add_argument("--formula", help="probe pointwise properties with this formula")

    p = subparsers.add_parser(
        "countermodel",
        parents=[common],
        help="search small frames for a countermodel to a sequent",
    )
    p.add_argument("--sequent")
    p.add_argument("--kind", choices=["polarity", "graph"], default="polarity")
    p.add_argument("--max-size", type=positive_int, default=3)
    p.add_argument("--seed", type=int, default=environ.SEED)
    p.add_argument("--budget", type=positive_int, default=environ.SEARCH_BUDGET)
    p.add_argument("--vars", type=positive_int, default=None)
    p.add_argument(
        "--constraint",
        action="append",
        choices=list(CountermodelSearch.CONSTRAINTS),
        help="only try frames meeting this condition, repeatable",
    )

    p = subparsers.add_parser(
        "examples",
        parents=[common],
        help="replay a bundled worked example",
    )
    p.add_argument("name", choices=sorted(EXAMPLE_CHECKS))

    return parser


def positive_int(v):
    ret = int(v)
    if ret < 1:
        raise argparse.ArgumentTypeError(f"{v} is not >= 1")
    return ret


def console(argv=None, stdout=None):
    """run one subcommand

    :returns: int, 0 on success, 1 for a false verdict under --assert, 2 for
        bad input, 3 when a cap is exceeded
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)

    except SystemExit as e:
        return e.code

    logging.basicConfig(
        format="[%(levelname).1s] %(name)s: %(message)s",
        level=logging.DEBUG if args.debug else logging.WARNING,
        stream=sys.stderr,
    )

    command = Command(args, stdout)
    try:
        return getattr(command, args.command)()

    except CapError as e:
        logger.error(str(e))
        return 3

    except ParseError as e:
        logger.error("{}\n{}".format(e, e.caret()))
        return 2

    except Error as e:
        logger.error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(console())
