# -*- coding: utf-8 -*-
import itertools
import logging

from datatypes import LogMixin

from .config import environ
from .exception import CapError, InputError, PreconditionError
from .frame import GraphFrame, PolarityFrame, Valuation
from .generate import Generator
from .report import Report
from .syntax import (
    DISTRIBUTIVE_LAWS,
    Signature,
    axioms_of_base_logic,
    parse_formula,
    parse_sequent,
)


logger = logging.getLogger(__name__)


def iter_valuations(lattice, letters):
    """Yields every valuation of letters, in lexicographic concept order

    :raises: CapError when |lattice|^k is over SEARCH_CAP
    """
    letters = list(letters)
    required = len(lattice) ** len(letters)
    if required > environ.SEARCH_CAP:
        raise CapError("SEARCH_CAP", environ.SEARCH_CAP, required)

    for indexes in itertools.product(range(len(lattice)), repeat=len(letters)):
        yield Valuation(lattice, dict(zip(letters, indexes)))


def default_var_budget(letters):
    return max(environ.VAR_BUDGET, len(letters))


class ValidityQuery(object):
    """Is a sequent valid on a frame, ie is v̄(lhs) ≤ v̄(rhs) for every
    valuation of its letters into the complex algebra

    :param frame: PolarityFrame or GraphFrame
    :param sequent: Sequent
    :param var_budget: int, the most letters the sequent may use, None means
        VAR_BUDGET or as many as it uses when that is more
    """
    def __init__(self, frame, sequent, var_budget=None):
        self.frame = frame
        self.sequent = sequent
        self.letters = sequent.letters()
        if var_budget is None:
            var_budget = default_var_budget(self.letters)
        self.var_budget = var_budget
        if len(self.letters) > self.var_budget:
            raise InputError(
                "{} uses {} letters, the budget is {}".format(
                    sequent,
                    len(self.letters),
                    self.var_budget,
                )
            )

    def valuations(self):
        return iter_valuations(self.frame.lattice, self.letters)

    def check(self, v):
        """the countermodel v yields, or None when v̄(lhs) ≤ v̄(rhs)"""
        frame = self.frame
        lhs = frame.eval(v, self.sequent.lhs)
        rhs = frame.eval(v, self.sequent.rhs)
        if frame.lattice.leq(lhs, rhs):
            return None
        return Countermodel(frame, v, self.sequent, lhs, rhs)

    def counterexample(self):
        """the first falsifying valuation in enumeration order, or None"""
        for v in self.valuations():
            ret = self.check(v)
            if ret:
                return ret
        return None


class Countermodel(object):
    """A frame and valuation on which a sequent fails

    :param lhs: int, concept index of v̄(lhs)
    :param rhs: int, concept index of v̄(rhs), lhs ≰ rhs
    """
    def __init__(self, frame, valuation, sequent, lhs, rhs):
        self.frame = frame
        self.valuation = valuation
        self.sequent = sequent
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return "{}({}, {})".format(
            type(self).__name__,
            self.sequent,
            self.valuation,
        )

    def verify(self):
        """true iff the sequent really fails here"""
        return ValidityQuery(self.frame, self.sequent).check(self.valuation) is not None

    @property
    def witness(self):
        lattice = self.frame.lattice
        return {
            "sequent": str(self.sequent),
            "valuation": {
                p: lattice.label(c) for p, c in self.valuation.items()
            },
            "lhs": lattice.label(self.lhs),
            "rhs": lattice.label(self.rhs),
            "comparison": "{} ≰ {}".format(
                lattice.label(self.lhs),
                lattice.label(self.rhs),
            ),
        }

    def to_dict(self):
        return {
            "frame": self.frame.to_dict(),
            "valuation": self.valuation.to_dict(),
            "witness": self.witness,
        }


def valid_on_frame(q):
    """true iff q.sequent holds under every valuation

    :param q: ValidityQuery
    :raises: CapError when |lattice|^k is over SEARCH_CAP
    """
    return q.counterexample() is None


def validity_report(frame, sequent, var_budget=None, name=None):
    q = ValidityQuery(frame, sequent, var_budget)
    countermodel = q.counterexample()
    return Report(
        name or str(sequent),
        ok=countermodel is None,
        witness=countermodel.witness if countermodel else None,
        sequent=str(sequent),
    )


class CountermodelSearch(LogMixin):
    """Walks a deterministic stream of compatible candidate frames looking
    for one that falsifies a sequent

    :param sequent: Sequent
    :param kind: str, "polarity" or "graph"
    :param max_size: int, the largest carrier (or node count) tried
    :param signature: Signature, defaults to the built-ins the sequent uses
    :param seed: int, seeds the random relation candidates
    :param budget: int, the most candidate frames tried
    :param var_budget: int, defaults to VAR_BUDGET raised to the letter count
        of the sequent
    :param constraints: iterable of "factive"/"omniscient", candidate frames
        failing a constraint are skipped
    """
    CONSTRAINTS = ("factive", "omniscient")

    def __init__(
        self,
        sequent,
        kind="polarity",
        max_size=3,
        signature=None,
        seed=None,
        budget=None,
        var_budget=None,
        constraints=None,
    ):
        if kind not in ("polarity", "graph"):
            raise InputError(f"Unknown frame kind {kind!r}")

        self.sequent = sequent
        self.kind = kind
        self.max_size = max_size
        self.seed = environ.SEED if seed is None else seed
        self.budget = environ.SEARCH_BUDGET if budget is None else budget
        if var_budget is None:
            var_budget = default_var_budget(sequent.letters())
        self.var_budget = var_budget
        self.constraints = list(constraints or [])

        for constraint in self.constraints:
            if constraint not in self.CONSTRAINTS:
                raise InputError(f"Unknown search constraint {constraint!r}")

        if signature is None:
            signature = Signature.builtins(*sorted(
                name for name in sequent.connectives()
                if name in Signature.BUILTINS
            ))
            if self.constraints and "box" not in signature:
                signature.add(Signature.builtins("box").get("box"))

        signature.require(*sequent.connectives())
        if self.constraints:
            signature.require("box")
        self.signature = signature

    def admissible(self, frame):
        for constraint in self.constraints:
            if self.kind == "graph":
                which = {"factive": "e-reflexivity", "omniscient": "e-omniscience"}
                if not graph_condition(frame, which[constraint]):
                    return False

            else:
                which = {"factive": "factivity", "omniscient": "omniscience"}
                if not polarity_condition(frame, which[constraint]):
                    return False
        return True

    def run(self):
        """the first countermodel in candidate order, or None once the
        candidates or the budget run out"""
        generator = Generator(self.seed)
        tried = 0
        candidates = generator.candidate_frames(
            self.kind,
            self.signature,
            self.max_size,
        )
        for frame in candidates:
            if tried >= self.budget:
                break

            tried += 1
            if not self.admissible(frame):
                continue

            q = ValidityQuery(frame, self.sequent, self.var_budget)
            countermodel = q.counterexample()
            if countermodel:
                self.log_for(
                    debug=([
                        "Countermodel for {} after {} frames: {}",
                        self.sequent,
                        tried,
                        countermodel.witness,
                    ],),
                    info=([
                        "Countermodel for {} after {} frames",
                        self.sequent,
                        tried,
                    ],),
                )
                return countermodel

        self.log("No countermodel for {} in {} frames", self.sequent, tried)
        return None


def countermodel_search(sequent, **params):
    """
    :param sequent: Sequent
    :param **params: see CountermodelSearch
    :returns: Countermodel or None
    """
    return CountermodelSearch(sequent, **params).run()


def missing_pairs(r, s):
    """the pairs of r that aren't in s"""
    return sorted(set(r) - set(s))


def box_pairs(frame):
    if "box" not in frame.signature:
        raise PreconditionError(f"{frame} doesn't declare box")
    return frame.relations["box"].tuples


def polarity_condition(fr, which):
    """factivity is R_box ⊆ I and omniscience is I ⊆ R_box

    :param fr: PolarityFrame
    :param which: str, "factivity" or "omniscience"
    """
    return not polarity_condition_violations(fr, which)


def polarity_condition_violations(fr, which):
    r = box_pairs(fr)
    incidence = set(
        (a, x)
        for a, row in enumerate(fr.polarity.rows)
        for x in range(len(fr.attributes))
        if row & (1 << x)
    )
    if which == "factivity":
        missing = missing_pairs(r, incidence)

    elif which == "omniscience":
        missing = missing_pairs(incidence, r)

    else:
        raise InputError(f"Unknown polarity condition {which!r}")

    return [(fr.objects[a], fr.attributes[x]) for a, x in missing]


def bullet_E(r, s, g):
    """a(R •_E S)x iff ∃y(aRy and ∀b(bEy ⇒ bSx))

    :param r: iterable of (node, node) pairs
    :param s: iterable of (node, node) pairs
    :param g: ReflexiveGraph
    :returns: frozenset of (node, node) pairs
    """
    nodes = g.nodes
    n = len(nodes)
    rr = [0] * n
    ss = [0] * n
    for a, y in r:
        rr[nodes.index(a)] |= nodes.bit(y)
    for b, x in s:
        ss[nodes.index(b)] |= nodes.bit(x)

    # common[y] holds the x with bSx for every E-predecessor b of y
    common = []
    for y in range(n):
        mask = nodes.full
        for b in range(n):
            if g.predecessors[y] & (1 << b):
                mask &= ss[b]
        common.append(mask)

    ret = set()
    for a in range(n):
        mask = 0
        for y in range(n):
            if rr[a] & (1 << y):
                mask |= common[y]
        ret.update((nodes[a], x) for x in nodes.members(mask))
    return frozenset(ret)


def graph_condition(gf, which):
    """e-reflexivity is E ⊆ R_box, e-omniscience is R_box ⊆ E and
    e-transitivity is R_box •_E R_box ⊆ R_box

    :param gf: GraphFrame
    :param which: str
    """
    return not graph_condition_violations(gf, which)


def graph_condition_violations(gf, which):
    if "box" not in gf.signature:
        raise PreconditionError(f"{gf} doesn't declare box")

    r = gf.graph_relation("box").identifiers()
    edges = gf.graph.edges
    if which == "e-reflexivity":
        return missing_pairs(edges, r)

    elif which == "e-omniscience":
        return missing_pairs(r, edges)

    elif which == "e-transitivity":
        return missing_pairs(bullet_E(r, r, gf.graph), r)

    raise InputError(f"Unknown graph condition {which!r}")


APPROXIMATION_AXIOMS = (
    ("seriality", "box p |- dia p"),
    ("reflexivity", "box p |- p"),
    ("reflexivity", "p |- dia p"),
    ("transitivity", "box p |- box box p"),
    ("transitivity", "dia dia p |- dia p"),
    ("symmetry", "p |- box dia p"),
    ("symmetry", "dia box p |- p"),
)


def operator_report(name, alg, op, inflationary):
    """is op an interior (deflationary) or closure (inflationary) operator:
    monotone, idempotent and below (or above) the identity"""
    lattice = alg.lattice
    report = Report(name)
    for c in lattice:
        value = alg.apply(op, [c])
        if inflationary and not lattice.leq(c, value):
            report.add("not inflationary", concept=lattice.label(c))

        if not inflationary and not lattice.leq(value, c):
            report.add("not deflationary", concept=lattice.label(c))

        if alg.apply(op, [value]) != value:
            report.add("not idempotent", concept=lattice.label(c))

        for d in lattice:
            if lattice.leq(c, d) and not lattice.leq(value, alg.apply(op, [d])):
                report.add(
                    "not monotone",
                    concepts=[lattice.label(c), lattice.label(d)],
                )
    return report


def approximation_space_check(fr):
    """Rough-concept diagnostics for a polarity frame with box and dia

    the verdict of every approximation axiom, whether [R_box] is an interior
    and ⟨R_dia⟩ a closure operator, and whether aR_box x iff xR_dia a

    :param fr: PolarityFrame
    :returns: Report, ok iff every check passes
    """
    if "box" not in fr.signature or "dia" not in fr.signature:
        raise PreconditionError("Approximation spaces need box and dia")

    checks = []
    for name, text in APPROXIMATION_AXIOMS:
        checks.append(validity_report(
            fr,
            parse_sequent(fr.signature, text),
            name=f"{name}: {text}",
        ))

    alg = fr.complex_algebra()
    checks.append(operator_report("interior", alg, "box", False))
    checks.append(operator_report("closure", alg, "dia", True))

    adjunction = Report("adjunction")
    box = fr.relations["box"]
    dia = fr.relations["dia"]
    for a in range(len(fr.objects)):
        for x in range(len(fr.attributes)):
            if ((a, x) in box) != ((x, a) in dia):
                adjunction.add(
                    "R_box and R_dia disagree",
                    object=fr.objects[a],
                    attribute=fr.attributes[x],
                )
    checks.append(adjunction)

    return Report("approximation-space", checks=checks).merge(*checks)


def introspection(fr):
    """semantic verdicts of positive introspection and its converse, no
    first-order condition is attached on polarity frames"""
    checks = [
        validity_report(fr, parse_sequent(fr.signature, text))
        for text in ("box p |- box box p", "box box p |- box p")
    ]
    return Report("introspection", checks=checks).merge(*checks)


def soundness_report(frame):
    """every base logic axiom the signature supports, checked for validity"""
    checks = [
        validity_report(frame, sequent)
        for sequent in axioms_of_base_logic(frame.signature)
    ]
    return Report("soundness", checks=checks).merge(*checks)


def distributivity_report(frame):
    report = Report("distributivity", ok=frame.lattice.is_distributive())
    if not report:
        signature = frame.signature
        for text in DISTRIBUTIVE_LAWS:
            law = validity_report(frame, parse_sequent(signature, text))
            if law.witness:
                report.witness = law.witness
                break
    return report


def probe_formulas(frame, formula=None):
    """the formulas pointwise frame properties are probed with"""
    if formula is not None:
        return [formula]

    texts = ["p", "p \\/ q", "p /\\ q"]
    for c in frame.signature:
        if c.arity == 1:
            texts.append(f"{c.name}(p)" if not c.is_builtin else f"{c.name} p")
    return [parse_formula(frame.signature, text) for text in texts]


def pointwise_report(name, frame, check, formula=None):
    """run check(v, phi) under every valuation of every probe formula"""
    report = Report(name)
    for phi in probe_formulas(frame, formula):
        for v in iter_valuations(frame.lattice, phi.letters()):
            result = check(v, phi)
            if isinstance(result, Report):
                if not result:
                    report.add(
                        f"{result.name} fails",
                        formula=str(phi),
                        valuation=repr(v),
                        violations=result.violations,
                    )

            elif not result:
                report.add(
                    f"{name} fails",
                    formula=str(phi),
                    valuation=repr(v),
                )
    return report


def require_kind(frame, cls, name):
    if not isinstance(frame, cls):
        raise InputError(f"{name} applies to {cls.kind} frames only")


PROPERTIES = (
    "compatibility",
    "distributivity",
    "soundness",
    "factivity",
    "omniscience",
    "introspection",
    "approximation-space",
    "e-reflexivity",
    "e-omniscience",
    "e-transitivity",
    "weak-persistence",
    "persistence",
    "classical",
    "preorder-projection",
    "transitive",
    "antisymmetric",
)


def check_property(frame, name, formula=None):
    """Evaluate one named frame property

    :param frame: PolarityFrame or GraphFrame
    :param name: str, one of PROPERTIES
    :param formula: Formula, probes pointwise properties instead of the
        default probe formulas
    :returns: Report
    """
    if name == "compatibility":
        return frame.compatibility_check()

    elif name == "distributivity":
        return distributivity_report(frame)

    elif name == "soundness":
        return soundness_report(frame)

    elif name in ("factivity", "omniscience"):
        require_kind(frame, PolarityFrame, name)
        missing = polarity_condition_violations(frame, name)
        return Report(name, violations=[
            {"reason": "pair missing from the containment", "pair": list(p)}
            for p in missing
        ])

    elif name == "introspection":
        require_kind(frame, PolarityFrame, name)
        return introspection(frame)

    elif name == "approximation-space":
        require_kind(frame, PolarityFrame, name)
        return approximation_space_check(frame)

    elif name in ("e-reflexivity", "e-omniscience", "e-transitivity"):
        require_kind(frame, GraphFrame, name)
        missing = graph_condition_violations(frame, name)
        return Report(name, violations=[
            {"reason": "pair missing from the containment", "pair": list(p)}
            for p in missing
        ])

    elif name == "weak-persistence":
        require_kind(frame, GraphFrame, name)
        return pointwise_report(name, frame, frame.weak_persistence_check, formula)

    elif name == "persistence":
        require_kind(frame, GraphFrame, name)
        return pointwise_report(name, frame, frame.persistence_check, formula)

    elif name == "classical":
        require_kind(frame, GraphFrame, name)
        return pointwise_report(name, frame, frame.classical_audit, formula)

    elif name == "preorder-projection":
        require_kind(frame, GraphFrame, name)
        return Report(name, ok=frame.preorder_projection_check())

    elif name == "transitive":
        require_kind(frame, GraphFrame, name)
        return Report(name, ok=frame.graph.is_transitive())

    elif name == "antisymmetric":
        require_kind(frame, GraphFrame, name)
        return Report(name, ok=frame.graph.is_antisymmetric())

    raise InputError(f"Unknown property {name!r}")
