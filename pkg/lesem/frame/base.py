# -*- coding: utf-8 -*-
import itertools
import logging

from datatypes import LogMixin

from ..carrier import iter_bits
from ..config import environ
from ..exception import (
    CapError,
    CompatibilityError,
    InputError,
    SignatureError,
)
from ..report import Report
from ..syntax import (
    Application,
    Bottom,
    Conjunction,
    Disjunction,
    Letter,
    Signature,
    Top,
)


logger = logging.getLogger(__name__)


OBJECTS = "A"
ATTRIBUTES = "X"


def relation_kinds(connective):
    """The carrier of every coordinate of the relation interpreting connective,
    output coordinate first

    R_f ⊆ X × Ā where Ā has A at monotone and X at antitone coordinates, and
    R_g ⊆ A × X̄ dually
    """
    if connective.kind == "f":
        out, same, flipped = ATTRIBUTES, OBJECTS, ATTRIBUTES
    else:
        out, same, flipped = OBJECTS, ATTRIBUTES, OBJECTS

    return (out,) + tuple(
        same if connective.is_monotone(i) else flipped
        for i in range(connective.arity)
    )


class Relation(object):
    """An (n+1)-ary relation over the carriers of a polarity

    tuples hold carrier indexes, coordinate 0 is the output point and the rest
    are the argument points

    :param polarity: Polarity
    :param kinds: tuple of OBJECTS/ATTRIBUTES, one per coordinate
    :param tuples: iterable of index tuples
    """
    def __init__(self, polarity, kinds, tuples=()):
        self.polarity = polarity
        self.kinds = tuple(kinds)

        sizes = [len(self.carrier(i)) for i in range(len(self.kinds))]
        ts = set()
        for t in tuples:
            t = tuple(t)
            if len(t) != len(self.kinds):
                raise InputError(
                    f"Relation tuple {t} should have {len(self.kinds)} points"
                )

            for i, p in enumerate(t):
                if not 0 <= p < sizes[i]:
                    raise InputError(f"Point index {p} is out of range")
            ts.add(t)

        self.tuples = frozenset(ts)

        self._by_output = {}
        for t in self.tuples:
            self._by_output.setdefault(t[0], set()).add(t[1:])

    @classmethod
    def from_identifiers(cls, polarity, kinds, tuples=()):
        """build a relation from tuples of carrier identifiers"""
        instance = cls(polarity, kinds)
        indexes = []
        for t in tuples:
            t = tuple(t)
            if len(t) != len(instance.kinds):
                raise InputError(
                    f"Relation tuple {t} should have {len(instance.kinds)} points"
                )
            indexes.append(
                tuple(instance.carrier(i).index(p) for i, p in enumerate(t))
            )
        return cls(polarity, kinds, indexes)

    @property
    def arity(self):
        return len(self.kinds) - 1

    def carrier(self, i):
        if self.kinds[i] == OBJECTS:
            return self.polarity.objects
        return self.polarity.attributes

    def closure(self, i, mask):
        """the Galois closure of a subset of coordinate i's carrier"""
        if self.kinds[i] == OBJECTS:
            return self.polarity.extent_closure(mask)
        return self.polarity.intent_closure(mask)

    def __contains__(self, t):
        return tuple(t) in self.tuples

    def __iter__(self):
        return iter(sorted(self.tuples))

    def __len__(self):
        return len(self.tuples)

    def __eq__(self, other):
        return (
            isinstance(other, Relation)
            and self.kinds == other.kinds
            and self.tuples == other.tuples
            and self.polarity == other.polarity
        )

    def __hash__(self):
        return hash((self.kinds, self.tuples))

    def __repr__(self):
        return "{}({}, {} tuples)".format(
            type(self).__name__,
            "".join(self.kinds),
            len(self.tuples),
        )

    def issubset(self, other):
        return self.tuples <= other.tuples

    def identifiers(self):
        """every tuple as carrier identifiers, in index order"""
        return [
            tuple(self.carrier(i)[p] for i, p in enumerate(t))
            for t in self
        ]

    def complement(self):
        ranges = [range(len(self.carrier(i))) for i in range(len(self.kinds))]
        return type(self)(
            self.polarity,
            self.kinds,
            (t for t in itertools.product(*ranges) if t not in self.tuples)
        )

    def check_arity(self, count, expected):
        if count != expected:
            raise InputError(f"Expected {expected} sets, got {count}")

    def section_mask(self, masks):
        """S⁽⁰⁾[C̄], the output points related to every tuple of C̄

        :param masks: one mask per argument coordinate
        :returns: int, mask over the output carrier
        """
        masks = tuple(masks)
        self.check_arity(len(masks), self.arity)

        args = list(itertools.product(*(list(iter_bits(m)) for m in masks)))
        ret = 0
        for u in range(len(self.carrier(0))):
            related = self._by_output.get(u, ())
            if all(a in related for a in args):
                ret |= 1 << u
        return ret

    def coordinate_section_mask(self, i, output, masks):
        """S⁽ⁱ⁾[U, C̄ⁱ], the points of coordinate i related to every output in
        U together with every tuple of the other coordinates

        :param i: int, 1 <= i <= arity
        :param output: int, mask over the output carrier (a single bit for
            point sections)
        :param masks: one mask per argument coordinate except i
        :returns: int, mask over coordinate i's carrier
        """
        masks = tuple(masks)
        if not 1 <= i <= self.arity:
            raise InputError(f"Coordinate {i} is out of range")
        self.check_arity(len(masks), self.arity - 1)

        outputs = list(iter_bits(output))
        others = list(itertools.product(*(list(iter_bits(m)) for m in masks)))
        ret = 0
        for v in range(len(self.carrier(i))):
            if all(
                rest[:i - 1] + (v,) + rest[i - 1:] in self._by_output.get(u, ())
                for u in outputs
                for rest in others
            ):
                ret |= 1 << v
        return ret

    def section(self, sets):
        """identifier version of .section_mask()"""
        sets = tuple(sets)
        self.check_arity(len(sets), self.arity)
        mask = self.section_mask(
            self.carrier(j + 1).mask(s) for j, s in enumerate(sets)
        )
        return frozenset(self.carrier(0).members(mask))

    def coordinate_section(self, i, outputs, sets):
        """identifier version of .coordinate_section_mask()"""
        sets = tuple(sets)
        self.check_arity(len(sets), self.arity - 1)
        coordinates = [j for j in range(1, self.arity + 1) if j != i]
        mask = self.coordinate_section_mask(
            i,
            self.carrier(0).mask(outputs),
            (self.carrier(j).mask(s) for j, s in zip(coordinates, sets)),
        )
        return frozenset(self.carrier(i).members(mask))

    def iter_point_sections(self):
        """Yields (i, points, mask) for every point section: S⁽⁰⁾[ā] with
        points=ā, then S⁽ⁱ⁾[u, āⁱ] with points=(u,)+āⁱ"""
        ranges = [range(len(self.carrier(i))) for i in range(len(self.kinds))]
        for args in itertools.product(*ranges[1:]):
            yield 0, args, self.section_mask(1 << a for a in args)

        for i in range(1, self.arity + 1):
            others = [ranges[j] for j in range(1, self.arity + 1) if j != i]
            for u in ranges[0]:
                for rest in itertools.product(*others):
                    yield i, (u,) + rest, self.coordinate_section_mask(
                        i,
                        1 << u,
                        (1 << p for p in rest)
                    )

    def section_tuple(self, i, points, v):
        """the relation tuple that puts point v into section (i, points)"""
        if i == 0:
            return (v,) + tuple(points)
        u, rest = points[0], tuple(points[1:])
        return (u,) + rest[:i - 1] + (v,) + rest[i - 1:]

    def count_point_sections(self):
        sizes = [len(self.carrier(i)) for i in range(len(self.kinds))]
        total = 1
        for s in sizes[1:]:
            total *= s
        for i in range(1, self.arity + 1):
            n = sizes[0]
            for j in range(1, self.arity + 1):
                if j != i:
                    n *= sizes[j]
            total += n
        return total


def section_0(r, sets):
    """S⁽⁰⁾[C̄] := {a | ∀b̄(b̄ ∈ C̄ ⇒ aSb̄)}"""
    return r.section(sets)


def section_i(r, i, point, sets):
    """S⁽ⁱ⁾[u, C̄ⁱ], the coordinate i section at output point u"""
    return r.coordinate_section(i, [point], sets)


class Valuation(object):
    """An assignment of proposition letters to concepts

    :param lattice: ConceptLattice
    :param assignment: dict, letter -> concept index
    """
    def __init__(self, lattice, assignment=None):
        self.lattice = lattice
        self.assignment = {}
        for p, c in (assignment or {}).items():
            self.assignment[p] = lattice.check_index(c)

    @classmethod
    def from_dict(cls, lattice, d):
        """read {"p": {"extent": [...]}} or {"p": {"intent": [...]}}, a bare
        int is taken as a concept index

        :raises: InputError when a set isn't Galois-stable
        """
        assignment = {}
        for p, spec in d.items():
            if isinstance(spec, int):
                assignment[p] = spec

            elif "extent" in spec:
                assignment[p] = lattice.find(extent=spec["extent"])

            elif "intent" in spec:
                assignment[p] = lattice.find(intent=spec["intent"])

            else:
                raise InputError(f"Letter {p} needs an extent or an intent")

        return cls(lattice, assignment)

    def to_dict(self):
        return {
            p: {"extent": list(self.lattice.concept(c).extent)}
            for p, c in self.assignment.items()
        }

    def __getitem__(self, p):
        try:
            return self.assignment[p]

        except KeyError as e:
            raise InputError(f"Letter {p} is not assigned") from e

    def __contains__(self, p):
        return p in self.assignment

    def __iter__(self):
        return iter(self.assignment)

    def __len__(self):
        return len(self.assignment)

    def __eq__(self, other):
        return (
            isinstance(other, Valuation)
            and self.assignment == other.assignment
        )

    def __repr__(self):
        return "{}({})".format(
            type(self).__name__,
            ", ".join(
                f"{p}={self.lattice.label(c)}"
                for p, c in self.assignment.items()
            )
        )

    def items(self):
        return self.assignment.items()

    def rename(self, mapping):
        return type(self)(
            self.lattice,
            {mapping.get(p, p): c for p, c in self.assignment.items()}
        )


class ConceptAlgebra(object):
    """The complex algebra of a frame: its concept lattice plus one normal
    operation per connective

    operation values are computed on demand and memoized, .table() fills the
    whole table

    :param frame: Frame
    """
    def __init__(self, frame):
        self.frame = frame
        self.lattice = frame.lattice
        self.signature = frame.signature
        self._tables = {c.name: {} for c in self.signature}

    def __len__(self):
        return len(self.lattice)

    def apply(self, name, args):
        """the value of connective name at a tuple of concept indexes

        arguments pass their extents at coordinates over A and their intents
        at coordinates over X, f_R(c̄) is then read off its intent and g_R(c̄)
        off its extent

        :raises: CompatibilityError when the section isn't Galois-stable
        """
        args = tuple(args)
        self.signature.get(name)
        table = self._tables[name]
        if args in table:
            return table[args]

        lattice = self.lattice
        r = self.frame.relations[name]
        r.check_arity(len(args), r.arity)
        masks = [
            lattice.extents[lattice.check_index(c)]
            if r.kinds[j + 1] == OBJECTS
            else lattice.intents[lattice.check_index(c)]
            for j, c in enumerate(args)
        ]
        out = r.section_mask(masks)
        try:
            if r.kinds[0] == OBJECTS:
                ret = lattice.index_of_extent(out)
            else:
                ret = lattice.index_of_intent(out)

        except InputError as e:
            raise CompatibilityError(
                f"{name} has a section that isn't Galois-stable at {args}"
            ) from e

        table[args] = ret
        return ret

    def table(self, name):
        """the full operation table, argument tuple -> concept index"""
        c = self.signature.get(name)
        n = len(self.lattice)
        if n ** c.arity > environ.SEARCH_CAP:
            raise CapError("SEARCH_CAP", environ.SEARCH_CAP, n ** c.arity)

        for args in itertools.product(range(n), repeat=c.arity):
            self.apply(name, args)
        return dict(self._tables[name])

    def check_normality(self):
        """Exhaustively check that every operation is normal

        :returns: Report
        """
        lattice = self.lattice
        return normality_report(
            self.signature,
            list(lattice),
            self.apply,
            lambda x, y: lattice.meet([x, y]),
            lambda x, y: lattice.join([x, y]),
            lattice.bottom,
            lattice.top,
        )


def normality_report(signature, elements, apply, meet, join, bottom, top):
    """Check every operation of a finite algebra for normality

    f preserves finite joins at monotone coordinates and sends finite meets to
    joins at antitone ones, g preserves finite meets at monotone coordinates
    and sends finite joins to meets at antitone ones, the empty join and meet
    included

    :param apply: callable, (name, args) -> element
    :param meet: callable, binary meet
    :param join: callable, binary join
    :returns: Report
    """
    report = Report("normality")
    n = len(elements)
    for c in signature:
        if n ** (c.arity + 1) > environ.SEARCH_CAP:
            raise CapError("SEARCH_CAP", environ.SEARCH_CAP, n ** (c.arity + 1))

        target = join if c.kind == "f" else meet
        unit = bottom if c.kind == "f" else top
        for i in range(c.arity):
            joins = (c.kind == "f") == c.is_monotone(i)
            source = join if joins else meet
            source_unit = bottom if joins else top

            for rest in itertools.product(elements, repeat=c.arity - 1):
                def at(x):
                    return rest[:i] + (x,) + rest[i:]

                if apply(c.name, at(source_unit)) != unit:
                    report.add(
                        "empty bound not preserved",
                        connective=c.name,
                        coordinate=i,
                        args=list(at(source_unit)),
                    )

                for j, x in enumerate(elements):
                    for y in elements[j + 1:]:
                        lhs = apply(c.name, at(source(x, y)))
                        rhs = target(apply(c.name, at(x)), apply(c.name, at(y)))
                        if lhs != rhs:
                            report.add(
                                "binary bound not preserved",
                                connective=c.name,
                                coordinate=i,
                                args=[list(at(x)), list(at(y))],
                            )
    return report


class FrameABC(LogMixin):
    """The hooks a frame class has to implement

    Child classes should extend Frame, which holds the public API, these are
    broken out to show what differs between the polarity and the graph
    semantics
    """
    kind = ""
    """str, the "kind" value of the frame's JSON form"""

    def _forces_clause(self, v, phi, sets):
        """re-derive the points satisfying phi from the relational clause of
        its main connective

        :param sets: dict, subformula -> (satisfaction mask, refutation mask)
            for every subformula of phi
        :returns: int, mask over the satisfaction carrier
        """
        raise NotImplementedError()

    def _refutes_clause(self, v, phi, sets):
        """dual of _forces_clause, returns a mask over the refutation carrier"""
        raise NotImplementedError()

    def _section_label(self, name, i, points):
        """str, how a failing section is named in compatibility reports"""
        raise NotImplementedError()

    def replace(self, relations, unchecked=False):
        """a frame of the same class and carrier with the given polarity-style
        relations"""
        raise NotImplementedError()

    def to_dict(self):
        raise NotImplementedError()


class Frame(FrameABC):
    """Base class of LE-frames

    everything algebraic runs on a polarity and polarity-style relations
    (R_f ⊆ X × Ā, R_g ⊆ A × X̄), a graph frame hands its induced polarity and
    complemented relations up here

    :param polarity: Polarity
    :param signature: Signature
    :param relations: dict, connective name -> Relation or iterable of
        identifier tuples
    :param unchecked: bool, skip the compatibility check, for experiments
        that generate then filter
    """
    def __init__(self, polarity, signature=None, relations=None, unchecked=False):
        self.polarity = polarity
        self.signature = signature if signature is not None else Signature()
        self.unchecked = unchecked
        self._complex_algebra = None

        relations = dict(relations or {})
        for name in relations:
            if name not in self.signature:
                raise SignatureError(
                    f"Relation {name} has no connective in the signature"
                )

        self.relations = {}
        for c in self.signature:
            kinds = relation_kinds(c)
            r = relations.get(c.name, ())
            if isinstance(r, Relation):
                if r.kinds != kinds:
                    raise InputError(
                        f"Relation {c.name} doesn't match the order type of"
                        f" {c.name}"
                    )
                self.relations[c.name] = r

            else:
                self.relations[c.name] = Relation.from_identifiers(
                    polarity,
                    kinds,
                    r
                )

        if not unchecked:
            report = self.compatibility_check()
            if not report:
                raise CompatibilityError(
                    "{} is not compatible, {} sections aren't Galois-stable".format(
                        type(self).__name__,
                        len(report.violations),
                    ),
                    report=report,
                )

    @property
    def objects(self):
        return self.polarity.objects

    @property
    def attributes(self):
        return self.polarity.attributes

    @property
    def lattice(self):
        return self.polarity.lattice

    def relation(self, name):
        self.signature.get(name)
        return self.relations[name]

    def check_audit_cap(self):
        size = max(len(self.objects), len(self.attributes))
        if size > environ.MAX_AUDIT:
            raise CapError("MAX_AUDIT", environ.MAX_AUDIT, size)

    def compatibility_check(self, names=None):
        """Check that every point section of every relation is Galois-stable

        :param names: iterable of connective names, defaults to all of them
        :returns: Report, one violation per failing section
        """
        report = Report("compatibility")
        for name in (self.relations if names is None else names):
            r = self.relation(name)
            count = r.count_point_sections()
            if count > environ.SEARCH_CAP:
                raise CapError("SEARCH_CAP", environ.SEARCH_CAP, count)

            for i, points, mask in r.iter_point_sections():
                closed = r.closure(i, mask)
                if closed != mask:
                    carrier = r.carrier(i)
                    report.add(
                        "section is not Galois-stable",
                        relation=name,
                        section=self._section_label(name, i, points),
                        set=list(carrier.members(mask)),
                        closure=list(carrier.members(closed)),
                    )

        self.log_for(
            debug=([
                "Compatibility check of {} found {} violations: {}",
                self,
                len(report.violations),
                report.violations,
            ],),
            info=([
                "Compatibility check of {} found {} violations",
                self,
                len(report.violations),
            ],),
        )
        return report

    def compatible_closure(self):
        """The least compatible frame whose relations contain this frame's
        (polarity-style) relations

        every point section is replaced by its Galois closure until nothing
        changes, sections only grow and the full relation is compatible so
        this always stops
        """
        relations = dict(self.relations)
        rounds = 0
        while True:
            rounds += 1
            changed = False
            for name, r in list(relations.items()):
                added = set()
                for i, points, mask in r.iter_point_sections():
                    closed = r.closure(i, mask)
                    for v in iter_bits(closed & ~mask):
                        added.add(r.section_tuple(i, points, v))

                if added:
                    changed = True
                    relations[name] = Relation(
                        r.polarity,
                        r.kinds,
                        r.tuples | added
                    )

            if not changed:
                break

        self.log("Compatible closure of {} took {} rounds", self, rounds)
        return self.replace(relations)

    def complex_algebra(self):
        """F⁺, the concept lattice with one operation per connective

        :raises: CompatibilityError for incompatible frames
        """
        if self._complex_algebra is None:
            if self.unchecked:
                report = self.compatibility_check()
                if not report:
                    raise CompatibilityError(
                        f"{self} is not compatible",
                        report=report,
                    )
            self._complex_algebra = ConceptAlgebra(self)
        return self._complex_algebra

    def valuation(self, assignment=None):
        return Valuation(self.lattice, assignment)

    def _evaluate(self, v, phi, values):
        """v̄(phi) from the values of phi's immediate subformulas"""
        lattice = self.lattice
        if isinstance(phi, Letter):
            return lattice.check_index(v[phi.name])

        elif isinstance(phi, Top):
            return lattice.top

        elif isinstance(phi, Bottom):
            return lattice.bottom

        elif isinstance(phi, Conjunction):
            return lattice.meet([values[phi.left], values[phi.right]])

        elif isinstance(phi, Disjunction):
            return lattice.join([values[phi.left], values[phi.right]])

        elif isinstance(phi, Application):
            return self.complex_algebra().apply(
                phi.connective,
                [values[arg] for arg in phi.args]
            )

        raise InputError(f"Unknown formula {phi!r}")

    def evaluate(self, v, phi):
        """the homomorphic extension of v on every subformula of phi

        :returns: dict, subformula -> concept index, in post-order
        """
        values = {}
        for psi in phi.subformulas():
            values[psi] = self._evaluate(v, psi, values)
        return values

    def eval(self, v, phi):
        """v̄(phi) as a concept index"""
        return self.evaluate(v, phi)[phi]

    def point_sets(self, v, phi):
        """every subformula's satisfaction and refutation sets

        :returns: dict, subformula -> (mask of points forcing it, mask of
            points refuting it)
        """
        lattice = self.lattice
        return {
            psi: (lattice.extents[c], lattice.intents[c])
            for psi, c in self.evaluate(v, phi).items()
        }

    def forces(self, v, a, phi):
        """a ⊩ phi iff a is in the extent of v̄(phi)"""
        bit = self.objects.bit(a)
        return bool(self.point_sets(v, phi)[phi][0] & bit)

    def refutes(self, v, x, phi):
        """x ≻ phi iff x is in the intent of v̄(phi)"""
        bit = self.attributes.bit(x)
        return bool(self.point_sets(v, phi)[phi][1] & bit)

    def clause_audit(self, v, phi):
        """Re-derive ⊩ and ≻ for every subformula and every point from the
        relational clauses and compare them with the algebraic evaluation

        :returns: Report, one violation per disagreeing (subformula, point)
        """
        self.check_audit_cap()
        sets = self.point_sets(v, phi)
        report = Report("clause-audit", formula=str(phi))
        for psi in phi.subformulas():
            sat, ref = sets[psi]
            derived = (
                ("forces", self._forces_clause(v, psi, sets), sat, self.objects),
                ("refutes", self._refutes_clause(v, psi, sets), ref, self.attributes),
            )
            for side, clause, actual, carrier in derived:
                for point in carrier.members(clause ^ actual):
                    report.add(
                        "clause disagrees with evaluation",
                        side=side,
                        formula=str(psi),
                        point=point,
                        clause=bool(clause & carrier.bit(point)),
                    )

        if not report:
            self.log("Clause audit of {} found {}", phi, report.violations)
        return report

    def coordinate_sets(self, r, phi, sets):
        """the per-coordinate point sets of phi's arguments: satisfaction sets
        at coordinates over A and refutation sets at coordinates over X"""
        return [
            list(iter_bits(sets[arg][0] if r.kinds[j + 1] == OBJECTS else sets[arg][1]))
            for j, arg in enumerate(phi.args)
        ]

    def related_to_all(self, r, u, coordinates):
        """true iff (u, t̄) ∈ r for every t̄ in the product of coordinates"""
        return all(
            (u,) + t in r
            for t in itertools.product(*coordinates)
        )

    def related_to_none(self, r, u, coordinates):
        """true iff (u, t̄) ∉ r for every t̄ in the product of coordinates"""
        return not any(
            (u,) + t in r
            for t in itertools.product(*coordinates)
        )
