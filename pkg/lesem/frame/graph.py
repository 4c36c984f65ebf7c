# -*- coding: utf-8 -*-
import logging

from ..carrier import iter_bits, is_subset
from ..exception import PreconditionError, SignatureError
from ..report import Report
from ..representation import ReflexiveGraph
from ..syntax import (
    Application,
    Bottom,
    Conjunction,
    Disjunction,
    Letter,
    Signature,
    Top,
)
from .base import Frame, Relation, relation_kinds
from .polarity import PolarityFrame


logger = logging.getLogger(__name__)


def jsonable(identifier):
    """node identifiers that JSON can't key on (eg FilterIdealState) are
    written as their str()"""
    if isinstance(identifier, (str, int)):
        return identifier
    return str(identifier)


def edge_relation(graph):
    """E as a binary relation over the induced polarity"""
    return Relation.from_identifiers(graph.polarity, ("A", "X"), graph.edges)


def op0(r, sets):
    """S^[0][B̄] := {a | ∀b̄(b̄ ∈ B̄ ⇒ aSᶜb̄)}"""
    return r.complement().section(sets)


def op1(r, sets):
    """S^[1][A′] := {x | ∀a(a ∈ A′ ⇒ aSᶜx)} for a binary S"""
    return r.complement().coordinate_section(1, sets, [])


def opi(r, i, point, sets):
    """S^[i][u, B̄ⁱ], the coordinate i section of Sᶜ at output point u"""
    return r.complement().coordinate_section(i, [point], sets)


class GraphFrame(Frame):
    """A graph-based frame (Z, E, R_f, R_g)

    relations are tuples (z, z1, ..., zn) of nodes, output node first, the
    algebra and compatibility are those of the polarity frame on
    (Z, Z, E^c) with every relation complemented

    :param graph: ReflexiveGraph
    :param signature: Signature
    :param relations: dict, connective name -> Relation or iterable of node
        tuples
    :param unchecked: bool
    """
    kind = "graph"

    def __init__(self, graph, signature=None, relations=None, unchecked=False):
        self.graph = graph
        signature = signature if signature is not None else Signature()
        polarity = graph.polarity

        relations = dict(relations or {})
        for name in relations:
            if name not in signature:
                raise SignatureError(
                    f"Relation {name} has no connective in the signature"
                )

        self.graph_relations = {}
        for c in signature:
            r = relations.get(c.name, ())
            if not isinstance(r, Relation):
                r = Relation.from_identifiers(polarity, relation_kinds(c), r)
            self.graph_relations[c.name] = r

        super().__init__(
            polarity,
            signature,
            {name: r.complement() for name, r in self.graph_relations.items()},
            unchecked=unchecked,
        )

    def __repr__(self):
        return "{}({} nodes, {})".format(
            type(self).__name__,
            len(self.graph),
            ",".join(c.name for c in self.signature) or "no connectives",
        )

    @property
    def nodes(self):
        return self.graph.nodes

    @property
    def lattice(self):
        return self.graph.lattice

    @property
    def polarity_frame(self):
        """the polarity frame on (Z, Z, E^c) with the complemented relations"""
        return PolarityFrame(
            self.polarity,
            self.signature,
            self.relations,
            unchecked=self.unchecked,
        )

    @classmethod
    def from_dict(cls, d, unchecked=False):
        graph = ReflexiveGraph(
            d.get("nodes", []),
            [tuple(e) for e in d.get("edges", [])],
            normalize=True,
        )
        signature = Signature.from_dict(d.get("signature"))
        relations = {}
        for name, r in (d.get("relations") or {}).items():
            if isinstance(r, dict):
                r = r.get("tuples", [])
            relations[name] = [tuple(t) for t in r]
        return cls(graph, signature, relations, unchecked=unchecked)

    def to_dict(self):
        return {
            "kind": self.kind,
            "nodes": [jsonable(z) for z in self.nodes],
            "edges": [[jsonable(z) for z in e] for e in self.graph.edges],
            "signature": self.signature.to_dict(),
            "relations": {
                name: [[jsonable(z) for z in t] for t in r.identifiers()]
                for name, r in self.graph_relations.items()
            },
        }

    def replace(self, relations, unchecked=False):
        return type(self)(
            self.graph,
            self.signature,
            {name: r.complement() for name, r in relations.items()},
            unchecked=unchecked,
        )

    def graph_relation(self, name):
        self.signature.get(name)
        return self.graph_relations[name]

    def _section_label(self, name, i, points):
        nodes = self.nodes
        if i == 0:
            return "R_{}^[0][{}]".format(
                name,
                ",".join(str(nodes[p]) for p in points),
            )

        return "R_{}^[{}][{}{}]".format(
            name,
            i,
            nodes[points[0]],
            "".join(f"; {nodes[p]}" for p in points[1:]),
        )

    def no_successor_in(self, mask):
        """{z | ∀z′(zEz′ ⇒ z′ ∉ mask)}"""
        return sum(
            1 << z for z, s in enumerate(self.graph.successors)
            if not s & mask
        )

    def no_predecessor_in(self, mask):
        """{z | ∀z′(z′Ez ⇒ z′ ∉ mask)}"""
        return sum(
            1 << z for z, s in enumerate(self.graph.predecessors)
            if not s & mask
        )

    def _forces_clause(self, v, phi, sets):
        if isinstance(phi, Top):
            return self.nodes.full

        elif isinstance(phi, Bottom):
            return self.no_successor_in(self.nodes.full)

        elif isinstance(phi, Letter):
            return self.no_successor_in(sets[phi][1])

        elif isinstance(phi, Conjunction):
            return sets[phi.left][0] & sets[phi.right][0]

        elif isinstance(phi, Disjunction):
            # every successor fails to refute one of the disjuncts
            return self.no_successor_in(sets[phi.left][1] & sets[phi.right][1])

        elif isinstance(phi, Application):
            c = self.signature.get(phi.connective)
            if c.kind == "f":
                return self.no_successor_in(self._refutes_clause(v, phi, sets))

            r = self.graph_relations[c.name]
            coordinates = self.coordinate_sets(r, phi, sets)
            return sum(
                1 << z for z in range(len(self.nodes))
                if self.related_to_none(r, z, coordinates)
            )

    def _refutes_clause(self, v, phi, sets):
        if isinstance(phi, Top):
            return self.no_predecessor_in(self.nodes.full)

        elif isinstance(phi, Bottom):
            return self.nodes.full

        elif isinstance(phi, Letter):
            return self.no_predecessor_in(sets[phi][0])

        elif isinstance(phi, Conjunction):
            return self.no_predecessor_in(sets[phi.left][0] & sets[phi.right][0])

        elif isinstance(phi, Disjunction):
            return sets[phi.left][1] & sets[phi.right][1]

        elif isinstance(phi, Application):
            c = self.signature.get(phi.connective)
            if c.kind == "g":
                return self.no_predecessor_in(self._forces_clause(v, phi, sets))

            r = self.graph_relations[c.name]
            coordinates = self.coordinate_sets(r, phi, sets)
            return sum(
                1 << z for z in range(len(self.nodes))
                if self.related_to_none(r, z, coordinates)
            )

    def weak_persistence_check(self, v, phi):
        """true iff zEz′ and z ⊩ phi imply z′ ⊁ phi on every edge"""
        sat, ref = self.point_sets(v, phi)[phi]
        for z in iter_bits(sat):
            if self.graph.successors[z] & ref:
                self.log(
                    "Weak persistence of {} fails at {}",
                    phi,
                    self.nodes[z]
                )
                return False
        return True

    def persistence_check(self, v, phi):
        """true iff zEz′ and z ⊩ phi imply z′ ⊩ phi on every edge

        :raises: PreconditionError when E isn't a preorder
        """
        if not self.graph.is_preorder():
            raise PreconditionError("Persistence needs a transitive graph")

        sat = self.point_sets(v, phi)[phi][0]
        return all(
            is_subset(self.graph.successors[z], sat)
            for z in iter_bits(sat)
        )

    def indeterminate_points(self, v, phi):
        """the nodes that neither satisfy nor refute phi"""
        sat, ref = self.point_sets(v, phi)[phi]
        return self.nodes.members(self.nodes.full & ~(sat | ref))

    def classical_audit(self, v, phi):
        """On E = Δ, check that refutation is the complement of satisfaction
        and that ∧, ∨, box and dia satisfy their Kripke clauses

        :raises: PreconditionError when E isn't the identity
        :returns: Report
        """
        if not self.graph.is_discrete():
            raise PreconditionError("Classical projection needs E = Δ")

        self.check_audit_cap()
        full = self.nodes.full
        sets = self.point_sets(v, phi)
        report = Report("classical", formula=str(phi))
        for psi in phi.subformulas():
            sat, ref = sets[psi]
            if ref != full & ~sat:
                report.add(
                    "refutation is not the complement of satisfaction",
                    formula=str(psi),
                    points=list(self.nodes.members(ref ^ (full & ~sat))),
                )

            kripke = None
            if isinstance(psi, Conjunction):
                kripke = sets[psi.left][0] & sets[psi.right][0]

            elif isinstance(psi, Disjunction):
                kripke = sets[psi.left][0] | sets[psi.right][0]

            elif isinstance(psi, Application) and psi.connective in ("box", "dia"):
                r = self.graph_relations[psi.connective]
                arg = sets[psi.args[0]][0]
                successors = [0] * len(self.nodes)
                for z, z2 in r.tuples:
                    successors[z] |= 1 << z2

                if psi.connective == "box":
                    kripke = sum(
                        1 << z for z, s in enumerate(successors)
                        if is_subset(s, arg)
                    )

                else:
                    kripke = sum(
                        1 << z for z, s in enumerate(successors)
                        if s & arg
                    )

            if kripke is not None and kripke != sat:
                report.add(
                    "satisfaction differs from the Kripke clause",
                    formula=str(psi),
                    points=list(self.nodes.members(kripke ^ sat)),
                )
        return report

    def preorder_projection_check(self):
        """On a preorder E, compatibility of R_box should hold exactly when
        R_box ∘ ≤ = R_box and ≤ ∘ R_box ⊆ R_box (with z ≤ z′ iff zEz′)

        :returns: bool, true iff both sides agree
        :raises: PreconditionError when E isn't a preorder or box is missing
        """
        if not self.graph.is_preorder():
            raise PreconditionError("Preorder projection needs a transitive graph")

        if "box" not in self.signature:
            raise PreconditionError("Preorder projection needs box")

        compatible = self.compatibility_check(["box"]).ok

        succ = self.graph.successors
        n = len(self.nodes)
        related = [0] * n
        for z, z2 in self.graph_relations["box"].tuples:
            related[z] |= 1 << z2

        # R ∘ ≤ relates z to everything above an R-successor
        right = [0] * n
        # ≤ ∘ R relates z to the R-successors of everything above z
        left = [0] * n
        for z in range(n):
            for z2 in iter_bits(related[z]):
                right[z] |= succ[z2]
            for z2 in iter_bits(succ[z]):
                left[z] |= related[z2]

        projected = right == related and all(
            is_subset(left[z], related[z]) for z in range(n)
        )
        self.log(
            "Preorder projection of {}: compatible={}, projected={}",
            self,
            compatible,
            projected,
        )
        return compatible == projected
