# -*- coding: utf-8 -*-
import logging

from ..carrier import is_subset
from ..lattice import Polarity
from ..syntax import (
    Application,
    Bottom,
    Conjunction,
    Disjunction,
    Letter,
    Signature,
    Top,
)
from .base import Frame


logger = logging.getLogger(__name__)


class PolarityFrame(Frame):
    """A polarity-based frame (A, X, I, R_f, R_g)

    :example:
        fr = PolarityFrame(
            Polarity(["a", "b"], ["x", "y"], [("a", "x"), ("b", "y")]),
            Signature(g=["box"]),
            {"box": [("a", "x"), ("b", "y")]},
        )
        fr.compatibility_check().ok # True
    """
    kind = "polarity"

    def __repr__(self):
        return "{}({}x{}, {})".format(
            type(self).__name__,
            len(self.objects),
            len(self.attributes),
            ",".join(c.name for c in self.signature) or "no connectives",
        )

    @classmethod
    def from_dict(cls, d, unchecked=False):
        polarity = Polarity(
            d.get("objects", []),
            d.get("attributes", []),
            [tuple(pair) for pair in d.get("incidence", [])],
        )
        signature = Signature.from_dict(d.get("signature"))
        relations = {}
        for name, r in (d.get("relations") or {}).items():
            if isinstance(r, dict):
                r = r.get("tuples", [])
            relations[name] = [tuple(t) for t in r]
        return cls(polarity, signature, relations, unchecked=unchecked)

    def to_dict(self):
        return {
            "kind": self.kind,
            "objects": list(self.objects),
            "attributes": list(self.attributes),
            "incidence": [list(pair) for pair in self.polarity.incidence],
            "signature": self.signature.to_dict(),
            "relations": {
                name: [list(t) for t in r.identifiers()]
                for name, r in self.relations.items()
            },
        }

    def replace(self, relations, unchecked=False):
        return type(self)(
            self.polarity,
            self.signature,
            relations,
            unchecked=unchecked,
        )

    def _section_label(self, name, i, points):
        r = self.relations[name]
        if i == 0:
            args = [r.carrier(j + 1)[p] for j, p in enumerate(points)]
            return "R_{}^({})[{}]".format(name, i, ",".join(map(str, args)))

        coordinates = [j for j in range(1, r.arity + 1) if j != i]
        rest = [r.carrier(j)[p] for j, p in zip(coordinates, points[1:])]
        return "R_{}^({})[{}{}]".format(
            name,
            i,
            r.carrier(0)[points[0]],
            "".join(f"; {p}" for p in rest),
        )

    def incident_to(self, refuters):
        """{a | ∀x(x ∈ refuters ⇒ aIx)}"""
        rows = self.polarity.rows
        return sum(
            1 << a for a in range(len(self.objects))
            if is_subset(refuters, rows[a])
        )

    def incident_from(self, satisfiers):
        """{x | ∀a(a ∈ satisfiers ⇒ aIx)}"""
        cols = self.polarity.cols
        return sum(
            1 << x for x in range(len(self.attributes))
            if is_subset(satisfiers, cols[x])
        )

    def _forces_clause(self, v, phi, sets):
        if isinstance(phi, Top):
            return self.objects.full

        elif isinstance(phi, Bottom):
            return self.incident_to(self.attributes.full)

        elif isinstance(phi, Letter):
            return self.incident_to(sets[phi][1])

        elif isinstance(phi, Conjunction):
            return sets[phi.left][0] & sets[phi.right][0]

        elif isinstance(phi, Disjunction):
            return self.incident_to(sets[phi.left][1] & sets[phi.right][1])

        elif isinstance(phi, Application):
            c = self.signature.get(phi.connective)
            if c.kind == "f":
                return self.incident_to(self._refutes_clause(v, phi, sets))

            # a ⊩ g(φ̄) iff every x̄ ≻ φ̄ has R_g(a, x̄)
            r = self.relations[c.name]
            coordinates = self.coordinate_sets(r, phi, sets)
            return sum(
                1 << a for a in range(len(self.objects))
                if self.related_to_all(r, a, coordinates)
            )

    def _refutes_clause(self, v, phi, sets):
        if isinstance(phi, Top):
            return self.incident_from(self.objects.full)

        elif isinstance(phi, Bottom):
            return self.attributes.full

        elif isinstance(phi, Letter):
            return self.incident_from(sets[phi][0])

        elif isinstance(phi, Conjunction):
            return self.incident_from(sets[phi.left][0] & sets[phi.right][0])

        elif isinstance(phi, Disjunction):
            return sets[phi.left][1] & sets[phi.right][1]

        elif isinstance(phi, Application):
            c = self.signature.get(phi.connective)
            if c.kind == "g":
                return self.incident_from(self._forces_clause(v, phi, sets))

            # x ≻ f(φ̄) iff every ā ⊩ φ̄ has R_f(x, ā)
            r = self.relations[c.name]
            coordinates = self.coordinate_sets(r, phi, sets)
            return sum(
                1 << x for x in range(len(self.attributes))
                if self.related_to_all(r, x, coordinates)
            )
