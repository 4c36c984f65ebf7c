# -*- coding: utf-8 -*-
import itertools
import logging
import random

import networkx as nx
from datatypes import LogMixin

from .algebra import FiniteAlgebra
from .config import environ
from .frame import GraphFrame, PolarityFrame, Relation, Valuation, relation_kinds
from .lattice import Polarity
from .representation import FiniteLattice, ReflexiveGraph
from .syntax import (
    Application,
    Bottom,
    Conjunction,
    Disjunction,
    Letter,
    Signature,
    Top,
)


logger = logging.getLogger(__name__)


OBJECT_NAMES = "abcdefghijklmnopqrstuv"
ATTRIBUTE_NAMES = "xyzwtsrqponmlkjihgfedc"
NODE_NAMES = "uvzwxyabcdefghijklmnopqrst"


def polarities(max_size):
    """Yields every polarity with 1 <= |A|, |X| <= max_size, ordered by
    (max(|A|, |X|), (|A|, |X|), incidence mask)"""
    shapes = sorted(
        (
            (na, nx_)
            for na in range(1, max_size + 1)
            for nx_ in range(1, max_size + 1)
        ),
        key=lambda shape: (max(shape), shape)
    )
    for na, nx_ in shapes:
        objects = OBJECT_NAMES[:na]
        attributes = ATTRIBUTE_NAMES[:nx_]
        row_mask = (1 << nx_) - 1
        for mask in range(1 << (na * nx_)):
            yield Polarity.from_rows(
                objects,
                attributes,
                [(mask >> (i * nx_)) & row_mask for i in range(na)],
            )


def graphs(max_nodes):
    """Yields every reflexive graph with 1 to max_nodes nodes, ordered by
    (node count, off-diagonal edge mask)"""
    for n in range(1, max_nodes + 1):
        nodes = NODE_NAMES[:n]
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        for mask in range(1 << len(pairs)):
            successors = [1 << i for i in range(n)]
            for k, (i, j) in enumerate(pairs):
                if mask & (1 << k):
                    successors[i] |= 1 << j
            yield ReflexiveGraph.from_successors(nodes, successors)


class Generator(LogMixin):
    """Seeded source of random structures

    the same seed always yields the same stream, so generated pools and
    countermodel searches are reproducible

    :param seed: int, defaults to environ.SEED
    """
    def __init__(self, seed=None):
        self.seed = environ.SEED if seed is None else seed
        self.random = random.Random(self.seed)

    def size(self, max_size, min_size=1):
        return self.random.randint(min_size, max_size)

    def mask(self, bits, density):
        ret = 0
        for i in range(bits):
            if self.random.random() < density:
                ret |= 1 << i
        return ret

    def polarity(self, max_size=4, density=0.5, min_size=1):
        na = self.size(max_size, min_size)
        nx_ = self.size(max_size, min_size)
        return Polarity.from_rows(
            OBJECT_NAMES[:na],
            ATTRIBUTE_NAMES[:nx_],
            [self.mask(nx_, density) for _ in range(na)],
        )

    def graph(self, max_nodes=5, density=0.4, min_nodes=1):
        n = self.size(max_nodes, min_nodes)
        return ReflexiveGraph.from_successors(
            NODE_NAMES[:n],
            [self.mask(n, density) | (1 << i) for i in range(n)],
        )

    def preorder(self, max_nodes=5, density=0.3, min_nodes=1):
        """a random reflexive transitive graph"""
        g = self.graph(max_nodes, density, min_nodes)
        closure = nx.transitive_closure(g.to_networkx(), reflexive=True)
        return ReflexiveGraph(g.nodes, closure.edges())

    def discrete(self, max_nodes=4, min_nodes=1):
        return ReflexiveGraph.discrete(NODE_NAMES[:self.size(max_nodes, min_nodes)])

    def lattice(self, max_elements=12, max_size=4):
        """a random finite lattice, read off the concept lattice of a random
        polarity"""
        while True:
            lattice = self.polarity(max_size).lattice
            if len(lattice) <= max_elements:
                return FiniteLattice.from_concept_lattice(lattice)

    def relation(self, polarity, kinds, density=0.3):
        ranges = [
            range(len(polarity.objects if kind == "A" else polarity.attributes))
            for kind in kinds
        ]
        return Relation(
            polarity,
            kinds,
            (
                t for t in itertools.product(*ranges)
                if self.random.random() < density
            )
        )

    def frame(self, kind="polarity", signature=None, max_size=4, density=0.2):
        """a random compatible frame, the compatible closure of random
        relations"""
        signature = signature if signature is not None else Signature.preset("DML")
        if kind == "graph":
            structure = self.graph(max_size)
        else:
            structure = self.polarity(max_size)

        relations = {
            c.name: self.relation(
                structure.polarity if kind == "graph" else structure,
                relation_kinds(c),
                density,
            )
            for c in signature
        }
        return unchecked_frame(kind, structure, signature, relations).compatible_closure()

    def algebra(self, signature=None, max_size=3):
        """a random finite normal algebra, the complex algebra of a random
        frame"""
        frame = self.frame("polarity", signature, max_size)
        return FiniteAlgebra.from_concept_algebra(frame.complex_algebra())

    def formula(self, signature=None, letters=("p", "q"), depth=3):
        signature = signature if signature is not None else Signature()
        connectives = list(signature)
        if depth <= 0:
            choice = self.random.randrange(len(letters) + 2)
            if choice == len(letters):
                return Top()
            elif choice == len(letters) + 1:
                return Bottom()
            return Letter(letters[choice])

        choice = self.random.randrange(3 + len(connectives))
        if choice == 0:
            return self.formula(signature, letters, 0)

        elif choice == 1:
            return Conjunction(
                self.formula(signature, letters, depth - 1),
                self.formula(signature, letters, depth - 1),
            )

        elif choice == 2:
            return Disjunction(
                self.formula(signature, letters, depth - 1),
                self.formula(signature, letters, depth - 1),
            )

        c = connectives[choice - 3]
        return Application(
            c.name,
            tuple(
                self.formula(signature, letters, depth - 1)
                for _ in range(c.arity)
            )
        )

    def valuation(self, lattice, letters=("p", "q")):
        return Valuation(
            lattice,
            {p: self.random.randrange(len(lattice)) for p in letters}
        )

    def seed_relations(self, polarity, signature, extra=2, density=0.3):
        """Yields candidate polarity-style relation maps for one structure:
        all empty, incidence-shaped, all full, then extra random ones"""
        if not len(signature):
            yield {}
            return

        def incidence(kinds):
            if kinds == ("A", "X"):
                return Relation(polarity, kinds, (
                    (a, x) for a, x in itertools.product(
                        range(len(polarity.objects)),
                        range(len(polarity.attributes)),
                    )
                    if polarity.rows[a] & (1 << x)
                ))

            elif kinds == ("X", "A"):
                return Relation(polarity, kinds, (
                    (x, a) for a, x in itertools.product(
                        range(len(polarity.objects)),
                        range(len(polarity.attributes)),
                    )
                    if polarity.rows[a] & (1 << x)
                ))

            return Relation(polarity, kinds)

        kinds = {c.name: relation_kinds(c) for c in signature}
        yield {name: Relation(polarity, k) for name, k in kinds.items()}
        yield {name: incidence(k) for name, k in kinds.items()}
        yield {
            name: Relation(polarity, k).complement()
            for name, k in kinds.items()
        }
        for _ in range(extra):
            yield {
                name: self.relation(polarity, k, density)
                for name, k in kinds.items()
            }

    def candidate_frames(self, kind, signature, max_size, extra=2):
        """Yields compatible frames smallest structure first, each structure's
        frames in seed order with duplicates dropped"""
        if kind == "graph":
            structures = graphs(max_size)
        else:
            structures = polarities(max_size)

        for structure in structures:
            polarity = structure.polarity if kind == "graph" else structure
            seen = set()
            for relations in self.seed_relations(polarity, signature, extra):
                if kind == "graph":
                    # seeds are polarity-style, the graph relations are
                    # their complements
                    relations = {
                        name: r.complement() for name, r in relations.items()
                    }

                frame = unchecked_frame(
                    kind,
                    structure,
                    signature,
                    relations
                ).compatible_closure()

                key = tuple(sorted(
                    (name, r.tuples) for name, r in frame.relations.items()
                ))
                if key not in seen:
                    seen.add(key)
                    yield frame


def unchecked_frame(kind, structure, signature, relations):
    """a frame of kind on structure (Polarity or ReflexiveGraph) built without
    the compatibility check, graph relations are graph-style"""
    if kind == "graph":
        return GraphFrame(structure, signature, relations, unchecked=True)
    return PolarityFrame(structure, signature, relations, unchecked=True)
