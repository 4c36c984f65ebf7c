# -*- coding: utf-8 -*-
import itertools
import logging

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .exception import InputError
from .frame import GraphFrame, PolarityFrame, relation_kinds
from .frame.base import OBJECTS, normality_report
from .representation import FiniteLattice, birkhoff_polarity, lattice_graph


logger = logging.getLogger(__name__)


class FiniteAlgebra(object):
    """A finite normal LE-algebra: a lattice plus one operation per connective

    operations are given as tables keyed by argument tuples or as callables,
    either way the full table is built and checked for normality

    :example:
        alg = FiniteAlgebra(
            FiniteLattice.chain(2),
            Signature(g=["box"]),
            {"box": lambda a: a},
        )

    :param lattice: FiniteLattice
    :param signature: Signature
    :param operations: dict, connective name -> dict or callable
    :raises: InputError when a table is incomplete or not normal
    """
    def __init__(self, lattice, signature, operations=None):
        self.lattice = lattice
        self.signature = signature
        self.operations = {}

        operations = operations or {}
        for c in signature:
            if c.name not in operations:
                raise InputError(f"Missing operation for {c.name}")

            op = operations[c.name]
            table = {}
            for args in itertools.product(lattice.elements, repeat=c.arity):
                try:
                    value = op(*args) if callable(op) else op[args]

                except KeyError as e:
                    raise InputError(f"{c.name} has no value at {args}") from e

                lattice.index(value)
                table[args] = value
            self.operations[c.name] = table

        report = self.check_normality()
        if not report:
            v = report.violations[0]
            raise InputError(
                "{} is not normal: {} at coordinate {} for {}".format(
                    v["connective"],
                    v["reason"],
                    v["coordinate"],
                    v["args"],
                )
            )

    @classmethod
    def from_concept_algebra(cls, algebra):
        """the finite algebra carried by a complex algebra, elements are
        concept indexes"""
        return cls(
            FiniteLattice.from_concept_lattice(algebra.lattice),
            algebra.signature,
            {c.name: algebra.table(c.name) for c in algebra.signature},
        )

    def __len__(self):
        return len(self.lattice)

    def __repr__(self):
        return "{}({} elements, {})".format(
            type(self).__name__,
            len(self.lattice),
            ",".join(c.name for c in self.signature) or "no connectives",
        )

    def apply(self, name, args):
        self.signature.get(name)
        try:
            return self.operations[name][tuple(args)]

        except KeyError as e:
            raise InputError(f"{name} has no value at {tuple(args)}") from e

    def check_normality(self):
        l = self.lattice
        return normality_report(
            self.signature,
            list(l.elements),
            self.apply,
            l.meet,
            l.join,
            l.bottom,
            l.top,
        )

    def order_graph(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.lattice.elements)
        g.add_edges_from((a, b) for a, b in self.lattice.order if a != b)
        return g


def polarity_frame_from_algebra(alg):
    """F_A on the Birkhoff polarity (L, L, ≤)

    R_f(x, ā) iff f(ā) ≤ x and R_g(a, x̄) iff a ≤ g(x̄), every coordinate
    ranges over L itself

    :param alg: FiniteAlgebra
    :returns: PolarityFrame
    """
    l = alg.lattice
    relations = {}
    for c in alg.signature:
        tuples = []
        for args in itertools.product(l.elements, repeat=c.arity):
            value = alg.apply(c.name, args)
            for u in l.elements:
                if c.kind == "f" and l.leq(value, u):
                    tuples.append((u,) + args)

                elif c.kind == "g" and l.leq(u, value):
                    tuples.append((u,) + args)

        relations[c.name] = tuples

    return PolarityFrame(birkhoff_polarity(l), alg.signature, relations)


def graph_frame_from_algebra(alg):
    """The graph frame on the filter/ideal states of the lattice

    a state z = (↑a, ↓b) has 𝐳_s = a and 𝐳_r = b, then
    R_f(z, z̄) iff f(z̄) ≰ b_z and R_g(z, z̄) iff a_z ≰ g(z̄) where z̄ passes
    𝐳_s at coordinates over A and 𝐳_r at coordinates over X

    :param alg: FiniteAlgebra
    :returns: GraphFrame
    """
    l = alg.lattice
    graph = lattice_graph(l)
    states = list(graph.nodes)
    generators = {
        z: (l.meet_all(z.filter), l.join_all(z.ideal))
        for z in states
    }

    relations = {}
    for c in alg.signature:
        kinds = relation_kinds(c)
        tuples = []
        for zs in itertools.product(states, repeat=c.arity):
            args = tuple(
                generators[z][0] if kinds[j + 1] == OBJECTS else generators[z][1]
                for j, z in enumerate(zs)
            )
            value = alg.apply(c.name, args)
            for z in states:
                s, r = generators[z]
                if c.kind == "f" and not l.leq(value, r):
                    tuples.append((z,) + zs)

                elif c.kind == "g" and not l.leq(s, value):
                    tuples.append((z,) + zs)

        relations[c.name] = tuples

    return GraphFrame(graph, alg.signature, relations)


def frame_from_algebra(alg, kind="polarity"):
    if kind == "graph":
        return graph_frame_from_algebra(alg)
    return polarity_frame_from_algebra(alg)


def is_isomorphic(alg1, alg2):
    """true iff some order isomorphism between the lattices also commutes
    with every operation"""
    if alg1.signature != alg2.signature or len(alg1) != len(alg2):
        return False

    matcher = DiGraphMatcher(alg1.order_graph(), alg2.order_graph())
    for mapping in matcher.isomorphisms_iter():
        if all(
            mapping[value] == alg2.apply(name, tuple(mapping[a] for a in args))
            for name, table in alg1.operations.items()
            for args, value in table.items()
        ):
            return True
    return False
