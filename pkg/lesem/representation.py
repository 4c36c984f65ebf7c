# -*- coding: utf-8 -*-
import logging
from typing import NamedTuple

import networkx as nx
from datatypes import property as cachedproperty

from .carrier import Carrier, iter_bits, is_subset
from .config import environ
from .exception import CapError, InputError
from .lattice import Polarity


logger = logging.getLogger(__name__)


class FiniteLattice(object):
    """A finite lattice given by its elements and order

    the order is checked at construction: it must be reflexive, antisymmetric
    and transitive and every pair must have a meet and a join

    :param elements: iterable of hashable element identifiers
    :param order: iterable of (a, b) pairs meaning a ≤ b
    """
    def __init__(self, elements, order):
        self.elements = Carrier(elements, "element")
        n = len(self.elements)
        if n == 0:
            raise InputError("A lattice needs at least one element")

        # below[b] has bit a set when a ≤ b
        below = [0] * n
        for a, b in order:
            below[self.elements.index(b)] |= self.elements.bit(a)

        above = [0] * n
        for b in range(n):
            for a in iter_bits(below[b]):
                above[a] |= 1 << b

        self.below = tuple(below)
        self.above = tuple(above)
        self.check_order()

        self._meet = [[self.bound(self.below, a, b) for b in range(n)] for a in range(n)]
        self._join = [[self.bound(self.above, a, b) for b in range(n)] for a in range(n)]

    @classmethod
    def from_covers(cls, elements, covers):
        """build the lattice whose order is the reflexive transitive closure of
        the covering pairs"""
        elements = list(elements)
        g = nx.DiGraph()
        g.add_nodes_from(elements)
        g.add_edges_from(covers)
        closure = nx.transitive_closure(g, reflexive=False)
        order = set(closure.edges())
        order.update((e, e) for e in elements)
        return cls(elements, order)

    @classmethod
    def chain(cls, n):
        return cls.from_covers(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def boolean(cls, n):
        """the powerset of an n-set (the boolean cube 2ⁿ), elements are masks"""
        elements = range(1 << n)
        return cls(
            elements,
            [(a, b) for a in elements for b in elements if is_subset(a, b)]
        )

    @classmethod
    def n5(cls):
        """the pentagon: 0 < a < b < 1 and 0 < c < 1"""
        return cls.from_covers(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        )

    @classmethod
    def m3(cls):
        """the diamond: three pairwise incomparable atoms between 0 and 1"""
        return cls.from_covers(
            ["0", "a", "b", "c", "1"],
            [("0", x) for x in "abc"] + [(x, "1") for x in "abc"],
        )

    @classmethod
    def from_concept_lattice(cls, lattice):
        """the finite lattice of a concept lattice, elements are concept
        indexes"""
        return cls(
            list(lattice),
            [(c, d) for c in lattice for d in lattice if lattice.leq(c, d)]
        )

    def check_order(self):
        for a in range(len(self.elements)):
            if not self.below[a] & (1 << a):
                raise InputError(
                    f"Order is not reflexive at {self.elements[a]!r}"
                )

            for b in iter_bits(self.below[a]):
                if b != a and self.below[b] & (1 << a):
                    raise InputError(
                        "Order is not antisymmetric at {!r}, {!r}".format(
                            self.elements[a],
                            self.elements[b],
                        )
                    )

                if not is_subset(self.below[b], self.below[a]):
                    raise InputError(
                        "Order is not transitive below {!r}".format(
                            self.elements[a],
                        )
                    )

    def bound(self, cone, a, b):
        """the greatest element of cone[a] ∩ cone[b] w.r.t. the cone relation
        (glb for below, lub for above)"""
        common = cone[a] & cone[b]
        for m in iter_bits(common):
            if cone[m] == common:
                return m

        kind = "meet" if cone is self.below else "join"
        raise InputError(
            "{!r} and {!r} have no {}".format(
                self.elements[a],
                self.elements[b],
                kind,
            )
        )

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.elements)!r})"

    def index(self, a):
        return self.elements.index(a)

    def leq(self, a, b):
        return bool(self.below[self.index(b)] & self.elements.bit(a))

    def meet(self, a, b):
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a, b):
        return self.elements[self._join[self.index(a)][self.index(b)]]

    @property
    def bottom(self):
        return self.meet_all(self.elements)

    @property
    def top(self):
        return self.join_all(self.elements)

    def meet_all(self, elements):
        i = None
        for a in elements:
            j = self.index(a)
            i = j if i is None else self._meet[i][j]
        return self.top if i is None else self.elements[i]

    def join_all(self, elements):
        i = None
        for a in elements:
            j = self.index(a)
            i = j if i is None else self._join[i][j]
        return self.bottom if i is None else self.elements[i]

    def down_set(self, a):
        return self.elements.members(self.below[self.index(a)])

    def up_set(self, a):
        return self.elements.members(self.above[self.index(a)])

    def is_distributive(self):
        return birkhoff_polarity(self).lattice.is_distributive()

    @property
    def order(self):
        return tuple(
            (a, b)
            for i, b in enumerate(self.elements)
            for a in self.elements.members(self.below[i])
        )


class ReflexiveGraph(object):
    """A finite graph (Z, E) whose edge relation contains the diagonal

    :param nodes: iterable of node identifiers
    :param edges: iterable of (z, z') pairs
    :param normalize: bool, add missing self-edges (with a warning) instead
        of rejecting the graph
    """
    def __init__(self, nodes, edges=None, normalize=False):
        self.nodes = Carrier(nodes, "node")
        succ = [0] * len(self.nodes)
        for z, z2 in (edges or ()):
            succ[self.nodes.index(z)] |= self.nodes.bit(z2)

        missing = [
            self.nodes[i] for i in range(len(self.nodes))
            if not succ[i] & (1 << i)
        ]
        if missing:
            if not normalize:
                raise InputError(
                    "Graph is not reflexive, missing self-edges on {}".format(
                        ", ".join(map(repr, missing))
                    )
                )

            logger.warning(
                "Adding missing self-edges to %s",
                ", ".join(map(str, missing))
            )
            for i in range(len(self.nodes)):
                succ[i] |= 1 << i

        self.successors = tuple(succ)
        """successors[i] has bit j set when node i E node j"""

    @classmethod
    def discrete(cls, nodes):
        """E = Δ, the classical projection"""
        nodes = list(nodes)
        return cls(nodes, [(z, z) for z in nodes])

    @classmethod
    def from_successors(cls, nodes, successors):
        instance = cls.__new__(cls)
        instance.nodes = Carrier(nodes, "node")
        instance.successors = tuple(successors)
        for i in range(len(instance.nodes)):
            if not instance.successors[i] & (1 << i):
                raise InputError(
                    f"Graph is not reflexive at {instance.nodes[i]!r}"
                )
        return instance

    def __eq__(self, other):
        return (
            isinstance(other, ReflexiveGraph)
            and self.nodes == other.nodes
            and self.successors == other.successors
        )

    def __hash__(self):
        return hash((self.nodes, self.successors))

    def __repr__(self):
        return "{}({} nodes, {} edges)".format(
            type(self).__name__,
            len(self.nodes),
            len(self.edges),
        )

    def __len__(self):
        return len(self.nodes)

    @property
    def edges(self):
        return tuple(
            (z, self.nodes[j])
            for i, z in enumerate(self.nodes)
            for j in iter_bits(self.successors[i])
        )

    def edge(self, z, z2):
        return bool(self.successors[self.nodes.index(z)] & self.nodes.bit(z2))

    @cachedproperty(cached="_predecessors")
    def predecessors(self):
        pred = [0] * len(self.nodes)
        for i, s in enumerate(self.successors):
            for j in iter_bits(s):
                pred[j] |= 1 << i
        return tuple(pred)

    def is_transitive(self):
        for i, s in enumerate(self.successors):
            for j in iter_bits(s):
                if not is_subset(self.successors[j], s):
                    return False
        return True

    def is_antisymmetric(self):
        for i, s in enumerate(self.successors):
            for j in iter_bits(s):
                if j != i and self.successors[j] & (1 << i):
                    return False
        return True

    def is_preorder(self):
        return self.is_transitive()

    def is_discrete(self):
        return all(s == (1 << i) for i, s in enumerate(self.successors))

    @cachedproperty(cached="_polarity")
    def polarity(self):
        """P_X = (Z, Z, I_{E^c}): a I x iff (a, x) is not an edge"""
        full = self.nodes.full
        return Polarity.from_rows(
            self.nodes,
            self.nodes,
            [full & ~s for s in self.successors],
        )

    @property
    def lattice(self):
        """X⁺, the concept lattice of the induced polarity"""
        if len(self.nodes) > environ.MAX_NODES:
            raise CapError("MAX_NODES", environ.MAX_NODES, len(self.nodes))
        return self.polarity.lattice

    def node_concepts(self, z):
        """(𝐳_s, 𝐳_r) = ((z↑↓, z↑), (z↓, z↓↑)) as indexes into .lattice"""
        self.nodes.index(z)
        lattice = self.lattice
        return lattice.object_map[z], lattice.attribute_map[z]

    def to_networkx(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.edges)
        return g


class FilterIdealState(NamedTuple):
    """A node of the graph of a lattice: a proper filter and a proper ideal
    that don't meet"""
    filter: tuple
    ideal: tuple

    def __str__(self):
        return "{}/{}".format(
            ",".join(map(str, self.filter)),
            ",".join(map(str, self.ideal)),
        )


def birkhoff_polarity(l):
    """(L, L, ≤)"""
    return Polarity(l.elements, l.elements, l.order)


def birkhoff_map(l):
    """a ↦ index of the concept (↓a, ↑a) in the Birkhoff concept lattice

    :returns: dict
    """
    lattice = birkhoff_polarity(l).lattice
    ret = {}
    for i, a in enumerate(l.elements):
        try:
            c = lattice.index_of_extent(l.below[i])

        except InputError:
            return None

        if lattice.intents[c] != l.above[i]:
            return None
        ret[a] = c
    return ret


def birkhoff_iso_check(l):
    """true iff a ↦ (↓a, ↑a) is an order isomorphism from l onto the
    concept lattice of its Birkhoff polarity"""
    lattice = birkhoff_polarity(l).lattice
    m = birkhoff_map(l)
    if m is None or len(set(m.values())) != len(lattice):
        return False

    for a in l.elements:
        for b in l.elements:
            if l.leq(a, b) != lattice.leq(m[a], m[b]):
                return False
    return True


def graph_polarity(g):
    return g.polarity


def graph_lattice(g):
    return g.lattice


def node_concepts(g, z):
    return g.node_concepts(z)


def closed_subsets(l, cone, bound):
    """Yields every mask of l that is nonempty, proper, closed under cone
    (up-sets when cone is .above) and closed under the binary bound table"""
    n = len(l)
    if n > environ.MAX_LATTICE:
        raise CapError("MAX_LATTICE", environ.MAX_LATTICE, n)

    full = l.elements.full
    for mask in range(1, full):
        members = list(iter_bits(mask))
        if not all(is_subset(cone[a], mask) for a in members):
            continue

        if all(
            mask & (1 << bound[a][b])
            for i, a in enumerate(members) for b in members[i + 1:]
        ):
            yield mask


def lattice_graph(l):
    """X_L: nodes are the disjoint (proper filter, proper ideal) pairs and
    z E z' iff F_z ∩ J_z' = ∅

    :param l: FiniteLattice
    :returns: ReflexiveGraph whose nodes are FilterIdealState
    """
    filters = list(closed_subsets(l, l.above, l._meet))
    ideals = list(closed_subsets(l, l.below, l._join))

    pairs = sorted(
        ((f, j) for f in filters for j in ideals if not f & j),
        key=lambda p: (tuple(iter_bits(p[0])), tuple(iter_bits(p[1])))
    )
    nodes = [
        FilterIdealState(l.elements.members(f), l.elements.members(j))
        for f, j in pairs
    ]
    successors = []
    for f, _ in pairs:
        successors.append(sum(
            1 << k for k, (_, j) in enumerate(pairs) if not f & j
        ))

    logger.debug(
        "Lattice of %s elements has %s filters, %s ideals, %s states",
        len(l),
        len(filters),
        len(ideals),
        len(nodes),
    )
    return ReflexiveGraph.from_successors(nodes, successors)


def is_transitive(g):
    return g.is_transitive()


def is_antisymmetric(g):
    return g.is_antisymmetric()
