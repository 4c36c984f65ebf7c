# -*- coding: utf-8 -*-
import logging
from typing import NamedTuple

import networkx as nx
import pydot
from datatypes import property as cachedproperty

from .carrier import Carrier, iter_bits, is_subset
from .config import environ
from .exception import CapError, InputError


logger = logging.getLogger(__name__)


class Polarity(object):
    """A formal context (A, X, I): objects, attributes and the incidence
    relation between them

    both carriers may be empty, up(∅) is X and down(∅) is A

    :example:
        p = Polarity(
            ["a", "b", "c"],
            ["x", "y", "z"],
            [("a", "z"), ("b", "x"), ("c", "x"), ("c", "y")],
        )
        p.up({"b", "c"}) # {"x"}
    """
    def __init__(self, objects=None, attributes=None, incidence=None):
        self.objects = Carrier(objects, "object")
        self.attributes = Carrier(attributes, "attribute")

        rows = [0] * len(self.objects)
        cols = [0] * len(self.attributes)
        for a, x in (incidence or ()):
            i = self.objects.index(a)
            j = self.attributes.index(x)
            rows[i] |= 1 << j
            cols[j] |= 1 << i

        self.rows = tuple(rows)
        """the attribute mask incident to each object"""

        self.cols = tuple(cols)
        """the object mask incident to each attribute"""

    @classmethod
    def from_rows(cls, objects, attributes, rows):
        """build a polarity straight from per-object attribute masks"""
        instance = cls(objects, attributes)
        cols = [0] * len(instance.attributes)
        for i, row in enumerate(rows):
            for j in iter_bits(row):
                cols[j] |= 1 << i
        instance.rows = tuple(rows)
        instance.cols = tuple(cols)
        return instance

    def __eq__(self, other):
        return (
            isinstance(other, Polarity)
            and self.objects == other.objects
            and self.attributes == other.attributes
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.objects, self.attributes, self.rows))

    def __repr__(self):
        return "{}({}x{}, |I|={})".format(
            type(self).__name__,
            len(self.objects),
            len(self.attributes),
            len(self.incidence),
        )

    @property
    def incidence(self):
        """all (object, attribute) pairs of I in carrier order"""
        return tuple(
            (a, self.attributes[j])
            for i, a in enumerate(self.objects)
            for j in iter_bits(self.rows[i])
        )

    def incident(self, a, x):
        return bool(self.rows[self.objects.index(a)] & self.attributes.bit(x))

    def up_mask(self, mask):
        ret = self.attributes.full
        for i in iter_bits(mask):
            ret &= self.rows[i]
        return ret

    def down_mask(self, mask):
        ret = self.objects.full
        for j in iter_bits(mask):
            ret &= self.cols[j]
        return ret

    def extent_closure(self, mask):
        return self.down_mask(self.up_mask(mask))

    def intent_closure(self, mask):
        return self.up_mask(self.down_mask(mask))

    def up(self, b):
        """The attributes shared by every object in b

        :param b: iterable of object identifiers
        :returns: frozenset of attribute identifiers
        """
        return frozenset(
            self.attributes.members(self.up_mask(self.objects.mask(b)))
        )

    def down(self, y):
        """The objects that have every attribute in y

        :param y: iterable of attribute identifiers
        :returns: frozenset of object identifiers
        """
        return frozenset(
            self.objects.members(self.down_mask(self.attributes.mask(y)))
        )

    def is_stable_extent(self, b):
        mask = self.objects.mask(b)
        return self.extent_closure(mask) == mask

    def is_stable_intent(self, y):
        mask = self.attributes.mask(y)
        return self.intent_closure(mask) == mask

    @cachedproperty(cached="_lattice")
    def lattice(self):
        """the concept lattice P⁺ of this polarity"""
        return ConceptLattice(self)


class Concept(NamedTuple):
    """A Galois-stable (extent, intent) pair, members are in carrier order"""
    extent: tuple
    intent: tuple


class ConceptLattice(object):
    """The concept lattice of a polarity

    concepts are keyed by extent and listed in a canonical order: by extent
    size, then by the ascending indexes of the extent's members, so the same
    polarity always produces the same concept indexes

    :param polarity: Polarity
    """
    def __init__(self, polarity):
        self.source = polarity
        self.objects = polarity.objects
        self.attributes = polarity.attributes

        pairs = sorted(
            self.enumerate(polarity),
            key=lambda pair: (
                pair[0].bit_count(),
                tuple(iter_bits(pair[0])),
            )
        )
        self.extents = tuple(p[0] for p in pairs)
        self.intents = tuple(p[1] for p in pairs)
        self._by_extent = {e: i for i, e in enumerate(self.extents)}
        self._by_intent = {y: i for i, y in enumerate(self.intents)}

        self.top = self._by_extent[self.objects.full]
        self.bottom = self._by_intent[self.attributes.full]

        self.object_map = {
            a: self._by_extent[polarity.extent_closure(1 << i)]
            for i, a in enumerate(self.objects)
        }
        """a ↦ index of the object concept (a↑↓, a↑)"""

        self.attribute_map = {
            x: self._by_intent[polarity.intent_closure(1 << j)]
            for j, x in enumerate(self.attributes)
        }
        """x ↦ index of the attribute concept (x↓, x↓↑)"""

        logger.debug(
            "Built lattice of %s concepts from %s",
            len(self.extents),
            polarity
        )

    def enumerate(self, polarity):
        """Yields every (extent, intent) mask pair by closing all subsets of
        the smaller carrier

        :raises: CapError when the smaller carrier or the concept count is
            over the configured caps
        """
        na = len(polarity.objects)
        nx_ = len(polarity.attributes)
        smaller = min(na, nx_)
        if smaller > environ.MAX_CARRIER:
            raise CapError("MAX_CARRIER", environ.MAX_CARRIER, smaller)

        if na <= nx_:
            for intent in self.closures(polarity.rows, polarity.attributes.full):
                yield polarity.down_mask(intent), intent

        else:
            for extent in self.closures(polarity.cols, polarity.objects.full):
                yield extent, polarity.up_mask(extent)

    def closures(self, masks, full):
        """Yields the distinct intersections of every subfamily of masks

        a branch is skipped when adding mask j doesn't change the running
        intersection, since every set reachable from it is also reachable
        without j
        """
        seen = set()
        stack = [(0, full)]
        while stack:
            i, current = stack.pop()
            if current not in seen:
                seen.add(current)
                if len(seen) > environ.MAX_CONCEPTS:
                    raise CapError(
                        "MAX_CONCEPTS",
                        environ.MAX_CONCEPTS,
                        len(seen)
                    )
                yield current

            for j in range(i, len(masks)):
                n = current & masks[j]
                if n != current:
                    stack.append((j + 1, n))

    def __len__(self):
        return len(self.extents)

    def __iter__(self):
        return iter(range(len(self.extents)))

    def __getitem__(self, i):
        return self.concept(i)

    def check_index(self, i):
        if not isinstance(i, int) or i < 0 or i >= len(self.extents):
            raise InputError(f"Invalid concept index {i!r}")
        return i

    def concept(self, i):
        self.check_index(i)
        return Concept(
            self.objects.members(self.extents[i]),
            self.attributes.members(self.intents[i]),
        )

    @property
    def concepts(self):
        return [self.concept(i) for i in self]

    def label(self, i, sep=","):
        """renders concept i the way lattices are usually drawn, eg (bc,x)"""
        self.check_index(i)
        extent = self.objects.format(self.extents[i]) or "∅"
        intent = self.attributes.format(self.intents[i]) or "∅"
        if sep == ",":
            return f"({extent},{intent})"
        return f"{extent}{sep}{intent}"

    def index_of_extent(self, mask):
        try:
            return self._by_extent[mask]

        except KeyError as e:
            raise InputError(
                "{{{}}} is not a Galois-stable extent".format(
                    ",".join(map(str, self.objects.members(mask)))
                )
            ) from e

    def index_of_intent(self, mask):
        try:
            return self._by_intent[mask]

        except KeyError as e:
            raise InputError(
                "{{{}}} is not a Galois-stable intent".format(
                    ",".join(map(str, self.attributes.members(mask)))
                )
            ) from e

    def find(self, extent=None, intent=None):
        """find a concept index by its extent (or intent) identifiers"""
        if extent is not None:
            return self.index_of_extent(self.objects.mask(extent))
        return self.index_of_intent(self.attributes.mask(intent or ()))

    def meet(self, s=()):
        """⋀s, the concept whose extent is the intersection of the extents,
        meet(∅) is top"""
        mask = self.objects.full
        for i in s:
            mask &= self.extents[self.check_index(i)]
        return self._by_extent[mask]

    def join(self, s=()):
        """⋁s, the concept whose intent is the intersection of the intents,
        join(∅) is bottom"""
        mask = self.attributes.full
        for i in s:
            mask &= self.intents[self.check_index(i)]
        return self._by_intent[mask]

    def leq(self, c, d):
        return is_subset(
            self.extents[self.check_index(c)],
            self.extents[self.check_index(d)]
        )

    @cachedproperty(cached="_meet_table")
    def meet_table(self):
        n = len(self)
        return [
            [self._by_extent[self.extents[c] & self.extents[d]] for d in range(n)]
            for c in range(n)
        ]

    @cachedproperty(cached="_join_table")
    def join_table(self):
        n = len(self)
        return [
            [self._by_intent[self.intents[c] & self.intents[d]] for d in range(n)]
            for c in range(n)
        ]

    def is_distributive(self):
        """true iff c ∧ (d ∨ e) = (c ∧ d) ∨ (c ∧ e) for all concepts"""
        m = self.meet_table
        j = self.join_table
        n = len(self)
        for c in range(n):
            mc = m[c]
            for d in range(n):
                jd = j[d]
                for e in range(d + 1, n):
                    if mc[jd[e]] != j[mc[d]][mc[e]]:
                        return False
        return True

    def to_networkx(self):
        """the strict order as a networkx DiGraph, edges point upward"""
        g = nx.DiGraph()
        g.add_nodes_from(self)
        g.add_edges_from(
            (c, d)
            for c in self for d in self
            if c != d and is_subset(self.extents[c], self.extents[d])
        )
        return g

    @cachedproperty(cached="_hasse_edges")
    def hasse_edges(self):
        """the covering pairs (c, d), c below d, in index order"""
        return sorted(nx.transitive_reduction(self.to_networkx()).edges())

    def to_dot(self, name="lattice"):
        """Hasse diagram in DOT, one "extent|intent" node per concept, edges
        drawn bottom to top"""
        graph = pydot.Dot(name, graph_type="digraph", rankdir="BT")
        for i in self:
            graph.add_node(
                pydot.Node(str(i), label='"{}"'.format(self.label(i, sep="|")))
            )
        for c, d in self.hasse_edges:
            graph.add_edge(pydot.Edge(str(c), str(d)))
        return graph.to_string()
