# -*- coding: utf-8 -*-
from hypothesis import given, settings, strategies as st

from lesem.config import environ
from lesem.exception import CapError, InputError
from lesem.generate import ATTRIBUTE_NAMES, OBJECT_NAMES
from lesem.lattice import Polarity

from . import TestCase


@st.composite
def polarities(draw, max_size=8):
    na = draw(st.integers(0, max_size))
    nx_ = draw(st.integers(0, max_size))
    rows = draw(st.lists(
        st.integers(0, (1 << nx_) - 1),
        min_size=na,
        max_size=na,
    ))
    return Polarity.from_rows(OBJECT_NAMES[:na], ATTRIBUTE_NAMES[:nx_], rows)


class PolarityTest(TestCase):
    def test_up_down(self):
        p = self.get_polarity()
        self.assertEqual(frozenset("x"), p.up(["b", "c"]))
        self.assertEqual(frozenset("xyz"), p.up([]))
        self.assertEqual(frozenset("abc"), p.down([]))
        self.assertEqual(frozenset(), p.up(["a", "b"]))
        self.assertEqual(frozenset("c"), p.down(["x", "y"]))

    def test_stable(self):
        p = self.get_polarity()
        self.assertTrue(p.is_stable_extent(["b", "c"]))
        self.assertFalse(p.is_stable_extent(["a", "b"]))
        self.assertTrue(p.is_stable_intent(["x", "y"]))
        self.assertFalse(p.is_stable_intent(["y"]))

    def test_unknown_identifier(self):
        p = self.get_polarity()
        with self.assertRaises(InputError):
            p.up(["q"])

        with self.assertRaises(InputError):
            Polarity(["a", "a"], ["x"])

        with self.assertRaises(InputError):
            Polarity(["a"], ["x"], [("a", "y")])

    def test_incidence(self):
        p = self.get_polarity()
        self.assertEqual(4, len(p.incidence))
        self.assertTrue(p.incident("c", "y"))
        self.assertFalse(p.incident("a", "x"))

    @settings(max_examples=1000, deadline=None)
    @given(polarities(), st.data())
    def test_galois_connection(self, p, data):
        b = data.draw(st.integers(0, p.objects.full))
        y = data.draw(st.integers(0, p.attributes.full))

        # B ⊆ Y↓ iff Y ⊆ B↑
        self.assertEqual(
            (b & ~p.down_mask(y)) == 0,
            (y & ~p.up_mask(b)) == 0,
        )

        closed = p.extent_closure(b)
        self.assertEqual(closed & b, b)
        self.assertEqual(closed, p.extent_closure(closed))
        self.assertEqual(p.up_mask(b), p.up_mask(closed))

        closed = p.intent_closure(y)
        self.assertEqual(closed & y, y)
        self.assertEqual(closed, p.intent_closure(closed))


class ConceptLatticeTest(TestCase):
    def test_plays(self):
        lattice = self.get_polarity().lattice
        self.assertEqual(5, len(lattice))
        self.assertEqual(
            ["(∅,xyz)", "(a,z)", "(c,xy)", "(bc,x)", "(abc,∅)"],
            [lattice.label(i) for i in lattice],
        )
        self.assertEqual(0, lattice.bottom)
        self.assertEqual(4, lattice.top)
        self.assertFalse(lattice.is_distributive())
        self.assertEqual(5, len(lattice.hasse_edges))

    def test_find(self):
        lattice = self.get_polarity().lattice
        self.assertEqual(3, lattice.find(extent=["b", "c"]))
        self.assertEqual(3, lattice.find(intent=["x"]))
        self.assertEqual(lattice.bottom, lattice.find(intent=["x", "y", "z"]))

        with self.assertRaises(InputError):
            lattice.find(extent=["a", "b"])

        with self.assertRaises(InputError):
            lattice.concept(5)

    def test_meet_join(self):
        lattice = self.get_polarity().lattice
        r = lattice.find(extent="a")
        h = lattice.find(extent="c")
        d = lattice.find(extent="bc")

        self.assertEqual(lattice.top, lattice.join([h, r]))
        self.assertEqual(d, lattice.meet([d, lattice.join([h, r])]))
        self.assertEqual(
            h,
            lattice.join([lattice.meet([d, h]), lattice.meet([d, r])])
        )
        self.assertEqual(lattice.top, lattice.meet([]))
        self.assertEqual(lattice.bottom, lattice.join([]))
        self.assertTrue(lattice.leq(h, d))
        self.assertFalse(lattice.leq(r, d))

    def test_object_attribute_maps(self):
        lattice = self.get_polarity().lattice
        self.assertEqual("(c,xy)", lattice.label(lattice.object_map["c"]))
        self.assertEqual("(bc,x)", lattice.label(lattice.attribute_map["x"]))
        self.assertEqual("(c,xy)", lattice.label(lattice.attribute_map["y"]))

    def test_empty(self):
        lattice = Polarity().lattice
        self.assertEqual(1, len(lattice))
        self.assertEqual(lattice.top, lattice.bottom)
        self.assertTrue(lattice.is_distributive())

    def test_chain_is_distributive(self):
        p = Polarity(
            ["a", "b"],
            ["x", "y"],
            [("a", "x"), ("a", "y"), ("b", "x")],
        )
        self.assertEqual(3, len(p.lattice))
        self.assertTrue(p.lattice.is_distributive())

    def test_to_dot(self):
        lattice = self.get_polarity().lattice
        dot = lattice.to_dot()
        self.assertTrue("digraph" in dot)
        self.assertTrue("bc|x" in dot)
        self.assertEqual(5, dot.count("->"))

    def test_cap(self):
        n = environ.MAX_CARRIER + 1
        p = Polarity([f"a{i}" for i in range(n)], [f"x{i}" for i in range(n)])
        with self.assertRaises(CapError):
            p.lattice

    @settings(max_examples=1000, deadline=None)
    @given(polarities())
    def test_lattice_laws(self, p):
        lattice = p.lattice
        n = len(lattice)
        for c in range(n):
            self.assertEqual(
                lattice.extents[c],
                p.down_mask(lattice.intents[c]),
            )

            # every concept is the join of its object concepts and the meet
            # of its attribute concepts
            concept = lattice.concept(c)
            self.assertEqual(c, lattice.join(
                lattice.object_map[a] for a in concept.extent
            ))
            self.assertEqual(c, lattice.meet(
                lattice.attribute_map[x] for x in concept.intent
            ))
            self.assertEqual(c, lattice.meet([c, c]))
            for d in range(n):
                m = lattice.meet([c, d])
                j = lattice.join([c, d])
                self.assertTrue(lattice.leq(m, c) and lattice.leq(m, d))
                self.assertTrue(lattice.leq(c, j) and lattice.leq(d, j))
                self.assertEqual(c, lattice.join([c, lattice.meet([c, d])]))
                self.assertEqual(lattice.leq(c, d), m == c)

        for i, a in enumerate(p.objects):
            self.assertTrue(
                lattice.extents[lattice.object_map[a]] & (1 << i)
            )
