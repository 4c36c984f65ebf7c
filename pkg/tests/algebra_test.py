# -*- coding: utf-8 -*-

from lesem.algebra import (
    FiniteAlgebra,
    frame_from_algebra,
    graph_frame_from_algebra,
    is_isomorphic,
)
from lesem.exception import InputError
from lesem.representation import FiniteLattice
from lesem.syntax import Signature

from . import TestCase


class FiniteAlgebraTest(TestCase):
    def get_identity_algebra(self, n=3):
        return FiniteAlgebra(
            FiniteLattice.chain(n),
            Signature.builtins("box", "dia"),
            {"box": lambda a: a, "dia": lambda a: a},
        )

    def test_tables(self):
        alg = self.get_identity_algebra()
        self.assertEqual(3, len(alg))
        self.assertEqual(1, alg.apply("box", [1]))

        with self.assertRaises(InputError):
            alg.apply("box", [7])

    def test_missing(self):
        with self.assertRaises(InputError):
            FiniteAlgebra(FiniteLattice.chain(2), Signature.builtins("box"), {})

        with self.assertRaises(InputError):
            FiniteAlgebra(
                FiniteLattice.chain(2),
                Signature.builtins("box"),
                {"box": {(0,): 0}},
            )

    def test_not_normal(self):
        # box has to send the top to the top
        with self.assertRaises(InputError) as cm:
            FiniteAlgebra(
                FiniteLattice.chain(2),
                Signature.builtins("box"),
                {"box": lambda a: 0},
            )
        self.assertTrue("not normal" in str(cm.exception))

        # dia has to send bottom to bottom
        with self.assertRaises(InputError):
            FiniteAlgebra(
                FiniteLattice.chain(2),
                Signature.builtins("dia"),
                {"dia": lambda a: 1},
            )

    def test_from_concept_algebra(self):
        frame = self.get_polarity_frame(
            box=[("a", "z"), ("b", "x"), ("c", "x"), ("c", "y")],
        )
        alg = FiniteAlgebra.from_concept_algebra(frame.complex_algebra())
        self.assertEqual(5, len(alg))
        for c in frame.lattice:
            self.assertEqual(c, alg.apply("box", [c]))

    def test_isomorphic(self):
        alg = self.get_identity_algebra()
        self.assertTrue(is_isomorphic(alg, alg))
        self.assertFalse(is_isomorphic(alg, self.get_identity_algebra(4)))

        top = FiniteAlgebra(
            FiniteLattice.chain(3),
            Signature.builtins("box", "dia"),
            {"box": lambda a: 2, "dia": lambda a: a},
        )
        self.assertFalse(is_isomorphic(alg, top))


class FrameFromAlgebraTest(TestCase):
    def test_polarity_round_trip(self):
        """the complex algebra of F_A is isomorphic to A"""
        gen = self.get_generator()
        for _ in range(40):
            alg = gen.algebra(Signature.preset("DML"), max_size=3)
            frame = frame_from_algebra(alg)
            self.assertTrue(frame.compatibility_check())
            back = FiniteAlgebra.from_concept_algebra(frame.complex_algebra())
            self.assertTrue(is_isomorphic(alg, back), alg)

    def test_graph_compatible(self):
        gen = self.get_generator()
        for _ in range(20):
            alg = gen.algebra(Signature.builtins("box", "dia"), max_size=3)
            frame = frame_from_algebra(alg, "graph")
            self.assertTrue(frame.compatibility_check())
            self.assertLessEqual(len(alg), len(frame.lattice))

    def test_graph_chain(self):
        alg = FiniteAlgebra(
            FiniteLattice.chain(2),
            Signature.builtins("box"),
            {"box": lambda a: a},
        )
        frame = graph_frame_from_algebra(alg)
        self.assertEqual(1, len(frame.nodes))
        self.assertEqual(
            list(frame.graph.edges),
            frame.graph_relation("box").identifiers(),
        )
        self.assertEqual(2, len(frame.lattice))
