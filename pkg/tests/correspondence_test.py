# -*- coding: utf-8 -*-

from lesem.config import environ
from lesem.correspondence import (
    PROPERTIES,
    CountermodelSearch,
    ValidityQuery,
    approximation_space_check,
    bullet_E,
    check_property,
    countermodel_search,
    graph_condition,
    iter_valuations,
    polarity_condition,
    valid_on_frame,
)
from lesem.exception import CapError, InputError, PreconditionError
from lesem.frame import PolarityFrame
from lesem.syntax import Signature

from . import PLAYS_INCIDENCE, WITNESS_EDGES, TestCase


DISTRIBUTIVITY = "p /\\ (q \\/ r) |- (p /\\ q) \\/ (p /\\ r)"


class ValidityTest(TestCase):
    def test_plays(self):
        frame = self.get_polarity_frame()
        q = ValidityQuery(frame, self.get_sequent(DISTRIBUTIVITY))
        self.assertFalse(valid_on_frame(q))

        countermodel = q.counterexample()
        self.assertTrue(countermodel.verify())
        witness = countermodel.witness
        self.assertEqual(DISTRIBUTIVITY, witness["sequent"])
        self.assertTrue("≰" in witness["comparison"])
        self.assertEqual(
            {"frame", "valuation", "witness"},
            set(countermodel.to_dict().keys()),
        )

    def test_identity(self):
        frame = self.get_polarity_frame()
        self.assertTrue(valid_on_frame(ValidityQuery(frame, self.get_sequent("p |- p"))))
        self.assertTrue(valid_on_frame(ValidityQuery(
            frame,
            self.get_sequent("(p /\\ q) \\/ (p /\\ r) |- p /\\ (q \\/ r)"),
        )))

    def test_var_budget(self):
        frame = self.get_polarity_frame()
        with self.assertRaises(InputError):
            ValidityQuery(frame, self.get_sequent(DISTRIBUTIVITY), var_budget=2)

        # the default budget is VAR_BUDGET, raised to the letters a sequent uses
        self.assertEqual(
            environ.VAR_BUDGET,
            ValidityQuery(frame, self.get_sequent("p |- p")).var_budget,
        )
        self.assertEqual(
            3,
            ValidityQuery(frame, self.get_sequent(DISTRIBUTIVITY)).var_budget,
        )
        self.assertEqual(
            3,
            CountermodelSearch(self.get_sequent(DISTRIBUTIVITY)).var_budget,
        )
        self.assertEqual(
            environ.VAR_BUDGET,
            CountermodelSearch(self.get_sequent("p |- p")).var_budget,
        )

    def test_iter_valuations(self):
        lattice = self.get_polarity().lattice
        self.assertEqual(25, len(list(iter_valuations(lattice, ["p", "q"]))))
        self.assertEqual(1, len(list(iter_valuations(lattice, []))))

        with self.assertRaises(CapError):
            list(iter_valuations(lattice, "abcdefghi"))


class CorrespondenceTest(TestCase):
    def get_candidates(self, kind, max_size, *names):
        gen = self.get_generator()
        return gen.candidate_frames(kind, Signature.builtins(*names), max_size)

    def assertCorrespondence(self, frames, condition, sequent, both=True):
        """condition(frame) holds exactly when sequent is valid on frame"""
        sequent = self.get_sequent(sequent)
        seen = set()
        for frame in frames:
            expected = condition(frame)
            self.assertEqual(
                expected,
                valid_on_frame(ValidityQuery(frame, sequent)),
                frame.to_dict(),
            )
            seen.add(expected)
        if both:
            self.assertEqual({True, False}, seen)

    def test_factivity(self):
        self.assertCorrespondence(
            self.get_candidates("polarity", 2, "box"),
            lambda fr: polarity_condition(fr, "factivity"),
            "box p |- p",
        )

    def test_omniscience(self):
        self.assertCorrespondence(
            self.get_candidates("polarity", 2, "box"),
            lambda fr: polarity_condition(fr, "omniscience"),
            "p |- box p",
        )

    def test_factivity_random(self):
        gen = self.get_generator()
        frames = [
            gen.frame("polarity", Signature.builtins("box"), 3, density=0.4)
            for _ in range(60)
        ]
        frames.append(self.get_polarity_frame(box=PLAYS_INCIDENCE))
        frames.append(self.get_polarity_frame(box=[
            (a, x) for a in "abc" for x in "xyz"
        ]))
        self.assertCorrespondence(
            frames,
            lambda fr: polarity_condition(fr, "factivity"),
            "box p |- p",
        )

    def test_e_reflexivity(self):
        self.assertCorrespondence(
            self.get_candidates("graph", 3, "box"),
            lambda gf: graph_condition(gf, "e-reflexivity"),
            "box p |- p",
        )

    def test_e_omniscience(self):
        self.assertCorrespondence(
            self.get_candidates("graph", 3, "box"),
            lambda gf: graph_condition(gf, "e-omniscience"),
            "p |- box p",
        )

    def test_e_transitivity(self):
        self.assertCorrespondence(
            self.get_candidates("graph", 3, "box"),
            lambda gf: graph_condition(gf, "e-transitivity"),
            "box p |- box box p",
        )

    def test_e_transitivity_random(self):
        gen = self.get_generator()
        frames = [
            gen.frame("graph", Signature.builtins("box"), 5)
            for _ in range(250)
        ]
        self.assertCorrespondence(
            frames,
            lambda gf: graph_condition(gf, "e-transitivity"),
            "box p |- box box p",
        )

    def test_bullet(self):
        g = self.get_graph()
        edges = list(g.edges)
        # u reaches v only through y = v, whose predecessors u, v share
        # only the successor v
        composed = bullet_E(edges, edges, g)
        self.assertTrue(("z", "z") in composed)
        self.assertFalse(("u", "z") in composed)

        with self.assertRaises(PreconditionError):
            graph_condition(self.get_graph_frame(), "e-reflexivity")

        with self.assertRaises(InputError):
            graph_condition(self.get_graph_frame(box=edges), "e-symmetry")


class CountermodelSearchTest(TestCase):
    def test_distributivity(self):
        sequent = self.get_sequent(DISTRIBUTIVITY)
        countermodel = countermodel_search(sequent, max_size=3, seed=42)
        self.assertIsNotNone(countermodel)
        self.assertTrue(countermodel.verify())
        self.assertFalse(countermodel.frame.lattice.is_distributive())

        again = countermodel_search(sequent, max_size=3, seed=42)
        self.assertEqual(countermodel.frame.to_dict(), again.frame.to_dict())
        self.assertEqual(countermodel.valuation, again.valuation)

    def test_valid(self):
        self.assertIsNone(countermodel_search(
            self.get_sequent("p |- p"),
            max_size=2,
        ))

    def test_constraint(self):
        sequent = self.get_sequent("box p |- p")
        self.assertIsNotNone(countermodel_search(sequent, max_size=2))
        self.assertIsNone(countermodel_search(
            sequent,
            max_size=2,
            constraints=["factive"],
        ))
        self.assertIsNone(countermodel_search(
            sequent,
            kind="graph",
            max_size=2,
            constraints=["factive"],
        ))

        self.assertIsNone(countermodel_search(
            self.get_sequent("p |- box p"),
            max_size=2,
            constraints=["omniscient"],
        ))

    def test_budget(self):
        s = CountermodelSearch(self.get_sequent(DISTRIBUTIVITY), max_size=3, budget=1)
        self.assertIsNone(s.run())

    def test_errors(self):
        sequent = self.get_sequent("p |- p")
        with self.assertRaises(InputError):
            CountermodelSearch(sequent, kind="hypergraph")

        with self.assertRaises(InputError):
            CountermodelSearch(sequent, constraints=["reflexive"])


class CheckPropertyTest(TestCase):
    def test_polarity(self):
        frame = self.get_polarity_frame()
        self.assertTrue(check_property(frame, "compatibility"))
        self.assertTrue(check_property(frame, "soundness"))

        report = check_property(frame, "distributivity")
        self.assertFalse(report)
        self.assertIsNotNone(report.witness)

        with self.assertRaises(InputError):
            check_property(frame, "e-reflexivity")

        with self.assertRaises(InputError):
            check_property(frame, "modularity")

    def test_factivity(self):
        frame = self.get_polarity_frame(box=PLAYS_INCIDENCE)
        self.assertTrue(check_property(frame, "factivity"))
        self.assertTrue(check_property(frame, "omniscience"))
        self.assertTrue(check_property(frame, "introspection"))

    def test_graph(self):
        frame = self.get_graph_frame(box=WITNESS_EDGES + [(z, z) for z in "uvz"])
        self.assertTrue(check_property(frame, "e-reflexivity"))
        self.assertTrue(check_property(frame, "e-omniscience"))
        self.assertTrue(check_property(frame, "antisymmetric"))
        self.assertFalse(check_property(frame, "transitive"))
        self.assertTrue(check_property(frame, "weak-persistence"))
        self.assertTrue(check_property(
            frame,
            "weak-persistence",
            self.get_formula("box (p \\/ q)"),
        ))

        with self.assertRaises(PreconditionError):
            check_property(frame, "persistence")

        with self.assertRaises(InputError):
            check_property(frame, "factivity")

    def test_names(self):
        frame = self.get_graph_frame()
        for name in ("compatibility", "distributivity", "soundness"):
            self.assertTrue(name in PROPERTIES)
            check_property(frame, name)


class ApproximationSpaceTest(TestCase):
    def test_identity(self):
        frame = self.get_polarity_frame(
            box=PLAYS_INCIDENCE,
            dia=[(x, a) for a, x in PLAYS_INCIDENCE],
        )
        report = approximation_space_check(frame)
        self.assertTrue(report, report.to_dict())

    def test_not_serial(self):
        frame = self.get_polarity_frame(
            box=[(a, x) for a in "abc" for x in "xyz"],
            dia=[],
        )
        report = approximation_space_check(frame)
        self.assertFalse(report)

        checks = report.details["checks"]
        seriality = checks[0]
        self.assertTrue(seriality.name.startswith("seriality"))
        self.assertFalse(seriality)
        self.assertIsNotNone(seriality.witness)

        adjunction = checks[-1]
        self.assertEqual("adjunction", adjunction.name)
        self.assertFalse(adjunction)

        # sub reports fold into the top level one
        self.assertEqual(seriality.witness, report.witness)
        self.assertEqual(
            len(adjunction.violations),
            len([x for x in report.violations if x["check"] == "adjunction"]),
        )

    def test_precondition(self):
        with self.assertRaises(PreconditionError):
            approximation_space_check(self.get_polarity_frame(box=PLAYS_INCIDENCE))

        frame = PolarityFrame(self.get_polarity())
        with self.assertRaises(PreconditionError):
            approximation_space_check(frame)
