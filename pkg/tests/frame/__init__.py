# -*- coding: utf-8 -*-
from unittest import SkipTest

from lesem.correspondence import soundness_report
from lesem.exception import CompatibilityError, InputError
from lesem.syntax import Signature

from .. import TestCase


class _FrameTest(TestCase):
    """Checks every frame class has to pass, subclasses set frame_class and
    provide the fixtures"""
    frame_class = None

    pool_size = 200

    @classmethod
    def setUpClass(cls):
        if cls.frame_class is None:
            raise SkipTest("no frame class")
        super().setUpClass()

    @property
    def kind(self):
        return self.frame_class.kind

    def get_structure(self):
        raise NotImplementedError()

    def get_frame(self, signature=None, **relations):
        return self.frame_class(
            self.get_structure(),
            signature if signature is not None else self.get_signature(*relations),
            relations,
        )

    def get_incompatible_relations(self):
        """relations (for box) with exactly one unstable section"""
        raise NotImplementedError()

    def get_pool(self, count, max_size=4, signature=None):
        gen = self.get_generator()
        for _ in range(count):
            yield gen, gen.frame(self.kind, signature, max_size=max_size)

    def test_empty_signature(self):
        frame = self.get_frame()
        self.assertEqual(0, len(frame.relations))
        self.assertTrue(frame.compatibility_check())
        self.assertEqual(5, len(frame.lattice))

    def test_incompatible(self):
        relations = self.get_incompatible_relations()
        with self.assertRaises(CompatibilityError) as cm:
            self.get_frame(**relations)
        self.assertEqual(1, len(cm.exception.report.violations))

        frame = self.frame_class(
            self.get_structure(),
            Signature.builtins("box"),
            relations,
            unchecked=True,
        )
        report = frame.compatibility_check()
        self.assertFalse(report)
        self.assertEqual("box", report.violations[0]["relation"])

        with self.assertRaises(CompatibilityError):
            frame.complex_algebra()

        closed = frame.compatible_closure()
        self.assertTrue(closed.compatibility_check())
        self.assertTrue(frame.relations["box"].issubset(closed.relations["box"]))

    def test_unknown_relation(self):
        with self.assertRaises(InputError):
            self.frame_class(
                self.get_structure(),
                Signature.builtins("box"),
                {"dia": []},
            )

    def test_unassigned_letter(self):
        frame = self.get_frame()
        v = frame.valuation({})
        with self.assertRaises(InputError):
            frame.eval(v, self.get_formula("p /\\ q"))

    def test_constants(self):
        frame = self.get_frame()
        v = frame.valuation()
        self.assertEqual(frame.lattice.top, frame.eval(v, self.get_formula("top")))
        self.assertEqual(frame.lattice.bottom, frame.eval(v, self.get_formula("bot")))

    def test_dict(self):
        gen = self.get_generator()
        for _ in range(10):
            frame = gen.frame(self.kind, max_size=3)
            d = frame.to_dict()
            self.assertEqual(d, self.frame_class.from_dict(d).to_dict())

    def test_closure_idempotent(self):
        for _, frame in self.get_pool(20, max_size=3):
            closed = frame.compatible_closure()
            self.assertEqual(frame.relations, closed.relations)

    def test_clause_audit(self):
        """the relational clauses agree with the algebraic evaluation"""
        for gen, frame in self.get_pool(self.pool_size):
            v = gen.valuation(frame.lattice, ("p", "q"))
            phi = gen.formula(frame.signature, ("p", "q"), depth=4)
            report = frame.clause_audit(v, phi)
            self.assertTrue(report, report.violations)

    def test_normality(self):
        for _, frame in self.get_pool(30, max_size=3):
            report = frame.complex_algebra().check_normality()
            self.assertTrue(report, report.violations)

    def test_soundness(self):
        for _, frame in self.get_pool(100, max_size=3):
            report = soundness_report(frame)
            self.assertTrue(report, report.violations)
