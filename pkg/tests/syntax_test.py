# -*- coding: utf-8 -*-
from hypothesis import given, settings, strategies as st

from lesem.exception import ParseError, SignatureError
from lesem.syntax import (
    Application,
    Bottom,
    Conjunction,
    Connective,
    Disjunction,
    Letter,
    OrderType,
    Signature,
    Top,
    axioms_of_base_logic,
    parse_formula,
    parse_sequent,
    prop_vars,
    subformulas,
)

from . import TestCase


def formulas(signature, letters="pqr"):
    leaves = st.one_of(
        st.sampled_from(list(letters)).map(Letter),
        st.just(Top()),
        st.just(Bottom()),
    )

    def extend(children):
        options = [
            st.builds(Conjunction, children, children),
            st.builds(Disjunction, children, children),
        ]
        for c in signature:
            options.append(st.builds(
                lambda args, name=c.name: Application(name, tuple(args)),
                st.lists(children, min_size=c.arity, max_size=c.arity),
            ))
        return st.one_of(*options)

    return st.recursive(leaves, extend, max_leaves=12)


CUSTOM = Signature(
    f={"dia": "+", "fuse": "+-"},
    g={"box": "+", "e": ""},
)


class SignatureTest(TestCase):
    def test_presets(self):
        dml = Signature.preset("DML")
        self.assertEqual(4, len(dml))
        self.assertEqual(["dia", "lhd"], [c.name for c in dml.f_connectives])
        self.assertEqual(["box", "rhd"], [c.name for c in dml.g_connectives])
        self.assertEqual(2, len(Signature.preset("pml")))

        with self.assertRaises(SignatureError):
            Signature.preset("S5")

    def test_builtin_fixed(self):
        with self.assertRaises(SignatureError):
            Signature(f=["box"])

        with self.assertRaises(SignatureError):
            Signature(g={"box": "-"})

        c = Signature(g=["rhd"]).get("rhd")
        self.assertEqual("g", c.kind)
        self.assertFalse(c.is_monotone(0))
        self.assertEqual("▷", c.symbol)

    def test_custom(self):
        fuse = CUSTOM.get("fuse")
        self.assertEqual(2, fuse.arity)
        self.assertEqual((OrderType.MONOTONE, OrderType.ANTITONE), fuse.order_type)
        self.assertFalse(fuse.is_builtin)
        self.assertEqual(0, CUSTOM.get("e").arity)

        with self.assertRaises(SignatureError):
            CUSTOM.get("nope")

        with self.assertRaises(SignatureError):
            Signature(f=["top"])

        with self.assertRaises(SignatureError):
            Signature(f=["Bad"])

        with self.assertRaises(SignatureError):
            Connective("h", "k", "+")

    def test_declared_twice(self):
        s = Signature(f={"fuse": "+"})
        s.add(Connective("fuse", "f", "+"))
        with self.assertRaises(SignatureError):
            s.add(Connective("fuse", "g", "+"))

    def test_dict(self):
        d = CUSTOM.to_dict()
        self.assertEqual(["+", "-"], d["f"]["fuse"])
        self.assertEqual([], d["g"]["e"])
        self.assertEqual(CUSTOM, Signature.from_dict(d))

        s = Signature.from_dict({"preset": "PML", "g": {"e": ""}})
        self.assertEqual(["dia", "box", "e"], [c.name for c in s])
        self.assertEqual(Signature.preset("DML"), Signature.from_dict("DML"))
        self.assertEqual(0, len(Signature.from_dict(None)))


class ParseTest(TestCase):
    def test_precedence(self):
        sig = Signature.preset("DML")
        p, q, r = Letter("p"), Letter("q"), Letter("r")

        self.assertEqual(
            Disjunction(Conjunction(p, q), r),
            parse_formula(sig, "p /\\ q \\/ r"),
        )
        self.assertEqual(
            Conjunction(Application("box", (p,)), q),
            parse_formula(sig, "box p /\\ q"),
        )
        self.assertEqual(
            Application("box", (Application("dia", (p,)),)),
            parse_formula(sig, "box dia p"),
        )
        self.assertEqual(
            Conjunction(Conjunction(p, q), r),
            parse_formula(sig, "p /\\ q /\\ r"),
        )
        self.assertEqual(
            Conjunction(p, Disjunction(q, r)),
            parse_formula(sig, "p /\\ (q \\/ r)"),
        )
        self.assertEqual(Top(), parse_formula(sig, "  top "))
        self.assertEqual(Letter("boxer"), parse_formula(sig, "boxer"))

    def test_render(self):
        sig = Signature.preset("DML")
        for text in [
            "p /\\ (q \\/ r)",
            "p \\/ q /\\ r",
            "box (p /\\ q)",
            "lhd top \\/ rhd bot",
            "p /\\ (q /\\ r)",
        ]:
            self.assertEqual(text, str(parse_formula(sig, text)))

        self.assertEqual(
            "fuse(p, q \\/ r) /\\ e()",
            str(parse_formula(CUSTOM, "fuse(p, q \\/ r) /\\ e()")),
        )

    @settings(max_examples=200, deadline=None)
    @given(formulas(CUSTOM))
    def test_render_parse(self, phi):
        self.assertEqual(phi, parse_formula(CUSTOM, str(phi)))

    def test_errors(self):
        sig = Signature.preset("PML")
        with self.assertRaises(ParseError) as cm:
            parse_formula(sig, "rhd p")
        self.assertTrue("Unknown connective rhd" in str(cm.exception))
        self.assertEqual(1, cm.exception.column)

        with self.assertRaises(ParseError) as cm:
            parse_formula(sig, "p /\\")
        self.assertTrue("end of input" in str(cm.exception))

        with self.assertRaises(ParseError) as cm:
            parse_formula(sig, "p & q")
        self.assertEqual(3, cm.exception.column)
        self.assertEqual("p & q\n  ^", cm.exception.caret())

        with self.assertRaises(ParseError):
            parse_formula(sig, "")

        with self.assertRaises(ParseError) as cm:
            parse_formula(CUSTOM, "fuse(p)")
        self.assertTrue("takes 2 arguments" in str(cm.exception))

        with self.assertRaises(ParseError):
            parse_formula(CUSTOM, "fuse /\\ p")

    def test_sequent(self):
        sig = Signature.preset("DML")
        s = parse_sequent(sig, "box p |- p")
        self.assertEqual(Application("box", (Letter("p"),)), s.lhs)
        self.assertEqual("box p |- p", str(s))
        self.assertEqual(["p"], s.letters())
        self.assertEqual({"box"}, s.connectives())

        with self.assertRaises(ParseError) as cm:
            parse_sequent(sig, "p /\\ q")
        self.assertTrue("Missing turnstile" in str(cm.exception))

        with self.assertRaises(ParseError) as cm:
            parse_sequent(sig, "p |- q |- r")
        self.assertTrue("Only one turnstile" in str(cm.exception))

        with self.assertRaises(ParseError) as cm:
            parse_sequent(sig, "p |- q & r")
        self.assertEqual(8, cm.exception.column)


class FormulaTest(TestCase):
    def test_structure(self):
        phi = self.get_formula("box (p /\\ q) \\/ p")
        self.assertEqual(3, phi.depth)
        self.assertEqual(0, Letter("p").depth)
        self.assertEqual(["p", "q"], prop_vars(phi))
        self.assertEqual({"box"}, phi.connectives())

        subs = subformulas(phi)
        self.assertEqual(phi, subs[-1])
        self.assertEqual(5, len(subs))
        self.assertEqual([Letter("p"), Letter("q")], subs[:2])

    def test_rename(self):
        phi = self.get_formula("p /\\ dia q")
        self.assertEqual("q /\\ dia p", str(phi.rename({"p": "q", "q": "p"})))
        s = self.get_sequent("p |- q")
        self.assertEqual("r |- q", str(s.rename({"p": "r"})))


class AxiomsTest(TestCase):
    def test_counts(self):
        self.assertEqual(15, len(axioms_of_base_logic(Signature.preset("DML"))))
        self.assertEqual(9, len(axioms_of_base_logic(Signature.builtins("box"))))
        self.assertEqual(7, len(axioms_of_base_logic(Signature())))
