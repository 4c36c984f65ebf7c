# -*- coding: utf-8 -*-
import re
import logging
from dataclasses import dataclass

from lark import Lark, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)
from datatypes import Enum

from .exception import ParseError, SignatureError


logger = logging.getLogger(__name__)


class OrderType(Enum):
    """How a connective's coordinate interacts with the order"""
    MONOTONE = "+"
    """the coordinate preserves order"""

    ANTITONE = "-"
    """the coordinate reverses order"""


class Connective(object):
    """An order-typed connective of a signature

    :param name: str
    :param kind: str, "f" for join-preserving (diamond-like) connectives and
        "g" for meet-preserving (box-like) ones
    :param order_type: iterable of OrderType or "+"/"-" strings, one per
        coordinate, so arity is len(order_type)
    """
    SYMBOLS = {"dia": "◇", "lhd": "◁", "box": "□", "rhd": "▷"}

    def __init__(self, name, kind, order_type=()):
        if kind not in ("f", "g"):
            raise SignatureError(f"Connective {name} must be of kind f or g")
        self.name = name
        self.kind = kind
        self.order_type = tuple(
            t if isinstance(t, OrderType) else OrderType(t)
            for t in order_type
        )

    @property
    def arity(self):
        return len(self.order_type)

    @property
    def is_builtin(self):
        return self.name in Signature.BUILTINS

    @property
    def symbol(self):
        return self.SYMBOLS.get(self.name, self.name)

    def is_monotone(self, i):
        return self.order_type[i] is OrderType.MONOTONE

    def __eq__(self, other):
        return (
            isinstance(other, Connective)
            and (self.name, self.kind, self.order_type)
                == (other.name, other.kind, other.order_type)
        )

    def __hash__(self):
        return hash((self.name, self.kind, self.order_type))

    def __repr__(self):
        return "{}({}, {}, {})".format(
            type(self).__name__,
            self.name,
            self.kind,
            "".join(t.value for t in self.order_type),
        )


class Signature(object):
    """The connectives F and G of an LE-language

    :example:
        Signature.preset("DML")
        Signature(g=["box"])
        Signature(f={"fuse": "++"}, g={"box": "+", "e": ""})
    """
    BUILTINS = {
        "dia": ("f", "+"),
        "lhd": ("f", "-"),
        "box": ("g", "+"),
        "rhd": ("g", "-"),
    }

    PRESETS = {
        "DML": ("dia", "lhd", "box", "rhd"),
        "PML": ("dia", "box"),
    }

    KEYWORDS = set(["top", "bot"])

    NAME_REGEX = re.compile(r"^[a-z][a-z0-9_]*$")

    def __init__(self, f=None, g=None):
        self.connectives = {}
        for kind, declared in (("f", f), ("g", g)):
            if not declared:
                continue

            if not isinstance(declared, dict):
                declared = {
                    name: self.BUILTINS.get(name, (kind, ""))[1]
                    for name in declared
                }

            for name, order_type in declared.items():
                self.add(Connective(name, kind, order_type))

    @classmethod
    def preset(cls, name="DML"):
        try:
            names = cls.PRESETS[name.upper()]

        except KeyError as e:
            raise SignatureError(f"Unknown signature preset {name}") from e

        return cls.builtins(*names)

    @classmethod
    def builtins(cls, *names):
        return cls(
            f=[n for n in names if cls.BUILTINS[n][0] == "f"],
            g=[n for n in names if cls.BUILTINS[n][0] == "g"],
        )

    @classmethod
    def from_dict(cls, d):
        """inverse of .to_dict(), also accepts a preset name"""
        if not d:
            return cls()

        if isinstance(d, str):
            return cls.preset(d)

        if "preset" in d:
            ret = cls.preset(d["preset"])
            for c in cls(f=d.get("f"), g=d.get("g")):
                ret.add(c)
            return ret

        return cls(
            f={k: "".join(v) for k, v in (d.get("f") or {}).items()},
            g={k: "".join(v) for k, v in (d.get("g") or {}).items()},
        )

    def to_dict(self):
        return {
            kind: {
                c.name: [t.value for t in c.order_type]
                for c in self if c.kind == kind
            }
            for kind in ("f", "g")
        }

    def add(self, connective):
        name = connective.name
        if not self.NAME_REGEX.match(name) or name in self.KEYWORDS:
            raise SignatureError(f"Invalid connective name {name!r}")

        if name in self.BUILTINS:
            kind, order_type = self.BUILTINS[name]
            if connective != Connective(name, kind, order_type):
                raise SignatureError(
                    f"Built-in {name} is fixed as {kind} with order type"
                    f" {order_type}"
                )

        current = self.connectives.get(name)
        if current is not None and current != connective:
            raise SignatureError(f"Connective {name} is declared twice")

        self.connectives[name] = connective

    def __iter__(self):
        # f connectives first, each group in declaration order
        for kind in ("f", "g"):
            for c in self.connectives.values():
                if c.kind == kind:
                    yield c

    def __len__(self):
        return len(self.connectives)

    def __contains__(self, name):
        return name in self.connectives

    def __eq__(self, other):
        return (
            isinstance(other, Signature)
            and self.connectives == other.connectives
        )

    def __repr__(self):
        return "{}({})".format(
            type(self).__name__,
            ", ".join(repr(c) for c in self),
        )

    @property
    def f_connectives(self):
        return [c for c in self if c.kind == "f"]

    @property
    def g_connectives(self):
        return [c for c in self if c.kind == "g"]

    def get(self, name):
        try:
            return self.connectives[name]

        except KeyError as e:
            raise SignatureError(f"Connective {name} is not declared") from e

    def require(self, *names):
        for name in names:
            self.get(name)


class Formula(object):
    """Base class of the LE-term AST

    every node is an immutable dataclass, str() renders the concrete syntax
    that parse_formula reads back
    """
    level = 3
    """binding strength when rendering, disjunction 1, conjunction 2, the
    rest 3"""

    @property
    def children(self):
        return ()

    def __str__(self):
        return self.format()

    def format(self, level=0):
        ret = self.render()
        if self.level < level:
            ret = f"({ret})"
        return ret

    def render(self):
        raise NotImplementedError()

    @property
    def depth(self):
        return 1 + max((c.depth for c in self.children), default=-1)

    def subformulas(self):
        """distinct subformulas in post-order, children before parents"""
        ret = []
        seen = set()
        def visit(phi):
            for c in phi.children:
                visit(c)
            if phi not in seen:
                seen.add(phi)
                ret.append(phi)
        visit(self)
        return ret

    def letters(self):
        """proposition letters in order of first occurrence"""
        ret = {}
        for phi in self.subformulas():
            if isinstance(phi, Letter):
                ret.setdefault(phi.name, None)
        return list(ret)

    def connectives(self):
        return set(
            phi.connective for phi in self.subformulas()
            if isinstance(phi, Application)
        )

    def rename(self, mapping):
        """substitute letters for letters, mapping is name -> name"""
        raise NotImplementedError()


@dataclass(frozen=True)
class Letter(Formula):
    name: str

    def render(self):
        return self.name

    def rename(self, mapping):
        return Letter(mapping.get(self.name, self.name))


@dataclass(frozen=True)
class Top(Formula):
    def render(self):
        return "top"

    def rename(self, mapping):
        return self


@dataclass(frozen=True)
class Bottom(Formula):
    def render(self):
        return "bot"

    def rename(self, mapping):
        return self


@dataclass(frozen=True)
class Conjunction(Formula):
    left: Formula
    right: Formula

    level = 2

    @property
    def children(self):
        return (self.left, self.right)

    def render(self):
        return "{} /\\ {}".format(self.left.format(2), self.right.format(3))

    def rename(self, mapping):
        return Conjunction(self.left.rename(mapping), self.right.rename(mapping))


@dataclass(frozen=True)
class Disjunction(Formula):
    left: Formula
    right: Formula

    level = 1

    @property
    def children(self):
        return (self.left, self.right)

    def render(self):
        return "{} \\/ {}".format(self.left.format(1), self.right.format(2))

    def rename(self, mapping):
        return Disjunction(self.left.rename(mapping), self.right.rename(mapping))


@dataclass(frozen=True)
class Application(Formula):
    """f(φ̄) or g(φ̄), built-in unary connectives render as prefixes"""
    connective: str
    args: tuple = ()

    @property
    def children(self):
        return self.args

    def render(self):
        if self.connective in Signature.BUILTINS and len(self.args) == 1:
            return "{} {}".format(self.connective, self.args[0].format(3))

        return "{}({})".format(
            self.connective,
            ", ".join(arg.format(0) for arg in self.args),
        )

    def rename(self, mapping):
        return Application(
            self.connective,
            tuple(arg.rename(mapping) for arg in self.args)
        )


@dataclass(frozen=True)
class Sequent(object):
    lhs: Formula
    rhs: Formula

    def __str__(self):
        return f"{self.lhs} |- {self.rhs}"

    def letters(self):
        ret = dict.fromkeys(self.lhs.letters())
        ret.update(dict.fromkeys(self.rhs.letters()))
        return list(ret)

    def connectives(self):
        return self.lhs.connectives() | self.rhs.connectives()

    def rename(self, mapping):
        return Sequent(self.lhs.rename(mapping), self.rhs.rename(mapping))


GRAMMAR = r"""
    ?start: disj

    # ∨ binds loosest, then ∧, prefix connectives bind tightest
    ?disj: conj
         | disj "\\/" conj                      -> disjunction

    ?conj: unary
         | conj "/\\" unary                     -> conjunction

    ?unary: atom
          | "box" unary                         -> box
          | "dia" unary                         -> dia
          | "lhd" unary                         -> lhd
          | "rhd" unary                         -> rhd

    ?atom: "top"                                -> top
         | "bot"                                -> bottom
         | NAME "(" [disj ("," disj)*] ")"      -> application
         | NAME                                 -> letter
         | "(" disj ")"

    NAME: /[a-z][a-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class FormulaBuilder(Transformer):
    """Turns the parse tree into Formula nodes, checking every connective
    against the signature"""
    def __init__(self, signature):
        super().__init__()
        self.signature = signature

    def check(self, name, arity, meta):
        if name not in self.signature:
            raise ParseError(
                f"Unknown connective {name}",
                line=meta.line,
                column=meta.column,
            )

        c = self.signature.get(name)
        if c.arity != arity:
            raise ParseError(
                f"Connective {name} takes {c.arity} arguments, got {arity}",
                line=meta.line,
                column=meta.column,
            )

    def top(self, children):
        return Top()

    def bottom(self, children):
        return Bottom()

    def letter(self, children):
        token = children[0]
        name = str(token)
        if name in self.signature:
            raise ParseError(
                f"Connective {name} is used as a proposition letter",
                line=token.line,
                column=token.column,
            )
        return Letter(name)

    def conjunction(self, children):
        return Conjunction(*children)

    def disjunction(self, children):
        return Disjunction(*children)

    @v_args(meta=True)
    def application(self, meta, children):
        name = str(children[0])
        args = tuple(c for c in children[1:] if c is not None)
        self.check(name, len(args), meta)
        return Application(name, args)

    def prefix(self, name, meta, children):
        self.check(name, 1, meta)
        return Application(name, tuple(children))

    @v_args(meta=True)
    def box(self, meta, children):
        return self.prefix("box", meta, children)

    @v_args(meta=True)
    def dia(self, meta, children):
        return self.prefix("dia", meta, children)

    @v_args(meta=True)
    def lhd(self, meta, children):
        return self.prefix("lhd", meta, children)

    @v_args(meta=True)
    def rhd(self, meta, children):
        return self.prefix("rhd", meta, children)


class FormulaParser(object):
    """LALR parser for the concrete formula syntax

    top bot /\\ \\/ box dia lhd rhd, letters match [a-z][a-z0-9_]*, and other
    declared connectives are applied as name(arg, ...)
    """
    _lark = None

    @classmethod
    def get_lark(cls):
        if cls._lark is None:
            cls._lark = Lark(GRAMMAR, parser="lalr", propagate_positions=True)
        return cls._lark

    def __init__(self, signature=None):
        self.signature = signature if signature is not None else Signature()

    def parse(self, text):
        if not text or not text.strip():
            raise ParseError("Empty formula", text=text)

        try:
            tree = self.get_lark().parse(text)
            return FormulaBuilder(self.signature).transform(tree)

        except VisitError as e:
            raise self.locate(e.orig_exc, text) from e

        except UnexpectedInput as e:
            raise self.locate(e, text) from e

    def locate(self, e, text):
        """convert e into a ParseError positioned in text"""
        if isinstance(e, ParseError):
            return ParseError(
                e.reason,
                text=text,
                line=e.line,
                column=e.column
            )

        if isinstance(e, UnexpectedCharacters):
            msg = f"Unexpected character {text[e.pos_in_stream]!r}"

        elif isinstance(e, UnexpectedEOF):
            msg = "Unexpected end of input"

        elif isinstance(e, UnexpectedToken):
            if e.token.type == "$END":
                msg = "Unexpected end of input"
            else:
                msg = f"Unexpected {str(e.token)!r}"

        else:
            msg = str(e)

        line = getattr(e, "line", -1)
        column = getattr(e, "column", -1)
        if line is None or line < 1 or column is None or column < 1:
            lines = text.splitlines() or [""]
            line = len(lines)
            column = len(lines[-1]) + 1

        return ParseError(msg, text=text, line=line, column=column)


def parse_formula(sig, text):
    """
    :param sig: Signature
    :param text: str, eg "box p /\\ q"
    :returns: Formula
    :raises: ParseError with the failing position
    """
    return FormulaParser(sig).parse(text)


def parse_sequent(sig, text):
    """
    :param sig: Signature
    :param text: str, eg "box p |- p"
    :returns: Sequent
    """
    parts = text.split("|-")
    if len(parts) != 2:
        if len(parts) < 2:
            raise ParseError(
                "Missing turnstile |-",
                text=text,
                column=len(text) + 1,
            )

        raise ParseError(
            "Only one turnstile |- is allowed",
            text=text,
            column=len(parts[0]) + len(parts[1]) + 3,
        )

    sides = []
    offset = 0
    for part in parts:
        try:
            sides.append(parse_formula(sig, part))

        except ParseError as e:
            raise ParseError(
                e.reason,
                text=text,
                line=e.line,
                column=e.column + (offset if e.line == 1 else 0),
            ) from e

        offset += len(part) + 2

    return Sequent(*sides)


PROPOSITIONAL_AXIOMS = (
    "p |- p",
    "bot |- p",
    "p |- top",
    "p |- p \\/ q",
    "q |- p \\/ q",
    "p /\\ q |- p",
    "p /\\ q |- q",
)

MODAL_AXIOMS = {
    "box": ("top |- box top", "box p /\\ box q |- box (p /\\ q)"),
    "dia": ("dia bot |- bot", "dia (p \\/ q) |- dia p \\/ dia q"),
    "rhd": ("top |- rhd bot", "rhd p /\\ rhd q |- rhd (p \\/ q)"),
    "lhd": ("lhd top |- bot", "lhd (p /\\ q) |- lhd p \\/ lhd q"),
}

DISTRIBUTIVE_LAWS = (
    "p /\\ (q \\/ r) |- (p /\\ q) \\/ (p /\\ r)",
    "(p \\/ q) /\\ (p \\/ r) |- p \\/ (q /\\ r)",
)


def axioms_of_base_logic(sig):
    """The axioms of the basic non-distributive modal logic restricted to the
    built-ins sig declares

    :returns: list of Sequent, propositional axioms first
    """
    texts = list(PROPOSITIONAL_AXIOMS)
    for name in ("box", "dia", "rhd", "lhd"):
        if name in sig:
            texts.extend(MODAL_AXIOMS[name])
    return [parse_sequent(sig, text) for text in texts]


def prop_vars(phi):
    return phi.letters()


def subformulas(phi):
    return phi.subformulas()
