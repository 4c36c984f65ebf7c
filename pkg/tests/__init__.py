# -*- coding: utf-8 -*-
import json

import testdata

from lesem.frame import GraphFrame, PolarityFrame, Valuation
from lesem.generate import Generator
from lesem.lattice import Polarity
from lesem.representation import ReflexiveGraph
from lesem.syntax import Signature, parse_formula, parse_sequent


testdata.basic_logging(
    levels={
        "datatypes": "WARNING",
        "lark": "WARNING",
    }
)


PLAYS_INCIDENCE = [("a", "z"), ("b", "x"), ("c", "x"), ("c", "y")]

WITNESS_EDGES = [("u", "v"), ("v", "z")]


class TestCase(testdata.TestCase):

    seed = 42

    def get_generator(self, seed=None):
        return Generator(self.seed if seed is None else seed)

    def get_polarity(self, objects="abc", attributes="xyz", incidence=None):
        return Polarity(
            list(objects),
            list(attributes),
            PLAYS_INCIDENCE if incidence is None else incidence,
        )

    def get_graph(self, nodes="uvz", edges=None):
        return ReflexiveGraph(
            list(nodes),
            WITNESS_EDGES if edges is None else edges,
            normalize=True,
        )

    def get_craig_graph(self):
        """every edge except (u, z)"""
        return self.get_graph(edges=[
            (a, b) for a in "uvz" for b in "uvz" if (a, b) != ("u", "z")
        ])

    def get_signature(self, *names):
        if not names:
            return Signature()
        return Signature.builtins(*names)

    def get_polarity_frame(self, polarity=None, signature=None, **relations):
        return PolarityFrame(
            polarity or self.get_polarity(),
            signature if signature is not None else self.get_signature(*relations),
            relations,
        )

    def get_graph_frame(self, graph=None, signature=None, **relations):
        return GraphFrame(
            graph or self.get_graph(),
            signature if signature is not None else self.get_signature(*relations),
            relations,
        )

    def get_plays_valuation(self, frame=None):
        lattice = (frame or self.get_polarity_frame()).lattice
        return Valuation.from_dict(lattice, {
            "r": {"extent": ["a"]},
            "d": {"extent": ["b", "c"]},
            "h": {"extent": ["c"]},
        })

    def get_witness_valuation(self, frame=None):
        lattice = (frame or self.get_graph_frame()).lattice
        return Valuation.from_dict(lattice, {
            "p": {"extent": ["z"]},
            "q": {"extent": ["u"]},
        })

    def get_formula(self, text, signature=None):
        return parse_formula(signature or Signature.preset("DML"), text)

    def get_sequent(self, text, signature=None):
        return parse_sequent(signature or Signature.preset("DML"), text)

    def create_json(self, d, path=""):
        path = path or f"{testdata.get_ascii(8)}.json"
        return testdata.create_file(path=path, data=json.dumps(d))
