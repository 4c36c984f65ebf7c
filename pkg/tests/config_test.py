# -*- coding: utf-8 -*-

from lesem.config import DsnSourceConfig, SourceConfig, environ
from lesem.exception import InputError
from lesem.source.context import ContextSource

from . import TestCase


class SourceConfigTest(TestCase):
    def test_options(self):
        c = SourceConfig(path="/tmp/frame.json", delimiter=";")
        self.assertEqual("/tmp/frame.json", c.path)
        self.assertEqual(";", c.delimiter)
        self.assertEqual(2, c.options["indent"])
        self.assertEqual(None, c.get_option("foo"))

        c = SourceConfig()
        self.assertEqual(",", c.delimiter)

    def test_normalize_scheme(self):
        self.assertEqual(
            "lesem.source.jsonfile:JsonSource",
            SourceConfig.normalize_scheme("JSON"),
        )
        self.assertEqual(
            "lesem.source.context:ContextSource",
            SourceConfig.normalize_scheme("context"),
        )
        self.assertEqual(
            "path.to.Source",
            SourceConfig.normalize_scheme("path.to.Source"),
        )

    def test_source(self):
        c = SourceConfig(
            source_name="lesem.source.context:ContextSource",
            path="plays.csv",
        )
        self.assertTrue(isinstance(c.source, ContextSource))
        self.assertEqual("plays.csv", c.source.path)


class DsnSourceConfigTest(TestCase):
    def test_dsn(self):
        tests = [
            (
                "json:///tmp/frame.json",
                dict(
                    source_name="lesem.source.jsonfile:JsonSource",
                    path="/tmp/frame.json",
                    name="",
                ),
            ),
            (
                "frame:///tmp/frame.json?indent=4#out",
                dict(
                    source_name="lesem.source.jsonfile:JsonSource",
                    path="/tmp/frame.json",
                    name="out",
                    options={"indent": 4},
                ),
            ),
            (
                "csv:///tmp/plays.csv?delimiter=|",
                dict(
                    source_name="lesem.source.context:ContextSource",
                    path="/tmp/plays.csv",
                    options={"delimiter": "|"},
                ),
            ),
            (
                "example://plays",
                dict(
                    source_name="lesem.source.bundled:BundledSource",
                    path="plays",
                ),
            ),
            (
                "/tmp/plays.csv",
                dict(
                    source_name="lesem.source.context:ContextSource",
                    path="/tmp/plays.csv",
                    name="",
                ),
            ),
            (
                "frame.json",
                dict(
                    source_name="lesem.source.jsonfile:JsonSource",
                    path="frame.json",
                ),
            ),
        ]

        for t in tests:
            c = DsnSourceConfig(t[0])
            for k, v in t[1].items():
                if isinstance(v, dict):
                    for vk, vv in v.items():
                        self.assertEqual(vv, getattr(c, k).get(vk), k)

                else:
                    self.assertEqual(v, getattr(c, k), k)

    def test_no_extension(self):
        with self.assertRaises(InputError):
            DsnSourceConfig("/tmp/frame")


class EnvironTest(TestCase):
    def test_defaults(self):
        self.assertEqual(22, environ.MAX_CARRIER)
        self.assertEqual(14, environ.MAX_LATTICE)
        self.assertEqual(10**6, environ.SEARCH_CAP)
        self.assertEqual(42, environ.SEED)
