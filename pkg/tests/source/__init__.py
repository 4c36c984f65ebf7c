# -*- coding: utf-8 -*-

from lesem.config import DsnSourceConfig

from .. import TestCase, testdata


class SourceTestCase(TestCase):
    def get_source(self, dsn):
        return DsnSourceConfig(dsn).source

    def get_path(self, ext=".json"):
        """a fresh writable file path"""
        return testdata.create_file(path=f"{testdata.get_ascii(8)}{ext}", data="")
