# -*- coding: utf-8 -*-
import os

from datatypes import Dirpath

from ..exception import InputError
from .jsonfile import JsonSource


class BundledSource(JsonSource):
    """The worked examples shipped in lesem/data

    the path is the example name, its frame lives in <name>.json and its
    valuation in <name>.valuation.json

    :example:
        s = BundledSource(DsnSourceConfig("example://plays"))
        frame = s.frame()
        v = s.valuation(frame.lattice)
    """
    @classmethod
    def data_dir(cls):
        return Dirpath(os.path.dirname(os.path.dirname(__file__)), "data")

    @classmethod
    def names(cls):
        return sorted(
            fp.fileroot for fp in cls.data_dir().files()
            if str(fp).endswith(".json")
            and not str(fp).endswith(".valuation.json")
        )

    def filepath(self, path=None):
        name = path or self.path
        if name not in self.names():
            raise InputError(f"Unknown example {name!r}")
        return self.data_dir().child_file(f"{name}.json")

    def _load_valuation(self, path, **kwargs):
        vpath = self.data_dir().child_file(f"{path.fileroot}.valuation.json")
        return self.read_json(vpath)

    def _save(self, path, d, **kwargs):
        raise InputError("Bundled examples are read only")

    def _save_valuation(self, path, d, **kwargs):
        raise InputError("Bundled examples are read only")
