# -*- coding: utf-8 -*-
import os

import dsnparse
from datatypes import ReflectName
from datatypes.config import Environ

from .exception import InputError


class SourceConfig(object):
    """The base source configuration, you will most likely always use
    DsnSourceConfig
    """
    name = ""
    """str, the name of this source, handy when you have more than one
    configured source"""

    path = None
    """str, the file path (or bundled example name) to read from"""

    source_name = ""
    """str, full Source class path -- the class that knows how to read and
    write this location"""

    options = None
    """dict, any other source specific options (eg, delimiter)"""

    @property
    def source_class(self):
        return ReflectName(self.source_name).get_class()

    @property
    def source(self):
        source_class = self.source_class
        return source_class(self)

    @property
    def delimiter(self):
        return self.options.get("delimiter", ",")

    def __init__(self, **kwargs):
        """set all the values by passing them into this constructor, any
        unrecognized kwargs get put into .options

        :Example:
            c = SourceConfig(
                source_name="lesem.source.jsonfile:JsonSource",
                path="/tmp/frame.json",
                indent=2,
            )

            print(c.options) # {"indent": 2}
        """
        self.options = kwargs.pop('options', {})

        for key, val in kwargs.items():
            if hasattr(self, key):
                setattr(self, key, val)

            else:
                self.options[key] = val

        self.options.setdefault("indent", 2)

    def get_option(self, key, default_val=None):
        return self.options.get(key, default_val)

    @classmethod
    def normalize_scheme(cls, v):
        ret = v
        d = {
            "lesem.source.jsonfile:JsonSource": set(["json", "frame"]),
            "lesem.source.context:ContextSource": set(["csv", "context"]),
            "lesem.source.bundled:BundledSource": set([
                "example",
                "examples",
                "bundled",
            ]),
        }

        kv = v.lower()
        for source_name, vals in d.items():
            if kv in vals:
                ret = source_name
                break

        return ret


class DsnSourceConfig(SourceConfig):
    """
    Create a source config from a dsn in the form

        SourceName://host/path?opt1=val1#name

    or from a plain filesystem path, in which case the scheme is inferred from
    the file extension

    :example:
        DsnSourceConfig("json:///tmp/frame.json")
        DsnSourceConfig("csv:///tmp/plays.csv?delimiter=;")
        DsnSourceConfig("example://plays")
        DsnSourceConfig("/tmp/frame.json")
    """
    def __init__(self, dsn):
        self.dsn = dsn
        d = self.parse(dsn)
        super().__init__(**d)

    def parse(self, dsn):
        if "://" not in dsn:
            return self.parse_path(dsn)

        d = {'options': {}}
        parser = dsnparse.parse(dsn)
        p = parser.fields

        d['source_name'] = self.normalize_scheme(p["scheme"])
        d['options'] = p["query_params"] or {}
        d['name'] = p["fragment"] or ""

        # bundled examples are addressed by host (example://plays), files by
        # path (json:///tmp/frame.json)
        path = p["path"] or ""
        if p["hostname"]:
            path = os.path.join(p["hostname"], path.lstrip("/")).rstrip("/")
        d["path"] = path
        return d

    def parse_path(self, path):
        ext = os.path.splitext(path)[1].lstrip(".")
        if not ext:
            raise InputError(f"Cannot infer a source for {path}")

        return {
            "source_name": self.normalize_scheme(ext),
            "path": path,
            "name": "",
            "options": {},
        }


environ = Environ("LESEM_") # Load any LESEM_* environment variables

environ.setdefault('MAX_CARRIER', 22, type=int)
"""Concept enumeration closes all subsets of the smaller carrier, so
min(|A|, |X|) can't exceed this"""

environ.setdefault('MAX_CONCEPTS', 2**20, type=int)
"""The most concepts a single concept lattice may hold"""

environ.setdefault('MAX_LATTICE', 14, type=int)
"""Filters and ideals are enumerated over all subsets, so lattices handed to
lattice_graph can't be bigger than this"""

environ.setdefault('MAX_NODES', 20, type=int)
"""The most nodes a graph can have and still build its lattice"""

environ.setdefault('MAX_AUDIT', 8, type=int)
"""Clause audits and other pointwise checks refuse carriers bigger than
this"""

environ.setdefault('VAR_BUDGET', 2, type=int)
"""How many proposition letters countermodel search assigns by default"""

environ.setdefault('SEARCH_CAP', 10**6, type=int)
"""The most valuations (|lattice|^k) a validity check will enumerate"""

environ.setdefault('SEARCH_BUDGET', 5000, type=int)
"""How many candidate frames countermodel search tries by default"""

environ.setdefault('SEED', 42, type=int)
"""Default seed for generated candidate streams"""
