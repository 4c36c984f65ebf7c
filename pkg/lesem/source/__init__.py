# -*- coding: utf-8 -*-

import dsnparse

from ..config import DsnSourceConfig
from .base import Source, SourceABC


sources = {}
"""holds all configured sources"""


def get_sources():
    global sources
    if not sources:
        configure_environ()
    return sources


def get_source(source_name=""):
    """get the configured source that corresponds to source_name"""
    global sources
    if not sources:
        configure_environ()
    return sources[source_name]


def set_source(source, source_name=""):
    """bind a .source.Source() instance to source_name"""
    global sources
    sources[source_name] = source


def find_environ(dsn_env_name="LESEM_DSN", config_class=DsnSourceConfig):
    """Returns source configs found in the environment

    LESEM_DSN and LESEM_DSN_N (N is 1 through infinity, in order) are taken
    to be source dsns, eg LESEM_DSN_1=json:///data/frame.json#frame

    :param dsn_env_name: str
    :param config_class: SourceConfig
    :returns: generator<config_class>
    """
    return dsnparse.parse_environs(dsn_env_name, parse_class=config_class)


def configure_environ():
    """auto hook to configure the environment"""
    for c in find_environ():
        set_source(c.source, c.name)


def configure(dsn, source_name=None, config_class=DsnSourceConfig):
    """configure a source from a dsn or a plain file path, then you can get
    it back with get_source()

    :param dsn: str, eg "/tmp/plays.csv", "json:///tmp/frame.json#frame" or
        "example://plays"
    :param source_name: str, overrides the dsn's fragment name
    :returns: Source
    """
    c = config_class(dsn)
    if source_name is not None:
        c.name = source_name
    source = c.source
    set_source(source, c.name)
    return source
