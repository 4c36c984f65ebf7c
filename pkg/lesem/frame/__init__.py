# -*- coding: utf-8 -*-

from ..exception import InputError
from .base import (
    ATTRIBUTES,
    OBJECTS,
    ConceptAlgebra,
    Frame,
    Relation,
    Valuation,
    relation_kinds,
    section_0,
    section_i,
)
from .polarity import PolarityFrame
from .graph import GraphFrame, edge_relation, op0, op1, opi


FRAME_CLASSES = {
    PolarityFrame.kind: PolarityFrame,
    GraphFrame.kind: GraphFrame,
}


def frame_class(kind):
    """return the frame class that reads the JSON "kind" value"""
    try:
        return FRAME_CLASSES[kind]

    except KeyError as e:
        raise InputError(f"Unknown frame kind {kind!r}") from e


def frame_from_dict(d, unchecked=False):
    return frame_class(d.get("kind", "polarity")).from_dict(d, unchecked=unchecked)
