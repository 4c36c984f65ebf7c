# -*- coding: utf-8 -*-

from .config import (
    DsnSourceConfig,
    SourceConfig,
    environ,
)
from .exception import (
    Error,
    InputError,
    ParseError,
    SignatureError,
    CompatibilityError,
    CapError,
    PreconditionError,
)
from .lattice import Polarity, ConceptLattice
from .representation import FiniteLattice, ReflexiveGraph
from .syntax import Signature, parse_formula, parse_sequent
from .frame import (
    PolarityFrame,
    GraphFrame,
    Valuation,
    frame_from_dict,
)
from .algebra import FiniteAlgebra, frame_from_algebra
from .correspondence import (
    ValidityQuery,
    countermodel_search,
    check_property,
)
from .source import (
    get_source,
    set_source,
    get_sources,
    configure,
    configure_environ,
    find_environ,
)


__version__ = "0.1.0"

