# -*- coding: utf-8 -*-
from collections.abc import Sequence

from .exception import InputError


def iter_bits(mask):
    """yields the indexes of the set bits of mask, lowest first"""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def is_subset(mask1, mask2):
    return (mask1 & ~mask2) == 0


class Carrier(Sequence):
    """A finite ordered set of unique point identifiers

    subsets of the carrier are plain ints used as bit vectors, bit i is set
    when the i-th declared identifier is a member, so set algebra is just
    &, | and ~ masked with .full

    :example:
        c = Carrier(["a", "b", "c"], "object")
        m = c.mask(["a", "c"]) # 0b101
        c.members(m) # ("a", "c")
    """
    def __init__(self, identifiers=None, kind="point"):
        self.kind = kind
        self.identifiers = tuple(identifiers or ())
        self._index = {}
        for i, identifier in enumerate(self.identifiers):
            if identifier in self._index:
                raise InputError(
                    f"Duplicate {self.kind} identifier {identifier!r}"
                )
            self._index[identifier] = i

        self.full = (1 << len(self.identifiers)) - 1

    def __len__(self):
        return len(self.identifiers)

    def __getitem__(self, i):
        return self.identifiers[i]

    def __iter__(self):
        return iter(self.identifiers)

    def __contains__(self, identifier):
        try:
            return identifier in self._index

        except TypeError:
            return False

    def __eq__(self, other):
        return (
            isinstance(other, Carrier)
            and self.identifiers == other.identifiers
        )

    def __hash__(self):
        return hash(self.identifiers)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.identifiers)!r})"

    def index(self, identifier):
        try:
            return self._index[identifier]

        except (KeyError, TypeError) as e:
            raise InputError(
                f"Unknown {self.kind} {identifier!r}"
            ) from e

    def bit(self, identifier):
        return 1 << self.index(identifier)

    def mask(self, identifiers):
        """convert an iterable of identifiers to a bit vector"""
        ret = 0
        for identifier in identifiers:
            ret |= self.bit(identifier)
        return ret

    def members(self, mask):
        """convert a bit vector back to identifiers in carrier order"""
        return tuple(self.identifiers[i] for i in iter_bits(mask & self.full))

    def complement(self, mask):
        return self.full & ~mask

    def format(self, mask):
        """compact rendering, single character identifiers are run together
        ("bc") and anything else is comma separated ("b1,c1")"""
        names = [str(m) for m in self.members(mask)]
        if all(len(n) == 1 for n in names):
            return "".join(names)
        return ",".join(names)
