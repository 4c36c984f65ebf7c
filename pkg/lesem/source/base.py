# -*- coding: utf-8 -*-
import logging

from datatypes import LogMixin, Filepath

from ..exception import Error, InputError
from ..frame import Valuation, frame_from_dict


logger = logging.getLogger(__name__)


class SourceABC(LogMixin):
    """This abstract base class contains all the methods a child source class
    needs to implement

    Child classes should extend Source (which extends this class), Source
    holds the public API, these hooks are broken out so it's easy to see
    everything a new file format has to provide
    """
    def _load(self, path, **kwargs):
        """read path into a frame dict, the same shape PolarityFrame.to_dict()
        and GraphFrame.to_dict() produce

        :returns: dict
        """
        raise NotImplementedError()

    def _save(self, path, d, **kwargs):
        """write the frame dict d to path"""
        raise NotImplementedError()

    def _load_valuation(self, path, **kwargs):
        """
        :returns: dict, letter -> {"extent": [...]} or {"intent": [...]}
        """
        raise NotImplementedError()

    def _save_valuation(self, path, d, **kwargs):
        raise NotImplementedError()


class Source(SourceABC):
    """base class for reading and writing frames and valuations"""

    config = None
    """a config.SourceConfig instance"""

    def __init__(self, config=None):
        self.config = config

    @property
    def path(self):
        return self.config.path if self.config else None

    def filepath(self, path=None):
        path = path or self.path
        if not path:
            raise InputError(f"{type(self).__name__} has no path")
        return Filepath(path)

    def load(self, path=None):
        """read the raw frame dict"""
        try:
            d = self._load(self.filepath(path), **self.config.options)
            self.log("Loaded {} from {}", d.get("kind", "polarity"), path or self.path)
            return d

        except Exception as e:
            self.raise_error(e)

    def frame(self, path=None, unchecked=False):
        """read a frame

        :param unchecked: bool, skip the compatibility check
        :returns: PolarityFrame or GraphFrame
        :raises: InputError, CompatibilityError
        """
        return frame_from_dict(self.load(path), unchecked=unchecked)

    def polarity(self, path=None):
        return self.frame(path, unchecked=True).polarity

    def save(self, frame, path=None):
        try:
            self._save(self.filepath(path), frame.to_dict(), **self.config.options)
            self.log("Saved {} to {}", frame, path or self.path)

        except Exception as e:
            self.raise_error(e)

    def valuation(self, lattice, path=None):
        """read a valuation into lattice

        :param lattice: ConceptLattice
        :returns: Valuation
        :raises: InputError when a letter's set isn't Galois-stable
        """
        try:
            d = self._load_valuation(self.filepath(path), **self.config.options)

        except Exception as e:
            self.raise_error(e)

        if not isinstance(d, dict):
            raise InputError("A valuation must be a JSON object")
        return Valuation.from_dict(lattice, d)

    def save_valuation(self, valuation, path=None):
        try:
            self._save_valuation(
                self.filepath(path),
                valuation.to_dict(),
                **self.config.options
            )

        except Exception as e:
            self.raise_error(e)

    def raise_error(self, e):
        """this is just a wrapper to make the passed in exception an
        InputError"""
        if isinstance(e, Error):
            raise e

        else:
            raise InputError(e) from e
