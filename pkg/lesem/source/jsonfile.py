# -*- coding: utf-8 -*-
import json

from .base import Source


class JsonSource(Source):
    """Frames and valuations stored as JSON files

    frame files hold the dict PolarityFrame.to_dict() or GraphFrame.to_dict()
    writes, valuation files map each letter to {"extent": [...]} or
    {"intent": [...]}
    """
    def read_json(self, path):
        with path.open("r", encoding="utf-8") as fp:
            return json.load(fp)

    def write_json(self, path, d, indent=2):
        with path.open("w", encoding="utf-8") as fp:
            json.dump(d, fp, indent=int(indent), ensure_ascii=False)
            fp.write("\n")

    def _load(self, path, **kwargs):
        d = self.read_json(path)
        if not isinstance(d, dict):
            raise ValueError(f"{path} does not hold a JSON object")
        return d

    def _save(self, path, d, **kwargs):
        self.write_json(path, d, kwargs.get("indent", 2))

    def _load_valuation(self, path, **kwargs):
        return self.read_json(path)

    def _save_valuation(self, path, d, **kwargs):
        self.write_json(path, d, kwargs.get("indent", 2))
