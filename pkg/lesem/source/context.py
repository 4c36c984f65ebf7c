# -*- coding: utf-8 -*-
import csv

from ..exception import InputError
from .jsonfile import JsonSource


class ContextSource(JsonSource):
    """A formal context stored as a CSV cross table

    the header row lists the attributes after one leading cell, every other
    row starts with an object followed by one cell per attribute, a cell of
    1, x or X marks incidence and an empty cell or 0 marks its absence

    :example:
        ,x,y,z
        a,,,1
        b,1,,
        c,1,1,
    """
    MARKS = set(["1", "x", "X"])

    BLANKS = set(["", "0"])

    def _load(self, path, **kwargs):
        delimiter = kwargs.get("delimiter", ",")
        with path.open("r", encoding="utf-8", newline="") as fp:
            rows = [
                row for row in csv.reader(fp, delimiter=delimiter)
                if any(cell.strip() for cell in row)
            ]

        if not rows:
            return {"kind": "polarity", "objects": [], "attributes": []}

        attributes = [cell.strip() for cell in rows[0][1:]]
        objects = []
        incidence = []
        for lineno, row in enumerate(rows[1:], 2):
            if len(row) != len(attributes) + 1:
                raise InputError(
                    "Row {} has {} cells, expected {}".format(
                        lineno,
                        len(row),
                        len(attributes) + 1,
                    )
                )

            a = row[0].strip()
            objects.append(a)
            for x, cell in zip(attributes, row[1:]):
                cell = cell.strip()
                if cell in self.MARKS:
                    incidence.append([a, x])

                elif cell not in self.BLANKS:
                    raise InputError(
                        f"Row {lineno}, column {x!r} has unknown mark {cell!r}"
                    )

        return {
            "kind": "polarity",
            "objects": objects,
            "attributes": attributes,
            "incidence": incidence,
        }

    def _save(self, path, d, **kwargs):
        if d.get("kind", "polarity") != "polarity":
            raise InputError("Only polarity frames can be written as a context")

        incidence = set(tuple(pair) for pair in d.get("incidence", []))
        with path.open("w", encoding="utf-8", newline="") as fp:
            writer = csv.writer(fp, delimiter=kwargs.get("delimiter", ","))
            writer.writerow([""] + list(d["attributes"]))
            for a in d["objects"]:
                writer.writerow([a] + [
                    "1" if (a, x) in incidence else ""
                    for x in d["attributes"]
                ])
