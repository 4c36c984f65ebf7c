# -*- coding: utf-8 -*-
import json


class Report(object):
    """The result of a checker: a verdict plus everything that went wrong

    a report is truthy iff it passed

    :example:
        r = Report("compatibility")
        r.add("section is not Galois-stable", relation="box", points=["a"])
        bool(r) # False
    """
    def __init__(self, name, ok=True, violations=None, witness=None, **details):
        self.name = name
        self.ok = ok
        self.violations = list(violations or [])
        if self.violations:
            self.ok = False

        self.witness = witness
        """dict, set when a false verdict has a concrete counterexample"""

        self.details = details
        """dict, any other checker specific values (eg, the sub reports)"""

    def add(self, reason, **kwargs):
        """record a violation, this makes the report fail"""
        violation = {"reason": reason}
        violation.update(kwargs)
        self.violations.append(violation)
        self.ok = False
        return violation

    def merge(self, *reports):
        """fold other reports into this one, it passes iff they all pass"""
        for r in reports:
            self.ok = self.ok and r.ok
            for violation in r.violations:
                violation = dict(violation)
                violation.setdefault("check", r.name)
                self.violations.append(violation)
            if r.witness and not self.witness:
                self.witness = r.witness
        return self

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "{}({}, ok={}, violations={})".format(
            type(self).__name__,
            self.name,
            self.ok,
            len(self.violations),
        )

    def to_dict(self):
        d = {
            "name": self.name,
            "ok": self.ok,
            "violations": self.violations,
        }
        if self.witness is not None:
            d["witness"] = self.witness

        for k, v in self.details.items():
            if isinstance(v, Report):
                v = v.to_dict()

            elif isinstance(v, (list, tuple)):
                v = [r.to_dict() if isinstance(r, Report) else r for r in v]

            d[k] = v
        return d

    def to_json(self, indent=2):
        return json.dumps(
            self.to_dict(),
            indent=indent,
            ensure_ascii=False,
            default=str,
        )
