# -*- coding: utf-8 -*-


class Error(Exception):
    """error wrapper"""
    def __init__(self, e, exc_info=None):
        self.e = e
        self.exc_info = exc_info
        super().__init__(str(e))


class InputError(Error):
    """Raised when input doesn't validate: unknown identifiers, malformed
    files, non-stable valuations, invalid concept indices"""
    pass


class ParseError(InputError):
    """Raised for formula and sequent text that can't be parsed

    :param e: str, what went wrong
    :param text: str, the text that was being parsed
    :param line: int, 1-based line of the failure
    :param column: int, 1-based column of the failure
    """
    def __init__(self, e, text="", line=1, column=1):
        self.reason = e
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"{e} at line {line}, column {column}")

    def caret(self):
        """returns the offending line with a ^ under the failing column"""
        lines = self.text.splitlines() or [""]
        line = lines[min(max(self.line, 1), len(lines)) - 1]
        return "{}\n{}^".format(line, " " * max(self.column - 1, 0))


class SignatureError(InputError):
    """A connective is missing from a signature or clashes with a built-in"""
    pass


class CompatibilityError(Error):
    """A frame relation has a point section that isn't Galois-stable

    :param e: str
    :param report: Report, the compatibility report listing every failing
        section
    """
    def __init__(self, e, report=None):
        self.report = report
        super().__init__(e)


class CapError(Error):
    """A resource cap was exceeded

    :param name: str, the cap's config name (eg, MAX_CARRIER)
    :param limit: int, the configured limit
    :param required: int, what the request needed
    """
    def __init__(self, name, limit, required):
        self.name = name
        self.limit = limit
        self.required = required
        super().__init__(
            f"{name} cap exceeded: required {required}, limit {limit}"
        )


class PreconditionError(Error):
    """An operation's precondition on its input doesn't hold"""
    pass
