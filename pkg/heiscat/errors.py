#!/usr/bin/env python3
"""
Module containing the exception hierarchy of the package

Every error raised on purpose by heiscat derives from HeisError, so the
command line front end can map them onto exit codes in one place.
"""


class HeisError(Exception):
    """
    Base class of all the package errors
    """


class ParseError(HeisError, ValueError):
    """
    Syntax error in a diagram term, polynomial or Sym expression
    """
    def __init__(self, msg, text="", column=0):
        self.text = text
        self.column = column
        super().__init__("{} (column {}): {!r}".format(msg, column, text))


class TermTypeError(HeisError, ValueError):
    """
    A slice that does not fit the running object word

    The attribute index holds the position of the first ill-typed slice,
    or -1 when the mismatch is between two whole terms.
    """
    def __init__(self, msg, index=-1):
        self.index = index
        super().__init__(msg)


class ResourceCapError(HeisError, RuntimeError):
    """
    A configured guardrail (steps, states, dots, degree) was exceeded
    """
    def __init__(self, cap, limit):
        self.cap = cap
        self.limit = limit
        super().__init__("Resource cap exceeded: {} > {}".format(cap, limit))


class SeriesOrderError(HeisError, ValueError):
    """
    A truncated series is too short for the requested specialization
    """


class SingularMatrixError(HeisError, ArithmeticError):
    """
    A matrix that must be invertible turned out singular
    """


class SearchExhaustedError(ResourceCapError):
    """
    The flip search visited every reachable diagram without reaching its goal

    limit holds the number of diagrams visited.
    """
    def __init__(self, limit):
        self.cap = "flip states"
        self.limit = limit
        super(ResourceCapError, self).__init__(
            "Flip search exhausted after {} states".format(limit))
