"""Localisations of finitely presented categories with denominators."""

import json

from ._loccat import (
    Category,
    LoccatError,
    ParseError,
    PreconditionError,
    TheoremViolation,
    UndecidedError,
    UsageError,
    run_cli,
)
from ._loccat import load_category as _load_category
from ._loccat import Functor as _Functor

__all__ = [
    "Category",
    "Functor",
    "LoccatError",
    "ParseError",
    "PreconditionError",
    "TheoremViolation",
    "UndecidedError",
    "UsageError",
    "load_category",
    "load_functor",
    "run_cli",
]


class Functor:
    """A functor file with both categories. Reports are returned as dicts."""

    def __init__(self, path, profile=None):
        self._f = _Functor(str(path), profile)

    @property
    def source(self):
        return self._f.source

    @property
    def target(self):
        return self._f.target

    def check(self, which):
        return json.loads(self._f.check(which))

    def verify_approximation(self, choice=None, alternative=None):
        return json.loads(
            self._f.verify_approximation(
                None if choice is None else str(choice),
                None if alternative is None else str(alternative),
            )
        )


def load_category(path, profile=None):
    return _load_category(str(path), profile)


def load_functor(path, profile=None):
    return Functor(path, profile)
