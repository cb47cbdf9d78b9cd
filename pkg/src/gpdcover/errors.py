"""Exception hierarchy.

Every error carries a ``witness`` attribute holding the offending ids so
callers (and the CLI) can report it without parsing the message.
"""

from __future__ import annotations

from typing import Any


class GroupoidError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


# --- construction / validation of groupoids ---------------------------------

class ValidationError(GroupoidError):
    pass


class DuplicateId(ValidationError):
    pass


class UnknownId(ValidationError):
    pass


class UnknownObject(UnknownId):
    pass


class MissingComposite(ValidationError):
    pass


class IllTypedComposite(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NoInverse(ValidationError):
    pass


class EmptySet(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


# --- functors ----------------------------------------------------------------

class DomainMismatch(GroupoidError):
    pass


class SignatureMismatch(GroupoidError):
    pass


class DomainNotProduct(GroupoidError):
    pass


class NotAFunctor(GroupoidError):
    pass


# --- coverings ---------------------------------------------------------------

class NotCovering(GroupoidError):
    """``witness`` is ``(object, kind)`` with kind ``"injective"`` or ``"surjective"``."""

    def __init__(self, message: str, obj: str, kind: str, sizes: tuple[int, int]):
        super().__init__(message, witness=(obj, kind))
        self.object = obj
        self.kind = kind
        self.sizes = sizes


class NotConnected(GroupoidError):
    pass


class BasePointMismatch(GroupoidError):
    pass


class CriterionFailed(GroupoidError):
    """The image of a loop at the base point is outside the characteristic group."""

    def __init__(self, message: str, loop: str, image: str, characteristic: tuple[str, ...]):
        super().__init__(message, witness=loop)
        self.loop = loop
        self.image = image
        self.characteristic = characteristic


class CharGroupNotContained(GroupoidError):
    pass


class NotSimplyConnected(GroupoidError):
    pass


# --- homotopy / categorical groups ------------------------------------------

class InvalidNatIso(GroupoidError):
    pass


class DomainNotCxJ(GroupoidError):
    pass


class AxiomFailed(GroupoidError):
    def __init__(self, message: str, which: int, detail: str):
        super().__init__(message, witness=which)
        self.which = which
        self.detail = detail


# --- documents ---------------------------------------------------------------

class ParseError(GroupoidError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        loc = f"{line}:{column}: " if line else ""
        super().__init__(f"{loc}{message}")
        self.line = line
        self.column = column


class IoError(GroupoidError):
    pass
