from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Optional, Union

if TYPE_CHECKING:
    from twolift._certificate import Certificate


class TwoliftError(ValueError):
    """Base class for errors raised by twolift operations."""


class BudgetExceededError(TwoliftError):
    """An input is larger than the configured enumeration or search budget."""


class NotRealRootedError(TwoliftError):
    """A root operation that requires a real-rooted polynomial got another one."""


class CertificationError(TwoliftError):
    """A spectral certificate failed where the theory says it cannot.

    This signals a bug in the implementation, never a counterexample.
    """

    def __init__(self, message: str, certificate: Optional[Certificate] = None):
        super().__init__(message)
        self.certificate = certificate


class FormatError(TwoliftError):
    """A graph, signing or polynomial file could not be parsed."""

    def __init__(
        self, message: str, *, source: Union[str, Path] = "<string>", line: int = 0
    ):
        self.source = str(source)
        self.line = line
        location = f"{self.source}:{line}" if line else self.source
        super().__init__(f"{location}: {message}")
