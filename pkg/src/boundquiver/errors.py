"""Exception types shared across the package."""

from __future__ import annotations


class InvalidRelation(ValueError):
    """A relation is not a composable path of length at least 2."""


class InfiniteDimensional(ValueError):
    """Path enumeration exceeded the configured basis bound."""


class RelationViolation(ValueError):
    """A representation's arrow matrices do not satisfy the algebra's relations."""


class InconclusiveIsomorphism(RuntimeError):
    """Randomized search found no isomorphism although one may exist."""


class InconclusiveDecomposition(RuntimeError):
    """Randomized search could neither split a module nor certify it indecomposable."""


class DSLError(ValueError):
    """Syntax or semantic error in algebra or module-expression input."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
