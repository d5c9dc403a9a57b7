"""Exception hierarchy shared by every pvtopo module."""

from __future__ import annotations


class PVTopoError(Exception):
    """Base class for all library errors."""


class SemanticError(PVTopoError):
    """Input parsed but is not meaningful (cycles, unknown names, ...)."""


class CyclicOrder(SemanticError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("precedence constraints form a cycle through " + ", ".join(map(str, self.cycle)))


class DuplicateVertexInSimplex(SemanticError):
    def __init__(self, simplex):
        self.simplex = tuple(simplex)
        super().__init__(f"simplex {self.simplex!r} repeats a vertex")


class UnknownVertex(SemanticError, KeyError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")

    def __str__(self) -> str:
        return self.args[0]


class PreconditionViolated(PVTopoError, ValueError):
    pass


class IndexOutOfRange(PVTopoError, IndexError):
    pass


class ParseError(PVTopoError):
    """An error tied to a position in program text."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class ProgramSyntaxError(ParseError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.expected = tuple(expected)
        if self.expected:
            message = f"{message} (expected {' or '.join(self.expected)})"
        super().__init__(message, line, column)


class ProgramSemanticError(ParseError, SemanticError):
    pass


class UndeclaredSemaphore(ProgramSemanticError):
    pass


class DuplicateName(ProgramSemanticError):
    pass


class NonPositiveCapacity(ProgramSemanticError):
    pass
