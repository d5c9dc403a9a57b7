"""Parser, printer and linter for straight-line PV programs.

Grammar::

    program := stmt*
    stmt    := "sem" IDENT "=" INT | "proc" IDENT "=" op ("." op)*
    op      := ("P" | "V") IDENT

``#`` starts a comment running to the end of the line.  An operation may be
written glued (``Pa``) or spaced (``P a``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import (
    DuplicateName,
    NonPositiveCapacity,
    ProgramSyntaxError,
    UndeclaredSemaphore,
)

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>-?[0-9]+)
  | (?P<eq>=)
  | (?P<dot>\.)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Semaphore:
    name: str
    capacity: int


@dataclass(frozen=True)
class Op:
    kind: str  # "P" or "V"
    sem: int  # index into ProgramSpec.semaphores


@dataclass(frozen=True)
class Process:
    name: str
    ops: tuple[Op, ...]


@dataclass(frozen=True)
class ProgramSpec:
    semaphores: tuple[Semaphore, ...]
    processes: tuple[Process, ...]

    @property
    def capacities(self) -> tuple[int, ...]:
        return tuple(s.capacity for s in self.semaphores)

    def sem_index(self, name: str) -> int:
        for i, s in enumerate(self.semaphores):
            if s.name == name:
                return i
        raise KeyError(name)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def tokenize(text: str) -> Iterator[Token]:
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            raise ProgramSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            yield Token(kind, m.group(), *_line_col(text, pos))
        pos = m.end()
    yield Token("eof", "", *_line_col(text, len(text)))


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ProgramSyntaxError(f"unexpected {_describe(tok)}", tok.line, tok.column, (what,))
        return self.next()

    def op(self) -> tuple[str, Token]:
        tok = self.expect("ident", "operation")
        if tok.text in ("P", "V"):
            sem = self.expect("ident", "semaphore name")
            return tok.text, sem
        if tok.text[0] in "PV":
            name = tok.text[1:]
            if IDENT_RE.fullmatch(name):
                return tok.text[0], Token("ident", name, tok.line, tok.column + 1)
        raise ProgramSyntaxError(f"bad operation {tok.text!r}", tok.line, tok.column, ("P<sem>", "V<sem>"))


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def parse_program(text: str) -> ProgramSpec:
    """Parse program text into a :class:`ProgramSpec`.

    Raises ``ProgramSyntaxError`` for malformed text and a positioned
    semantic error (``UndeclaredSemaphore``, ``DuplicateName``,
    ``NonPositiveCapacity``) for well-formed but invalid programs.
    Semaphores may be declared after the processes that use them.
    """
    p = _Parser(text)
    sems: list[tuple[Token, int]] = []
    procs: list[tuple[Token, list[tuple[str, Token]]]] = []
    while p.peek().kind != "eof":
        tok = p.peek()
        if tok.kind == "ident" and tok.text == "sem":
            p.next()
            name = p.expect("ident", "semaphore name")
            p.expect("eq", "'='")
            num = p.expect("int", "integer capacity")
            sems.append((name, int(num.text)))
            if int(num.text) < 1:
                raise NonPositiveCapacity(f"capacity of {name.text!r} must be positive", num.line, num.column)
        elif tok.kind == "ident" and tok.text == "proc":
            p.next()
            name = p.expect("ident", "process name")
            p.expect("eq", "'='")
            ops = [p.op()]
            while p.peek().kind == "dot":
                p.next()
                ops.append(p.op())
            procs.append((name, ops))
        else:
            raise ProgramSyntaxError(f"unexpected {_describe(tok)}", tok.line, tok.column, ("'sem'", "'proc'"))

    index: dict[str, int] = {}
    for name, _ in sems:
        if name.text in index:
            raise DuplicateName(f"semaphore {name.text!r} declared twice", name.line, name.column)
        index[name.text] = len(index)
    seen: set[str] = set()
    processes = []
    for name, ops in procs:
        if name.text in seen:
            raise DuplicateName(f"process {name.text!r} declared twice", name.line, name.column)
        seen.add(name.text)
        resolved = []
        for kind, sem in ops:
            if sem.text not in index:
                raise UndeclaredSemaphore(f"semaphore {sem.text!r} is not declared", sem.line, sem.column)
            resolved.append(Op(kind, index[sem.text]))
        processes.append(Process(name.text, tuple(resolved)))
    return ProgramSpec(tuple(Semaphore(n.text, k) for n, k in sems), tuple(processes))


def format_program(spec: ProgramSpec) -> str:
    """Canonical text for a program; ``parse_program`` inverts it."""
    lines = [f"sem {s.name} = {s.capacity}" for s in spec.semaphores]
    for proc in spec.processes:
        body = ".".join(f"{op.kind}{spec.semaphores[op.sem].name}" for op in proc.ops)
        lines.append(f"proc {proc.name} = {body}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Warning:
    kind: str  # "NonMatchedPV" or "OverRelease"
    process: str
    semaphore: str
    position: int | None = None  # 1-based op index, OverRelease only

    def __str__(self) -> str:
        if self.kind == "OverRelease":
            return f"OverRelease({self.process}, {self.semaphore}, position {self.position})"
        return f"{self.kind}({self.process}, {self.semaphore})"


def lint_program(spec: ProgramSpec) -> list[Warning]:
    """Flag unbalanced P/V usage.  Never raises.

    OverRelease is reported once per (process, semaphore) at the first op
    where the running P-minus-V count goes negative.
    """
    out = []
    for proc in spec.processes:
        held = [0] * len(spec.semaphores)
        released_early = set()
        for t, op in enumerate(proc.ops, start=1):
            held[op.sem] += 1 if op.kind == "P" else -1
            if held[op.sem] < 0 and op.sem not in released_early:
                released_early.add(op.sem)
                out.append(Warning("OverRelease", proc.name, spec.semaphores[op.sem].name, t))
        for j, h in enumerate(held):
            if h != 0:
                out.append(Warning("NonMatchedPV", proc.name, spec.semaphores[j].name))
    return out
