"""Reading inputs (PV programs and complex files) and naming their vertices."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import ProgramSyntaxError, SemanticError, UnknownVertex
from .model import ModelInfo, build_program_model
from .pv import ProgramSpec, parse_program
from .sset import OrderedSSet, build_complex


class ComplexFormatError(ProgramSyntaxError):
    pass


@dataclass
class LoadedInput:
    kind: str  # "program" or "complex"
    X: OrderedSSet
    digest: str
    spec: ProgramSpec | None = None
    info: ModelInfo | None = None
    ambient_dimension: int | None = None

    @property
    def initial(self):
        if self.info is not None:
            return self.info.initial
        return self.X.vertices[0]

    @property
    def final(self):
        if self.info is not None:
            return self.info.final
        return self.X.vertices[-1]

    def counts(self) -> list[int]:
        """Simplex counts per dimension, padded with zeros to the ambient dimension."""
        counts = self.X.counts()
        if self.ambient_dimension is not None:
            counts += [0] * (self.ambient_dimension + 1 - len(counts))
        return counts

    def name(self, v) -> str:
        if self.kind == "program":
            return ",".join(map(str, v))
        return str(v)

    def vertex(self, text: str):
        """Resolve a vertex name given on the command line."""
        if self.kind == "program":
            try:
                v = tuple(int(p) for p in text.split(","))
            except ValueError:
                raise UnknownVertex(text) from None
        else:
            v = text
        if not self.X.has_vertex(v):
            raise UnknownVertex(text)
        return v


def load_complex(data: dict) -> tuple[OrderedSSet, int | None]:
    if not isinstance(data, dict) or not isinstance(data.get("simplices"), list):
        raise ComplexFormatError("complex file needs a \"simplices\" list", 1, 1)
    simplices = data["simplices"]
    names = data.get("vertices")
    for s in simplices + ([names] if names is not None else []):
        if not isinstance(s, list) or not all(isinstance(v, str) for v in s):
            raise ComplexFormatError("simplices and vertices must be lists of strings", 1, 1)
    if any(not s for s in simplices):
        raise ComplexFormatError("empty simplex", 1, 1)
    dim = data.get("dimension")
    if dim is not None and not isinstance(dim, int):
        raise ComplexFormatError("\"dimension\" must be an integer", 1, 1)
    return build_complex(simplices, names), dim


def load_text(text: str) -> LoadedInput:
    digest = "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ComplexFormatError(exc.msg, exc.lineno, exc.colno) from None
        X, dim = load_complex(data)
        return LoadedInput("complex", X, digest, ambient_dimension=dim)
    spec = parse_program(text)
    if not spec.processes:
        raise SemanticError("program declares no processes")
    X, info = build_program_model(spec)
    dim = sum(1 for m in info.models if m.length > 0)
    return LoadedInput("program", X, digest, spec=spec, info=info, ambient_dimension=dim)


def load_file(path) -> LoadedInput:
    with open(path, encoding="utf-8") as fh:
        return load_text(fh.read())
