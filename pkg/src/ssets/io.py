"""Text formats for presentations, maps, and group tables.

Presentation documents are line based:

    name delta1
    style simplicial
    top_dim 3
    generators 0 : 0 1
    generators 1 : 0.1
    faces 0.1 : 1 ; 0

``generators <dim> : <names>`` lists the generators of one dimension;
``faces <gen> : <expr> ; <expr> ; ...`` gives d_0, d_1, ... in order.
A face expression is a possibly empty run of degeneracy operators
followed by a generator name, e.g. ``s1 s0 v``.  Degeneracy words are
accepted in any order and normalized on load; a non-canonical word
triggers a NormalizationWarning.  Blank lines and ``#`` comments are
ignored.  Saving is canonical, so load/save round-trips are
byte-identical after one normalization pass.

Map documents assign a target face expression to every source
generator:

    name collapse
    source delta2.sset
    target delta1.sset
    assign 0.1.2 : s1 0.1

Group tables list the elements and one product row per element:

    elements e g g2
    table e : e g g2
    table g : g g2 e
    table g2 : g2 e g
"""

from __future__ import annotations

import re
import warnings
from pathlib import Path

from .core import (
    GenId,
    Presentation,
    Simplex,
    SsetError,
    apply_word,
    format_simplex,
)
from .groups import GroupTable
from .morphism import SimplicialMap


class ParseError(SsetError):
    """Syntax error with the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class SemanticError(SsetError):
    """Well-formed document with inconsistent content (names, counts)."""


class NormalizationWarning(UserWarning):
    """A degeneracy word was rewritten into canonical order on load."""


_NAME_RE = re.compile(r"[^\s;:#]+$")
_DEGEN_RE = re.compile(r"s(\d+)$")


def _check_name(name: str, line: int) -> str:
    if not _NAME_RE.match(name):
        raise ParseError(f"invalid name {name!r}", line)
    if _DEGEN_RE.match(name):
        raise ParseError(
            f"name {name!r} collides with degeneracy-operator syntax", line
        )
    return name


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_face_expression(
    text: str, dim: int, lookup, line: int | None = None
) -> Simplex:
    """Resolve ``s.. s.. genname`` against generators, normalizing the word.

    ``dim`` is the dimension of the simplex the expression denotes; the
    base generator dimension follows from the operator count.  ``lookup``
    maps (dim, name) to a GenId or None.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty face expression", line)
    name = tokens[-1]
    ops = []
    for tok in tokens[:-1]:
        m = _DEGEN_RE.match(tok)
        if not m:
            raise ParseError(f"bad degeneracy operator {tok!r}", line)
        ops.append(int(m.group(1)))
    base_dim = dim - len(ops)
    if base_dim < 0:
        raise SemanticError(
            f"expression {text!r} has too many operators for dimension {dim}"
        )
    gen = lookup(base_dim, name)
    if gen is None:
        raise SemanticError(
            f"expression {text!r} references unknown generator "
            f"{name!r} in dimension {base_dim}"
        )
    try:
        simplex = apply_word(Simplex((), gen), ops)
    except ValueError as exc:
        raise SemanticError(f"expression {text!r} is invalid: {exc}") from exc
    if tuple(ops) != simplex.word:
        warnings.warn(
            f"degeneracy word in {text!r} normalized to "
            f"{format_simplex(simplex)!r}",
            NormalizationWarning,
            stacklevel=2,
        )
    return simplex


def loads_presentation(text: str, name: str | None = None) -> Presentation:
    doc_name = name
    style = "simplicial"
    top_dim = None
    gens_by_dim: dict[int, list[str]] = {}
    face_lines: list[tuple[int, str, list[str]]] = []
    for lineno, line in _logical_lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            doc_name = rest or doc_name
        elif head == "style":
            if rest not in ("simplicial", "delta"):
                raise ParseError(f"unknown style {rest!r}", lineno)
            style = rest
        elif head == "top_dim":
            try:
                top_dim = int(rest)
            except ValueError:
                raise ParseError(f"bad top_dim {rest!r}", lineno) from None
        elif head == "generators":
            dim_text, sep, names = rest.partition(":")
            if not sep:
                raise ParseError("generators line needs a ':'", lineno)
            try:
                dim = int(dim_text.strip())
            except ValueError:
                raise ParseError(f"bad dimension {dim_text.strip()!r}", lineno) from None
            if dim < 0:
                raise ParseError("dimension must be >= 0", lineno)
            bucket = gens_by_dim.setdefault(dim, [])
            for n in names.split():
                _check_name(n, lineno)
                bucket.append(n)
        elif head == "faces":
            gen_name, sep, exprs = rest.partition(":")
            if not sep:
                raise ParseError("faces line needs a ':'", lineno)
            gen_name = gen_name.strip()
            _check_name(gen_name, lineno)
            entries = [e.strip() for e in exprs.split(";")]
            if any(not e for e in entries):
                raise ParseError("empty face expression", lineno)
            face_lines.append((lineno, gen_name, entries))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if top_dim is None:
        raise ParseError("document is missing a top_dim line")
    gens: list[GenId] = []
    by_key: dict[tuple[int, str], GenId] = {}
    for dim, names in gens_by_dim.items():
        for n in names:
            g = GenId(dim, n)
            if (dim, n) in by_key:
                raise SemanticError(f"duplicate generator {n!r} in dimension {dim}")
            by_key[(dim, n)] = g
            gens.append(g)

    def lookup(dim, n):
        return by_key.get((dim, n))

    all_names: dict[str, list[GenId]] = {}
    for g in gens:
        all_names.setdefault(g.name, []).append(g)

    faces: dict[GenId, tuple[Simplex, ...]] = {}
    for lineno, gen_name, entries in face_lines:
        candidates = all_names.get(gen_name, [])
        carriers = [g for g in candidates if g.dim >= 1]
        if not carriers:
            raise SemanticError(
                f"faces given for unknown or zero-dimensional generator {gen_name!r}"
            )
        if len(carriers) > 1:
            raise SemanticError(
                f"ambiguous generator name {gen_name!r}; duplicate across dimensions"
            )
        g = carriers[0]
        if g in faces:
            raise SemanticError(f"duplicate face entries for {gen_name!r}")
        if len(entries) != g.dim + 1:
            raise SemanticError(
                f"generator {gen_name!r} needs {g.dim + 1} faces, got {len(entries)}"
            )
        faces[g] = tuple(
            parse_face_expression(e, g.dim - 1, lookup, lineno) for e in entries
        )
    for g in gens:
        if g.dim >= 1 and g not in faces:
            raise SemanticError(f"generator {g.name!r} has no face entries")
    return Presentation(
        gens, faces, top_dim, delta_style=(style == "delta"), name=doc_name
    )


def dumps_presentation(p: Presentation) -> str:
    for g in p.all_generators():
        if not _NAME_RE.match(g.name) or _DEGEN_RE.match(g.name):
            raise SemanticError(
                f"generator name {g.name!r} cannot be written in the file grammar"
            )
    lines = []
    if p.name:
        lines.append(f"name {p.name}")
    lines.append(f"style {'delta' if p.delta_style else 'simplicial'}")
    lines.append(f"top_dim {p.top_dim}")
    for d in range(p.max_generator_dim + 1):
        gens = p.generators_at(d)
        if gens:
            lines.append(f"generators {d} : " + " ".join(g.name for g in gens))
    for g in p.all_generators():
        if g.dim >= 1:
            exprs = " ; ".join(format_simplex(f) for f in p.faces_of(g))
            lines.append(f"faces {g.name} : {exprs}")
    return "\n".join(lines) + "\n"


def load_presentation(path) -> Presentation:
    path = Path(path)
    return loads_presentation(path.read_text(), name=path.stem)


def save_presentation(p: Presentation, path) -> None:
    Path(path).write_text(dumps_presentation(p))


def parse_simplex(p: Presentation, text: str, dim: int) -> Simplex:
    """Parse a face expression against a presentation at a known dimension."""

    def lookup(d, n):
        g = GenId(d, n)
        return g if p.has_generator(g) else None

    return parse_face_expression(text, dim, lookup)


def loads_map(
    text: str,
    source: Presentation,
    target: Presentation,
    name: str | None = None,
) -> SimplicialMap:
    doc_name = name
    assignment: dict[GenId, Simplex] = {}
    by_name: dict[str, list[GenId]] = {}
    for g in source.all_generators():
        by_name.setdefault(g.name, []).append(g)

    def lookup(dim, n):
        g = GenId(dim, n)
        return g if target.has_generator(g) else None

    for lineno, line in _logical_lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            doc_name = rest or doc_name
        elif head in ("source", "target"):
            continue  # file references; resolved by the caller
        elif head == "assign":
            gen_name, sep, expr = rest.partition(":")
            if not sep:
                raise ParseError("assign line needs a ':'", lineno)
            gen_name = gen_name.strip()
            candidates = by_name.get(gen_name, [])
            if not candidates:
                raise SemanticError(f"assignment for unknown generator {gen_name!r}")
            if len(candidates) > 1:
                raise SemanticError(f"ambiguous source generator name {gen_name!r}")
            g = candidates[0]
            if g in assignment:
                raise SemanticError(f"duplicate assignment for {gen_name!r}")
            assignment[g] = parse_face_expression(expr.strip(), g.dim, lookup, lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    return SimplicialMap(source, target, assignment, name=doc_name)


def _referenced_files(text: str) -> dict[str, str]:
    refs = {}
    for lineno, line in _logical_lines(text):
        head, _, rest = line.partition(" ")
        if head in ("source", "target"):
            if not rest.strip():
                raise ParseError(f"{head} line needs a file path", lineno)
            refs[head] = rest.strip()
    return refs


def load_map(
    path,
    source: Presentation | None = None,
    target: Presentation | None = None,
) -> SimplicialMap:
    """Load a map document, resolving source/target files relative to it."""
    path = Path(path)
    text = path.read_text()
    refs = _referenced_files(text)
    if source is None:
        if "source" not in refs:
            raise SemanticError("map document has no source line")
        source = load_presentation(path.parent / refs["source"])
    if target is None:
        if "target" not in refs:
            raise SemanticError("map document has no target line")
        target = load_presentation(path.parent / refs["target"])
    return loads_map(text, source, target, name=path.stem)


def loads_group_table(text: str) -> GroupTable:
    elements: tuple[str, ...] | None = None
    rows: dict[str, list[str]] = {}
    for lineno, line in _logical_lines(text):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "elements":
            if elements is not None:
                raise ParseError("duplicate elements line", lineno)
            elements = tuple(rest.split())
            if not elements:
                raise ParseError("elements line is empty", lineno)
        elif head == "table":
            name, sep, values = rest.partition(":")
            if not sep:
                raise ParseError("table line needs a ':'", lineno)
            rows[name.strip()] = values.split()
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if elements is None:
        raise ParseError("document is missing an elements line")
    try:
        ordered = [rows[e] for e in elements]
    except KeyError as exc:
        raise SemanticError(f"missing table row for element {exc.args[0]!r}") from None
    if len(rows) != len(elements):
        raise SemanticError("table rows do not match the element list")
    for e, row in zip(elements, ordered):
        if len(row) != len(elements):
            raise SemanticError(f"table row for {e!r} has the wrong length")
        for v in row:
            if v not in elements:
                raise SemanticError(f"unknown element {v!r} in table row for {e!r}")
    try:
        return GroupTable.from_rows(elements, ordered)
    except ValueError as exc:
        raise SemanticError(f"invalid group table: {exc}") from exc


def load_group_table(path) -> GroupTable:
    return loads_group_table(Path(path).read_text())
