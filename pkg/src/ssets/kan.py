"""Horn compatibility, exhaustive horn filling, and Kan checks.

A horn is a compatible family of would-be faces with one slot missing.
Filling searches the full simplex enumeration of the filler dimension,
so it is exact below the presentation's trusted bound and refuses to
answer above it: a missing filler there could be a truncation artifact
rather than a mathematical fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import (
    GenId,
    Presentation,
    Simplex,
    TruncationError,
    format_simplex,
)
from .constructions import horn, standard_simplex
from .morphism import SimplicialMap


@dataclass(frozen=True)
class HornSpec:
    """Faces of an n-simplex, indexed 0..n, with exactly slot k missing."""

    n: int
    k: int
    faces: tuple[Simplex | None, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("horns need dimension >= 1")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"horn index {self.k} out of range")
        if len(self.faces) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} face slots")
        for i, f in enumerate(self.faces):
            if i == self.k:
                if f is not None:
                    raise ValueError(f"slot {i} must be empty in a {self.k}-horn")
            else:
                if f is None:
                    raise ValueError(f"missing face in slot {i}")
                if f.dim != self.n - 1:
                    raise ValueError(
                        f"face in slot {i} has dimension {f.dim}, expected {self.n - 1}"
                    )

    @classmethod
    def from_faces(cls, n: int, k: int, faces: Mapping[int, Simplex]) -> "HornSpec":
        slots = [faces.get(i) if i != k else None for i in range(n + 1)]
        return cls(n, k, tuple(slots))

    def describe(self) -> str:
        entries = ", ".join(
            f"d_{i}={format_simplex(f)}" for i, f in enumerate(self.faces) if f is not None
        )
        return f"horn({self.n},{self.k})[{entries}]"


@dataclass(frozen=True)
class KanReport:
    """Outcome of an exhaustive horn search up to a dimension bound."""

    max_dim: int
    witnesses: tuple[HornSpec, ...]
    horns_checked: int

    @property
    def is_kan(self) -> bool:
        return not self.witnesses


def horn_compatible(p: Presentation, h: HornSpec) -> bool:
    """Whether d_i x_j = d_{j-1} x_i holds for all present pairs i < j."""
    for j in range(h.n + 1):
        if j == h.k:
            continue
        for i in range(j):
            if i == h.k:
                continue
            if p.face(h.faces[j], i) != p.face(h.faces[i], j - 1):
                return False
    return True


def _matches(p: Presentation, z: Simplex, h: HornSpec) -> bool:
    return all(
        p.face(z, i) == h.faces[i] for i in range(h.n + 1) if i != h.k
    )


def _check_fillable_dim(p: Presentation, n: int):
    if n > p.top_dim:
        raise TruncationError(
            f"undecidable at this truncation: fillers have dimension {n} "
            f"but the presentation is only trusted up to {p.top_dim}"
        )


def fill_horn(p: Presentation, h: HornSpec) -> Simplex | None:
    """The lexicographically least filler, or None if no simplex fits."""
    _check_fillable_dim(p, h.n)
    if not horn_compatible(p, h):
        raise ValueError(f"faces of {h.describe()} are not compatible")
    for z in p.simplices(h.n):
        if _matches(p, z, h):
            return z
    return None


def fill_horn_all(p: Presentation, h: HornSpec) -> tuple[Simplex, ...]:
    """Every filler, in enumeration order."""
    _check_fillable_dim(p, h.n)
    if not horn_compatible(p, h):
        raise ValueError(f"faces of {h.describe()} are not compatible")
    return tuple(z for z in p.simplices(h.n) if _matches(p, z, h))


def kan_check(p: Presentation, max_n: int) -> KanReport:
    """Search every compatible horn of dimension <= max_n for a filler.

    Horn faces are drawn from the full simplex enumeration one dimension
    down, so the search is finite but exhaustive at this truncation.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    _check_fillable_dim(p, max_n)
    witnesses = []
    checked = 0
    for n in range(1, max_n + 1):
        level = p.simplices(n - 1)
        candidates = p.simplices(n)
        for k in range(n + 1):
            slots = [i for i in range(n + 1) if i != k]

            def backtrack(pos: int, chosen: dict[int, Simplex]):
                nonlocal checked
                if pos == len(slots):
                    h = HornSpec.from_faces(n, k, chosen)
                    checked += 1
                    if not any(_matches(p, z, h) for z in candidates):
                        witnesses.append(h)
                    return
                # slots are filled in increasing order, so previous ones are < j
                j = slots[pos]
                for x in level:
                    if n >= 2 and any(
                        p.face(x, i) != p.face(chosen[i], j - 1) for i in slots[:pos]
                    ):
                        continue
                    chosen[j] = x
                    backtrack(pos + 1, chosen)
                    del chosen[j]

            backtrack(0, {})
    return KanReport(max_n, tuple(witnesses), checked)


def map_from_simplex(p: Presentation, z: Simplex) -> SimplicialMap:
    """The map from the standard simplex classifying z (top generator to z)."""
    n = z.dim
    src = standard_simplex(n)
    assignment = {}
    for g in src.all_generators():
        keep = {int(v) for v in g.name.split(".")}
        img = z
        for i in sorted(set(range(n + 1)) - keep, reverse=True):
            img = p.face(img, i)
        assignment[g] = img
    return SimplicialMap(src, p, assignment)


def horn_map(p: Presentation, h: HornSpec) -> SimplicialMap:
    """The simplicial map from the horn presentation determined by a horn.

    Each generator of the horn is a vertex subset missing at least one
    index other than k; its image is the corresponding iterated face of
    any assigned facet containing it.  Compatibility of the horn makes
    the choice of facet irrelevant.
    """
    src = horn(h.n, h.k)
    whole = set(range(h.n + 1))
    assignment: dict[GenId, Simplex] = {}
    for g in src.all_generators():
        keep = {int(v) for v in g.name.split(".")}
        missing = sorted(whole - keep)
        anchor = next(i for i in missing if i != h.k)
        img = h.faces[anchor]
        facet = [v for v in range(h.n + 1) if v != anchor]
        drop = sorted(
            (facet.index(v) for v in missing if v != anchor), reverse=True
        )
        for i in drop:
            img = p.face(img, i)
        assignment[g] = img
    return SimplicialMap(src, p, assignment)
