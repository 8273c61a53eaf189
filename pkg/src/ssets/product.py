"""Categorical products of presentations and prism combinatorics.

An n-simplex of X x Y is a pair (a, b) of n-simplices.  The pair is
nondegenerate exactly when the degeneracy words of a and b share no
index: a shared index s_j can be pulled out of both components at once,
and conversely an outer s_j lands in both canonical words.  Faces act
componentwise and are re-expressed in canonical pair form by extracting
common indices, largest first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GenId,
    Presentation,
    Simplex,
    StructureError,
    apply_word,
    compact_simplex,
    vertex_simplex,
)
from .constructions import standard_simplex, vertex_sequence
from .morphism import SimplicialMap


class ProductPresentation(Presentation):
    """A product presentation remembering its factors and the pair encoding."""

    def __init__(self, left, right, generators, faces, pair_of, top_dim, name):
        super().__init__(generators, faces, top_dim, name=name)
        self.left = left
        self.right = right
        self._pair_of = dict(pair_of)
        self._gen_of_pair = {pair: g for g, pair in pair_of.items()}

    def pair_of(self, g: GenId) -> tuple[Simplex, Simplex]:
        try:
            return self._pair_of[g]
        except KeyError:
            raise StructureError(f"{g} is not a generator of this product") from None

    def to_pair(self, x: Simplex) -> tuple[Simplex, Simplex]:
        """Components of an arbitrary simplex of the product."""
        a, b = self.pair_of(x.gen)
        return apply_word(a, x.word), apply_word(b, x.word)

    def from_pair(self, a: Simplex, b: Simplex) -> Simplex:
        """Canonical simplex of the product for a componentwise pair."""
        if a.dim != b.dim:
            raise ValueError(f"component dimensions differ: {a.dim} vs {b.dim}")
        word, a0, b0 = _extract_common(self.left, self.right, a, b)
        gen = self._gen_of_pair.get((a0, b0))
        if gen is None:
            raise StructureError(f"pair ({a0}, {b0}) is not a cell of this product")
        return Simplex(word, gen)


def _extract_common(left, right, a, b):
    """Pull shared degeneracy indices out of both components, largest first.

    Largest-first keeps the extracted outer word strictly decreasing: after
    removing index j from both words, every remaining shared index is < j.
    """
    word = []
    while True:
        common = set(a.word) & set(b.word)
        if not common:
            return tuple(word), a, b
        j = max(common)
        word.append(j)
        a = left.face(a, j)
        b = right.face(b, j)


def _pair_name(a: Simplex, b: Simplex) -> str:
    return f"({compact_simplex(a)}|{compact_simplex(b)})"


def product(x: Presentation, y: Presentation, name: str | None = None) -> ProductPresentation:
    """The product presentation, truncated at the sum of the factor bounds."""
    pair_of: dict[GenId, tuple[Simplex, Simplex]] = {}
    gen_of_pair: dict[tuple[Simplex, Simplex], GenId] = {}
    gens = []
    top_gen_dim = x.max_generator_dim + y.max_generator_dim
    for n in range(top_gen_dim + 1):
        ys = y.simplices(n)
        for a in x.simplices(n):
            aw = set(a.word)
            for b in ys:
                if aw & set(b.word):
                    continue
                g = GenId(n, _pair_name(a, b))
                gens.append(g)
                pair_of[g] = (a, b)
                gen_of_pair[(a, b)] = g

    def pair_simplex(a, b):
        word, a0, b0 = _extract_common(x, y, a, b)
        return Simplex(word, gen_of_pair[(a0, b0)])

    faces = {}
    for g, (a, b) in pair_of.items():
        if g.dim == 0:
            continue
        faces[g] = tuple(
            pair_simplex(x.face(a, i), y.face(b, i)) for i in range(g.dim + 1)
        )
    if name is None:
        name = f"({x.name or '?'}x{y.name or '?'})"
    return ProductPresentation(
        x, y, gens, faces, pair_of, x.top_dim + y.top_dim, name
    )


def projections(p: ProductPresentation) -> tuple[SimplicialMap, SimplicialMap]:
    """The two componentwise projection maps."""
    first = {g: p.pair_of(g)[0] for g in p.all_generators()}
    second = {g: p.pair_of(g)[1] for g in p.all_generators()}
    return (
        SimplicialMap(p, p.left, first, name="pr1"),
        SimplicialMap(p, p.right, second, name="pr2"),
    )


def vertex_inclusion(p: ProductPresentation, v: GenId) -> SimplicialMap:
    """The slice inclusion X -> X x Y over a vertex v of Y."""
    if not (v.dim == 0 and p.right.has_generator(v)):
        raise ValueError(f"{v} is not a vertex of the right factor")
    assignment = {
        g: p.from_pair(Simplex((), g), vertex_simplex(v, g.dim))
        for g in p.left.all_generators()
    }
    return SimplicialMap(p.left, p, assignment, name=f"incl@{v.name}")


@dataclass(frozen=True)
class PrismSimplex:
    """One top cell of a prism (simplex x interval).

    The pair is (s_k of the top base simplex, the complementary
    degeneracy word on the interval edge); the vertex form lists base
    vertices 0..k then primed top vertices k'..p'.
    """

    k: int
    base_component: Simplex
    edge_component: Simplex
    vertex_form: tuple[str, ...]


def prism_decomposition(p: int) -> list[PrismSimplex]:
    """The p+1 nondegenerate (p+1)-cells of the prism over the p-simplex."""
    if p < 0:
        raise ValueError("dimension must be >= 0")
    top = GenId(p, ".".join(str(v) for v in range(p + 1)))
    edge = GenId(1, "0.1")
    out = []
    for k in range(p + 1):
        base = Simplex((k,), top)
        word = tuple(j for j in range(p, -1, -1) if j != k)
        edge_part = Simplex(word, edge)
        labels = []
        for v, side in zip(vertex_sequence(base), vertex_sequence(edge_part)):
            labels.append(f"{v}'" if side else f"{v}")
        out.append(PrismSimplex(k, base, edge_part, tuple(labels)))
    return out


def count_nondegenerate_top(p: int, q: int) -> int:
    """Number of nondegenerate (p+q)-cells of the product of two simplices.

    Counted directly as pairs of (p+q)-simplices of the factors with
    disjoint degeneracy words.
    """
    if p < 0 or q < 0:
        raise ValueError("dimensions must be >= 0")
    x = standard_simplex(p)
    y = standard_simplex(q)
    n = p + q
    count = 0
    ys = y.simplices(n)
    for a in x.simplices(n):
        aw = set(a.word)
        for b in ys:
            if not aw & set(b.word):
                count += 1
    return count
