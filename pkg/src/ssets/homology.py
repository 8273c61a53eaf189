"""Integer homology of presentations via Smith normal form.

The primary chain complex is the normalized one: bases are the
nondegenerate generators and any face that lands on a degenerate
simplex contributes zero.  The full complex on all simplices (faces
taken literally) is also available; truncated low-degree homology of
that complex serves as an independent cross-check of the normalization.

All arithmetic is exact over the integers; matrices are plain lists of
Python ints, so intermediate entry growth in the reduction cannot
overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ConsistencyError, Presentation, Simplex, TruncationError

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ChainComplex:
    """Bases and boundary matrices for dimensions 0..N.

    ``boundaries[n]`` maps dimension n to n-1 and has shape
    (len(bases[n-1]), len(bases[n])); index 0 holds an empty matrix.
    """

    bases: tuple[tuple, ...]
    boundaries: tuple[Matrix, ...]

    @property
    def max_dim(self) -> int:
        return len(self.bases) - 1

    def rank_of_chains(self, n: int) -> int:
        return len(self.bases[n]) if 0 <= n <= self.max_dim else 0

    def boundary(self, n: int) -> Matrix:
        return self.boundaries[n]

    def verify_boundary_squares_to_zero(self) -> bool:
        for n in range(2, self.max_dim + 1):
            a = self.boundaries[n - 1]
            b = self.boundaries[n]
            rows = len(a)
            mid = len(b)
            cols = len(b[0]) if b else 0
            for r in range(rows):
                for c in range(cols):
                    if sum(a[r][k] * b[k][c] for k in range(mid)) != 0:
                        return False
        return True


def _matrix(rows: int, cols: int, entries) -> Matrix:
    m = [[0] * cols for _ in range(rows)]
    for (r, c), v in entries.items():
        m[r][c] = v
    return tuple(tuple(row) for row in m)


def normalized_complex(p: Presentation, max_dim: int) -> ChainComplex:
    """Chain complex on nondegenerate generators, degenerate faces dropped."""
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    if max_dim > p.top_dim:
        raise TruncationError(
            f"chain complex to dimension {max_dim} exceeds top_dim {p.top_dim}"
        )
    bases = tuple(p.generators_at(n) for n in range(max_dim + 1))
    boundaries = [()]
    for n in range(1, max_dim + 1):
        row_of = {g: r for r, g in enumerate(bases[n - 1])}
        entries: dict[tuple[int, int], int] = {}
        for c, g in enumerate(bases[n]):
            x = Simplex((), g)
            for i in range(n + 1):
                f = p.face(x, i)
                if f.is_degenerate:
                    continue
                key = (row_of[f.gen], c)
                entries[key] = entries.get(key, 0) + (-1) ** i
        boundaries.append(_matrix(len(bases[n - 1]), len(bases[n]), entries))
    return ChainComplex(bases, tuple(boundaries))


def unnormalized_complex(p: Presentation, max_dim: int) -> ChainComplex:
    """Chain complex on all simplices with faces taken literally.

    Finite only because it is truncated; used as the low-degree oracle
    for the normalized computation.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    if max_dim > p.top_dim:
        raise TruncationError(
            f"chain complex to dimension {max_dim} exceeds top_dim {p.top_dim}"
        )
    bases = tuple(p.simplices(n) for n in range(max_dim + 1))
    boundaries = [()]
    for n in range(1, max_dim + 1):
        row_of = {s: r for r, s in enumerate(bases[n - 1])}
        entries: dict[tuple[int, int], int] = {}
        for c, x in enumerate(bases[n]):
            for i in range(n + 1):
                key = (row_of[p.face(x, i)], c)
                entries[key] = entries.get(key, 0) + (-1) ** i
        boundaries.append(_matrix(len(bases[n - 1]), len(bases[n]), entries))
    return ChainComplex(bases, tuple(boundaries))


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors (positive, each dividing the next) and the rank."""

    factors: tuple[int, ...]
    rank: int


def smith_normal_form(matrix) -> SNFResult:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Pivot choice is the smallest nonzero absolute value with row-major
    tie-breaking, which keeps entry growth tame and the run fully
    deterministic.
    """
    a = [[int(v) for v in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ValueError("ragged matrix")
    t = 0
    size = min(rows, cols)
    while t < size:
        pr = pc = -1
        best = None
        for r in range(t, rows):
            for c in range(t, cols):
                v = abs(a[r][c])
                if v and (best is None or v < best):
                    best, pr, pc = v, r, c
        if best is None:
            break
        a[t], a[pr] = a[pr], a[t]
        for row in a:
            row[t], row[pc] = row[pc], row[t]
        while True:
            piv = a[t][t]
            dirty = False
            for r in range(t + 1, rows):
                if a[r][t]:
                    q = a[r][t] // piv
                    for c in range(t, cols):
                        a[r][c] -= q * a[t][c]
                    if a[r][t]:
                        # remainder is strictly smaller: promote it to pivot
                        a[t], a[r] = a[r], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for c in range(t + 1, cols):
                if a[t][c]:
                    q = a[t][c] // piv
                    for r in range(t, rows):
                        a[r][c] -= q * a[r][t]
                    if a[t][c]:
                        for r in range(rows):
                            a[r][t], a[r][c] = a[r][c], a[r][t]
                        dirty = True
                        break
            if not dirty:
                break
        piv = a[t][t]
        bad = None
        for r in range(t + 1, rows):
            for c in range(t + 1, cols):
                if a[r][c] % piv:
                    bad = r
                    break
            if bad is not None:
                break
        if bad is not None:
            # fold the offending row in and redo this step
            for c in range(t, cols):
                a[t][c] += a[bad][c]
            continue
        t += 1
    diag = [abs(a[i][i]) for i in range(size) if a[i][i]]
    for u, v in zip(diag, diag[1:]):
        if v % u:
            raise ConsistencyError("invariant factors fail the divisibility chain")
    return SNFResult(tuple(diag), len(diag))


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus invariant factors."""

    betti: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("betti number must be >= 0")
        for u, v in zip(self.torsion, self.torsion[1:]):
            if v % u:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(t <= 1 for t in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def homology_of_complex(c: ChainComplex) -> tuple[HomologyGroup, ...]:
    """Homology in degrees 0..max_dim-1 from Smith normal forms.

    The top degree is not reported: the boundary arriving from one
    dimension higher is outside the complex.
    """
    snfs = [SNFResult((), 0)]
    for n in range(1, c.max_dim + 1):
        snfs.append(smith_normal_form(c.boundary(n)))
    out = []
    for n in range(c.max_dim):
        betti = c.rank_of_chains(n) - snfs[n].rank - snfs[n + 1].rank
        torsion = tuple(f for f in snfs[n + 1].factors if f > 1)
        out.append(HomologyGroup(betti, torsion))
    return tuple(out)


def homology(p: Presentation, max_dim: int) -> tuple[HomologyGroup, ...]:
    """Homology groups of the normalized complex in degrees 0..max_dim-1."""
    return homology_of_complex(normalized_complex(p, max_dim))


def euler_characteristic(p: Presentation) -> int:
    """Alternating sum of nondegenerate cell counts."""
    return sum((-1) ** d * c for d, c in enumerate(p.generator_counts()))
