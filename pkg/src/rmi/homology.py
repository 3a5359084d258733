"""Reduced simplicial homology ranks over the rationals.

Faces are bitmasks over a small vertex set.  Ranks of boundary matrices are
computed exactly with fraction-free (Bareiss) elimination on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix given as a list of rows."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col, ncols):
                # Bareiss step: the division is exact
                row[c] = (p * row[c] - a * top[c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class SimplicialComplexRanks:
    """A complex on ``vertices`` vertices and its reduced Betti numbers.

    ``homology[k]`` is the rank of reduced homology in dimension ``k - 1``,
    so ``homology[0]`` is the (-1)-dimensional group, nonzero only for ``{∅}``.
    """

    vertices: int
    faces: tuple[int, ...]
    homology: tuple[int, ...]

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        f = [0] * (self.vertices + 1)
        for face in self.faces:
            f[_popcount(face)] += 1
        return f

    def euler_identity_holds(self) -> bool:
        f = self.f_vector()
        lhs = sum((-1) ** (k - 1) * fk for k, fk in enumerate(f))
        rhs = sum((-1) ** (k - 1) * hk for k, hk in enumerate(self.homology))
        return lhs == rhs


def reduced_homology(vertices: int, faces) -> SimplicialComplexRanks:
    """Reduced homology ranks of the complex whose faces are the given bitmasks.

    ``faces`` must be closed under taking subsets; the empty face (mask 0)
    belongs to every nonvoid complex.
    """
    faces = tuple(sorted(set(faces)))
    by_size: list[list[int]] = [[] for _ in range(vertices + 1)]
    for face in faces:
        by_size[_popcount(face)].append(face)
    index = [{f: k for k, f in enumerate(layer)} for layer in by_size]

    # rank of the boundary map from size-s faces to size-(s-1) faces
    bd_rank = [0] * (vertices + 2)
    for s in range(1, vertices + 1):
        if not by_size[s] or not by_size[s - 1]:
            continue
        rows = []
        for face in by_size[s]:
            row = [0] * len(by_size[s - 1])
            sign = 1
            for v in range(vertices):
                bit = 1 << v
                if face & bit:
                    row[index[s - 1][face ^ bit]] = sign
                    sign = -sign
            rows.append(row)
        bd_rank[s] = exact_rank(rows)

    homology = tuple(
        len(by_size[s]) - bd_rank[s] - bd_rank[s + 1] for s in range(vertices + 1)
    )
    result = SimplicialComplexRanks(vertices, faces, homology)
    if not result.euler_identity_holds():
        raise ArithmeticError("Euler characteristic check failed for a simplicial complex")
    return result
