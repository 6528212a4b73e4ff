"""Integer lattices: row-style Hermite normal form and membership."""

from __future__ import annotations

from typing import Iterable, Sequence


def hermite_basis(vectors: Iterable[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """A Z-basis in row echelon form (positive pivots, reduced above) of the span."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        # Euclid on the pivot column
        while len([r for r in rows if r[col] != 0]) > 1:
            nz = sorted((r for r in rows if r[col] != 0), key=lambda r: abs(r[col]))
            pivot = nz[0]
            for r in nz[1:]:
                q = r[col] // pivot[col]
                for i in range(dim):
                    r[i] -= q * pivot[i]
            rows = [r for r in rows if any(r)]
        pivot = next(r for r in rows if r[col] != 0)
        rows = [r for r in rows if r is not pivot]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        col += 1
    # reduce entries above pivots
    for i, b in enumerate(basis):
        c = next(j for j, x in enumerate(b) if x)
        for prev in basis[:i]:
            q = prev[c] // b[c]
            if q:
                for j in range(dim):
                    prev[j] -= q * b[j]
    return [tuple(b) for b in basis]


def in_lattice(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of ``v`` in the span of an echelon ``basis`` from :func:`hermite_basis`."""
    r = list(v)
    for b in basis:
        c = next(j for j, x in enumerate(b) if x)
        if r[c] % b[c]:
            return False
        q = r[c] // b[c]
        r = [x - q * y for x, y in zip(r, b)]
    return not any(r)


def kernel_basis(functional: Sequence[int]) -> list[tuple[int, ...]]:
    """Z-basis of ``{x : sum(a_i x_i) = 0}`` when some coefficient is +-1."""
    n = len(functional)
    unit = next((i for i, a in enumerate(functional) if abs(a) == 1), None)
    if unit is None:
        raise ValueError("kernel_basis needs a unit coefficient")
    out = []
    for i in range(n):
        if i == unit:
            continue
        v = [0] * n
        v[i] = 1
        v[unit] = -functional[i] * functional[unit]
        out.append(tuple(v))
    return out
