"""Values of a Tambara functor on arbitrary finite G-sets, and bispan evaluation.

``T(X)`` is modelled by equivariant sections: a tuple with one entry per point
``x`` of ``X``, the entry living in ``T(G/Stab(x))``, subject to
``s[g.x] = conj_g(s[x])``.  Such a section is determined by its values on the
orbit base points (the *orbit tuple*), which is the user-facing form.
"""

from __future__ import annotations

from typing import Sequence

from .bispans import Bispan
from .functors import FunctorError, TambaraFunctor
from .gsets import GMap, GSet


def from_orbit_values(T: TambaraFunctor, X: GSet, values: Sequence) -> tuple:
    """Spread one value per orbit (at its least point) over all of ``X``."""
    if len(values) != len(X.orbits):
        raise FunctorError(f"expected {len(X.orbits)} orbit values, got {len(values)}")
    out = [None] * X.size
    for orb, v in zip(X.orbits, values):
        base = orb[0]
        stab = X.stabilizers[base]
        if v not in T.level(stab):
            raise FunctorError(f"{v!r} is not an element of level {stab.name}")
        for x in orb:
            out[x] = T.conj(X.transporters[x], stab, v)
    return tuple(out)


def to_orbit_values(X: GSet, section: Sequence) -> tuple:
    return tuple(section[orb[0]] for orb in X.orbits)


def _spread(T: TambaraFunctor, Y: GSet, base_values: dict) -> tuple:
    out = [None] * Y.size
    for orb in Y.orbits:
        base = orb[0]
        stab = Y.stabilizers[base]
        v = base_values[base]
        for y in orb:
            out[y] = T.conj(Y.transporters[y], stab, v)
    return tuple(out)


def restrict_along(T: TambaraFunctor, f: GMap, section: Sequence) -> tuple:
    X, Y = f.source, f.target
    return tuple(T.res(Y.stabilizers[f.table[x]], X.stabilizers[x], section[f.table[x]]) for x in X.points)


def _pushforward(T: TambaraFunctor, f: GMap, section: Sequence, norm: bool) -> tuple:
    X, Y = f.source, f.target
    base_values = {}
    for orb in Y.orbits:
        y = orb[0]
        k = Y.stabilizers[y]
        lvl = T.level(k)
        fiber = f.fiber(y)
        terms = []
        for sub in X.restricted_orbits(fiber, k):
            x = sub[0]
            h = X.stabilizers[x]
            terms.append(T.nm(k, h, section[x]) if norm else T.tr(k, h, section[x]))
        base_values[y] = lvl.prod(terms) if norm else lvl.sum(terms)
    return _spread(T, Y, base_values)


def transfer_along(T: TambaraFunctor, f: GMap, section: Sequence) -> tuple:
    return _pushforward(T, f, section, norm=False)


def norm_along(T: TambaraFunctor, f: GMap, section: Sequence) -> tuple:
    return _pushforward(T, f, section, norm=True)


def evaluate_section(T: TambaraFunctor, b: Bispan, section: Sequence) -> tuple:
    """``tr_right o nm_middle o res_left`` on a full section of ``T(X)``."""
    s = restrict_along(T, b.left, section)
    s = norm_along(T, b.middle, s)
    return transfer_along(T, b.right, s)


def evaluate_bispan(T: TambaraFunctor, b: Bispan, values: Sequence) -> tuple:
    """Evaluate ``T(b)`` on one level element per source orbit; one value per target orbit."""
    section = from_orbit_values(T, b.source, values)
    return to_orbit_values(b.target, evaluate_section(T, b, section))


def orbit_levels(X: GSet) -> list:
    return [X.stabilizers[orb[0]] for orb in X.orbits]
