"""Invariant suite over a corpus of functor specs.

Each invariant returns ``(passed, witness)``; ``None`` as ``passed`` marks an
invariant that does not apply to the functor (e.g. spectra of Burnside).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .axioms import check_axioms
from .functors import BurnsideFunctor, Element, FixedPointFunctor, TambaraFunctor
from .ideals import (
    enumerate_ideals,
    is_prime,
    maximal_disjoint_prime,
    nakaoka_radical_membership,
    nilpotent,
    nilradical_levelwise,
    pigeonhole_bound,
    power_iteration_to_zero,
    radical,
)
from .io import element_to_str, load_functor
from .lattice import hermite_basis, in_lattice
from .spectrum import (
    check_d_intersection,
    check_spectral,
    enumerate_primes,
    is_kilpotent,
    kil_burnside_level,
    kilradical_trivial_action,
    localization_oracle_fp,
    nil_via_primes,
    radical_via_primes,
    spectrum,
)

INVARIANTS = (
    "axioms",
    "nil_equals_nilradical",
    "radical_via_primes",
    "nilpotent_iff_power_zero",
    "prime_avoids_non_nilpotent",
    "d_intersection",
    "spectral",
    "kilpotence",
)


@dataclass(frozen=True)
class Outcome:
    functor: str
    invariant: str
    passed: bool | None
    witness: str | None = None

    def line(self) -> str:
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]
        tail = f"  witness: {self.witness}" if self.witness else ""
        return f"{status}  {self.functor}  {self.invariant}{tail}"

    def to_json(self) -> dict:
        return {"functor": self.functor, "invariant": self.invariant,
                "passed": self.passed, "witness": self.witness}


def _axioms(T, seed):
    rep = check_axioms(T, seed=seed)
    if rep.passed:
        return True, None
    bad = next(c for c in rep.checks if not c.passed)
    return False, f"{bad.name}: {bad.witness}"


def _nil(T, seed):
    a, b = nil_via_primes(T), nilradical_levelwise(T)
    if a == b:
        return True, None
    return False, f"primes give {a!r}, nilradical is {b!r}"


def _radicals(T, seed):
    for I in enumerate_ideals(T):
        r = radical(T, I)
        if r != radical_via_primes(T, I):
            return False, f"radical of {I!r} differs from the intersection of primes over it"
        for el in T.all_elements():
            if nakaoka_radical_membership(T, el, I) != (el in r):
                return False, f"radical membership of {element_to_str(T, el)} in {I!r}"
    return True, None


def _nilpotent_powers(T, seed):
    for el in T.all_elements():
        n = power_iteration_to_zero(T, el)
        if (n is not None) != nilpotent(T, el):
            return False, f"{element_to_str(T, el)}: power index {n}, bound {pigeonhole_bound(T, el)}"
    return True, None


def _prime_avoidance(T, seed):
    primes = enumerate_primes(T)
    for el in T.all_elements():
        if nilpotent(T, el):
            continue
        if not any(el not in P for P in primes):
            return False, f"every prime contains {element_to_str(T, el)}"
        P = maximal_disjoint_prime(T, el.subgroup, [el.value])
        if el in P or not is_prime(T, P)[0]:
            return False, f"maximal ideal avoiding powers of {element_to_str(T, el)} is not a prime excluding it"
    return True, None


def _d_intersection(T, seed):
    space = spectrum(T)
    els = T.all_elements()
    for e, f in itertools.product(els, els):
        if not check_d_intersection(space, e, f):
            return False, f"D({element_to_str(T, e)}) & D({element_to_str(T, f)})"
    return True, None


def _spectral(T, seed):
    rep = check_spectral(spectrum(T))
    return rep.spectral, (None if rep.spectral else "; ".join(rep.violations))


def _kilpotence(T, seed):
    if isinstance(T, BurnsideFunctor):
        G = T.group
        for h in T.subgroups:
            lvl = T.level(h)
            basis = kil_burnside_level(G, h)
            lattice = hermite_basis(basis, lvl.rank)
            for x in lvl.window(3):
                el = Element(h, tuple(x))
                if is_kilpotent(T, el) != in_lattice(lattice, x):
                    return False, f"{lvl.element_name(tuple(x))}@{h.name}"
        return True, None
    for el in T.all_elements():
        k = is_kilpotent(T, el)
        if isinstance(T, FixedPointFunctor) and k != localization_oracle_fp(T, el):
            return False, f"criterion and localization disagree at {element_to_str(T, el)}"
    if T.weyl_action_trivial():
        kil = kilradical_trivial_action(T)
        for el in T.all_elements():
            if (el in kil) != is_kilpotent(T, el):
                return False, f"preimage of the nilradical disagrees at {element_to_str(T, el)}"
    return True, None


_CHECKS = {
    "axioms": _axioms,
    "nil_equals_nilradical": _nil,
    "radical_via_primes": _radicals,
    "nilpotent_iff_power_zero": _nilpotent_powers,
    "prime_avoids_non_nilpotent": _prime_avoidance,
    "d_intersection": _d_intersection,
    "spectral": _spectral,
    "kilpotence": _kilpotence,
}

_FINITE_ONLY = {"nil_equals_nilradical", "radical_via_primes", "nilpotent_iff_power_zero",
                "prime_avoids_non_nilpotent", "d_intersection", "spectral"}


def verify_functor(T: TambaraFunctor, seed: int = 0, label: str | None = None) -> list[Outcome]:
    label = label or T.name
    out = []
    for name in INVARIANTS:
        if name in _FINITE_ONLY and not T.is_finite:
            out.append(Outcome(label, name, None))
            continue
        ok, witness = _CHECKS[name](T, seed)
        out.append(Outcome(label, name, ok, witness))
    return out


def verify_corpus(paths, seed: int = 0, jobs: int = 1) -> list[Outcome]:
    """Outcomes for every spec, in path order regardless of ``jobs``."""
    paths = sorted(Path(p) for p in paths)

    def one(path):
        T = load_functor(path)
        return verify_functor(T, seed, label=path.stem)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(one, paths))
    else:
        chunks = [one(p) for p in paths]
    return [o for chunk in chunks for o in chunk]
