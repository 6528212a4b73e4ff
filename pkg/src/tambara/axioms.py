"""Axiom checker for Tambara functors.

Each identity is checked on every element (finite levels) or on a seeded
sample of the coefficient window ``[-window, window]`` (Burnside levels).
A failing identity keeps its first witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .bispans import compose, from_generator
from .burnside import BurnsideLevel
from .evaluation import evaluate_bispan
from .functors import FunctorError, TambaraFunctor
from .gsets import GSet, fold_map, quotient_map


@dataclass
class AxiomCheck:
    name: str
    cases: int = 0
    failures: int = 0
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": self.failures,
                "passed": self.passed, "witness": self.witness}


@dataclass
class AxiomReport:
    functor: str
    exhaustive: bool
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def families(self) -> set[str]:
        """Failing identity names without their ``[...]`` subgroup suffix."""
        return {n.split("[")[0] for n in self.failed}

    def to_json(self) -> dict:
        return {"functor": self.functor, "exhaustive": self.exhaustive, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}


class _Checker:
    def __init__(self, T: TambaraFunctor, budget, rng: random.Random, window: int):
        self.T = T
        self.budget = budget
        self.rng = rng
        self.window = window
        self.checks: dict[str, AxiomCheck] = {}

    def elements(self, h):
        lvl = self.T.level(h)
        if isinstance(lvl, BurnsideLevel):
            return [tuple(v) for v in lvl.window(self.window)]
        return list(lvl.elements)

    def cases(self, pools):
        """Cartesian product of the pools, sampled down to the budget when too large."""
        total = 1
        for p in pools:
            total *= len(p)
        if self.budget is None or total <= self.budget:
            return itertools.product(*pools)
        return (tuple(self.rng.choice(p) for p in pools) for _ in range(self.budget))

    def run(self, name: str, pools, predicate, describe=None):
        check = self.checks.setdefault(name, AxiomCheck(name))
        for args in self.cases(pools):
            check.cases += 1
            try:
                ok = predicate(*args)
                err = None
            except (FunctorError, KeyError, IndexError, TypeError, ValueError) as exc:
                ok, err = False, f"{type(exc).__name__}: {exc}"
            if not ok:
                check.failures += 1
                if check.witness is None:
                    check.witness = err or (describe(*args) if describe else f"inputs {args!r}")

    def flag(self, name: str, ok: bool, witness: str | None = None):
        check = self.checks.setdefault(name, AxiomCheck(name))
        check.cases += 1
        if not ok:
            check.failures += 1
            if check.witness is None:
                check.witness = witness


def check_axioms(T: TambaraFunctor, sample_budget: int | None = None, seed: int = 0,
                 window: int = 3, reciprocity: bool = True) -> AxiomReport:
    """Check every structural identity of a Tambara functor; see :class:`AxiomReport`.

    Finite functors are checked exhaustively unless ``sample_budget`` is set;
    functors with integer levels default to a budget of 300 cases per identity.
    """
    finite = T.is_finite
    if not finite and sample_budget is None:
        sample_budget = 300
    c = _Checker(T, sample_budget, random.Random(seed), window)
    G = T.group
    subs = T.subgroups

    for h in subs:
        lvl = T.level(h)
        tag = f"[{h.name}]"
        if hasattr(lvl, "check_axioms"):
            bad = lvl.check_axioms()
            c.flag("level_ring" + tag, not bad, ", ".join(bad) or None)
        xs = c.elements(h)
        for g in h:
            c.run("weyl_trivial" + tag, [xs], lambda x, g=g, h=h: lvl.eq(T.conj(g, h, x), x),
                  lambda x, g=g: f"conj by {g} in H moves {x!r}")

    # conjugation
    for h in subs:
        xs = c.elements(h)
        for g in G.elements:
            gh = G.conjugate(g, h)
            lg = T.level(gh)
            tag = f"[{g}:{h.name}]"
            c.run("conj_additive" + tag, [xs, xs],
                  lambda x, y, g=g, h=h, lg=lg: lg.eq(T.conj(g, h, T.level(h).add(x, y)),
                                                       lg.add(T.conj(g, h, x), T.conj(g, h, y))))
            c.run("conj_multiplicative" + tag, [xs, xs],
                  lambda x, y, g=g, h=h, lg=lg: lg.eq(T.conj(g, h, T.level(h).mul(x, y)),
                                                       lg.mul(T.conj(g, h, x), T.conj(g, h, y))))
            c.flag("conj_unit" + tag, _safe(lambda g=g, h=h, lg=lg: lg.eq(T.conj(g, h, T.level(h).one), lg.one)),
                   f"conj by {g} does not fix 1")
            for g2 in G.elements:
                c.run("conj_composition" + tag, [xs],
                      lambda x, g=g, g2=g2, h=h: T.level(G.conjugate(G.mul[g2][g], h)).eq(
                          T.conj(g2, G.conjugate(g, h), T.conj(g, h, x)), T.conj(G.mul[g2][g], h, x)))

    # restriction, transfer, norm on each strict pair
    for k in subs:
        for h in subs:
            if not h < k:
                continue
            lk, lh = T.level(k), T.level(h)
            xk, xh = c.elements(k), c.elements(h)
            tag = f"[{k.name}>{h.name}]"
            c.run("res_additive" + tag, [xk, xk],
                  lambda x, y, k=k, h=h, lk=lk, lh=lh: lh.eq(T.res(k, h, lk.add(x, y)),
                                                              lh.add(T.res(k, h, x), T.res(k, h, y))))
            c.run("res_multiplicative" + tag, [xk, xk],
                  lambda x, y, k=k, h=h, lk=lk, lh=lh: lh.eq(T.res(k, h, lk.mul(x, y)),
                                                              lh.mul(T.res(k, h, x), T.res(k, h, y))))
            c.flag("res_unit" + tag, lh.eq(T.res(k, h, lk.one), lh.one),
                   f"res(1) = {T.res(k, h, lk.one)!r}" if _safe(lambda: T.res(k, h, lk.one)) else "res(1) undefined")
            c.run("tr_additive" + tag, [xh, xh],
                  lambda x, y, k=k, h=h, lk=lk, lh=lh: lk.eq(T.tr(k, h, lh.add(x, y)),
                                                              lk.add(T.tr(k, h, x), T.tr(k, h, y))))
            c.flag("tr_zero" + tag, _safe(lambda: lk.eq(T.tr(k, h, lh.zero), lk.zero)), "tr(0) is not 0")
            c.run("nm_multiplicative" + tag, [xh, xh],
                  lambda x, y, k=k, h=h, lk=lk, lh=lh: lk.eq(T.nm(k, h, lh.mul(x, y)),
                                                              lk.mul(T.nm(k, h, x), T.nm(k, h, y))))
            c.flag("nm_unit" + tag, _safe(lambda: lk.eq(T.nm(k, h, lh.one), lk.one)), "nm(1) is not 1")
            c.flag("nm_zero" + tag, _safe(lambda: lk.eq(T.nm(k, h, lh.zero), lk.zero)), "nm(0) is not 0")
            c.run("frobenius" + tag, [xh, xk],
                  lambda x, y, k=k, h=h, lk=lk, lh=lh: lk.eq(T.tr(k, h, lh.mul(x, T.res(k, h, y))),
                                                              lk.mul(T.tr(k, h, x), y)))
            for g in G.elements:
                gk, gh = G.conjugate(g, k), G.conjugate(g, h)
                ltag = f"[{g}:{k.name}>{h.name}]"
                c.run("conj_res" + ltag, [xk],
                      lambda x, g=g, k=k, h=h, gk=gk, gh=gh: T.level(gh).eq(
                          T.conj(g, h, T.res(k, h, x)), T.res(gk, gh, T.conj(g, k, x))))
                c.run("conj_tr" + ltag, [xh],
                      lambda x, g=g, k=k, h=h, gk=gk, gh=gh: T.level(gk).eq(
                          T.conj(g, k, T.tr(k, h, x)), T.tr(gk, gh, T.conj(g, h, x))))
                c.run("conj_nm" + ltag, [xh],
                      lambda x, g=g, k=k, h=h, gk=gk, gh=gh: T.level(gk).eq(
                          T.conj(g, k, T.nm(k, h, x)), T.nm(gk, gh, T.conj(g, h, x))))

    # transitivity
    for l in subs:
        for k in subs:
            if not k < l:
                continue
            for h in subs:
                if not h < k:
                    continue
                tag = f"[{l.name}>{k.name}>{h.name}]"
                ll, lh = T.level(l), T.level(h)
                c.run("res_transitive" + tag, [c.elements(l)],
                      lambda x, l=l, k=k, h=h, lh=lh: lh.eq(T.res(k, h, T.res(l, k, x)), T.res(l, h, x)))
                c.run("tr_transitive" + tag, [c.elements(h)],
                      lambda x, l=l, k=k, h=h, ll=ll: ll.eq(T.tr(l, k, T.tr(k, h, x)), T.tr(l, h, x)))
                c.run("nm_transitive" + tag, [c.elements(h)],
                      lambda x, l=l, k=k, h=h, ll=ll: ll.eq(T.nm(l, k, T.nm(k, h, x)), T.nm(l, h, x)))

    # double coset formulas: res^K_L o tr^K_H and res^K_L o nm^K_H
    for k in subs:
        for h in subs:
            if not h <= k:
                continue
            for l in subs:
                if not l <= k or (h == k and l == k):
                    continue
                tag = f"[{k.name};{l.name};{h.name}]"
                reps = G.double_coset_reps(l, h, within=k)
                ll = T.level(l)

                def pieces(x, k=k, h=h, l=l, reps=reps):
                    for gamma in reps:
                        ghg = G.conjugate(gamma, h)
                        inner = G.intersect(h, G.conjugate(G.inv[gamma], l))
                        y = T.conj(gamma, inner, T.res(h, inner, x))
                        yield G.intersect(l, ghg), y

                c.run("double_coset_tr" + tag, [c.elements(h)],
                      lambda x, k=k, h=h, l=l, ll=ll, pieces=pieces: ll.eq(
                          T.res(k, l, T.tr(k, h, x)), ll.sum(T.tr(l, m, y) for m, y in pieces(x))))
                c.run("double_coset_nm" + tag, [c.elements(h)],
                      lambda x, k=k, h=h, l=l, ll=ll, pieces=pieces: ll.eq(
                          T.res(k, l, T.nm(k, h, x)), ll.prod(T.nm(l, m, y) for m, y in pieces(x))))

    if reciprocity:
        _check_reciprocity(T, c)

    return AxiomReport(T.name, finite and sample_budget is None, list(c.checks.values()))


def _safe(thunk) -> bool:
    try:
        return bool(thunk())
    except (FunctorError, KeyError, IndexError, TypeError, ValueError):
        return False


def _check_reciprocity(T: TambaraFunctor, c: _Checker) -> None:
    """``nm(a + b)`` against the bispan ``N_q o T_fold`` rewritten to normal form."""
    G = T.group
    for k in T.subgroups:
        for h in T.subgroups:
            if not h < k:
                continue
            fold = fold_map(GSet.orbit(G, h))
            q = quotient_map(G, h, k)
            b = compose(from_generator("N", q), from_generator("T", fold))
            lh, lk = T.level(h), T.level(k)
            xs = c.elements(h)
            c.run(f"tambara_reciprocity[{k.name}>{h.name}]", [xs, xs],
                  lambda x, y, b=b, k=k, h=h, lh=lh, lk=lk: lk.eq(
                      evaluate_bispan(T, b, [x, y])[0], T.nm(k, h, lh.add(x, y))),
                  lambda x, y: f"nm({x!r} + {y!r}) disagrees with the exponential formula")
