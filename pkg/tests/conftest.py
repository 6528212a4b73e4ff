from __future__ import annotations

from pathlib import Path

import pytest

from tambara.io import corpus_dir, corpus_files, load_functor

ACCEPTANCE_LINES: list[str] = []

# acceptance criteria name these functors explicitly
NAMED_FINITE = [
    "fp_f2xf2_swap_c2",
    "fp_f4_frob_c2",
    "fp_z4_c2",
    "fp_z4_c3",
    "fp_z8_c2",
    "tables_s3_f2cubed",
]
BURNSIDE = ["burnside_c2", "burnside_c3", "burnside_c4", "burnside_s3"]

_cache: dict = {}


def functor(name: str):
    if name not in _cache:
        _cache[name] = load_functor(corpus_dir() / f"{name}.toml")
    return _cache[name]


def finite_corpus() -> list[str]:
    names = [p.stem for p in corpus_files()]
    return [n for n in names if functor(n).is_finite]


def fixed_point_corpus() -> list[str]:
    from tambara.functors import FixedPointFunctor
    return [n for n in finite_corpus() if isinstance(functor(n), FixedPointFunctor)]


@pytest.fixture(scope="session")
def corpus():
    return functor


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_values(T, X, rng):
    """One random level element per orbit of ``X``."""
    from tambara.evaluation import orbit_levels
    out = []
    for h in orbit_levels(X):
        lvl = T.level(h)
        if getattr(lvl, "is_finite", False):
            out.append(rng.choice(lvl.elements))
        else:
            out.append(tuple(rng.randint(-2, 2) for _ in range(lvl.rank)))
    return out


def functoriality_holds(T, b1, b2, rng) -> bool:
    from tambara.bispans import compose
    from tambara.evaluation import evaluate_bispan
    vals = random_values(T, b1.source, rng)
    direct = evaluate_bispan(T, compose(b2, b1), vals)
    stepwise = evaluate_bispan(T, b2, evaluate_bispan(T, b1, vals))
    lvls = [T.level(h) for h in _levels_of(b2.target)]
    return len(direct) == len(stepwise) and all(l.eq(a, b) for l, a, b in zip(lvls, direct, stepwise))


def _levels_of(X):
    from tambara.evaluation import orbit_levels
    return orbit_levels(X)
