"""Spec files (TOML or JSON) for groups, functors, ideals and elements.

A functor spec names a group and a functor kind::

    name = "fp_z4_c2"
    group = "C2"

    [functor]
    kind = "fixed_point"     # or "burnside", "tables"
    ring = "Z/4"
    action = "trivial"       # "swap", "permute", "frobenius" or explicit tables

``kind = "tables"`` reads explicit level and structure-map tables, either
inline under ``[functor.tables]`` or from ``functor.file`` (JSON written by
:func:`functor_to_tables`).
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .burnside import BurnsideLevel
from .functors import BurnsideFunctor, Element, FixedPointFunctor, FunctorError, TableFunctor, TambaraFunctor
from .groups import FiniteGroup, GroupError, builtin_group
from .ideals import GeneratedIdeal, IdealError, ideal_closure, ideal_from_levels
from .rings import FiniteRing, RingError, builtin_ring


class SpecError(ValueError):
    """Malformed or unresolvable spec file."""


class SpecParseError(SpecError):
    """Text that does not parse (TOML, JSON or element literals)."""


class UnresolvedReference(SpecError):
    """A name that does not resolve: file, group, ring, subgroup or symbol."""


# -- raw loading ----------------------------------------------------------------


def read_document(path: str | Path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UnresolvedReference(f"cannot read {path}: {exc.strerror}") from None
    try:
        if path.suffix == ".json":
            return json.loads(text)
        return tomllib.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise SpecParseError(f"cannot parse {path}: {exc}") from None


def dumps(obj: Any) -> str:
    """Canonical JSON text (sorted keys, fixed indentation, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- groups ------------------------------------------------------------------------


def load_group(spec) -> FiniteGroup:
    """A builtin name (``"C2"``, ``"S3"``, ...) or ``{"table": ..., "name": ..., "points": ...}``."""
    try:
        if isinstance(spec, str):
            return builtin_group(spec)
        if isinstance(spec, dict):
            if "builtin" in spec:
                return builtin_group(spec["builtin"])
            return FiniteGroup(spec["table"], name=spec.get("name", "G"), points=spec.get("points"))
    except GroupError as exc:
        if isinstance(spec, str) or "builtin" in spec:
            raise UnresolvedReference(str(exc)) from None
        raise SpecError(str(exc)) from None
    except KeyError as exc:
        raise SpecError(f"group spec lacks {exc}") from None
    raise SpecError(f"unrecognized group spec {spec!r}")


def group_to_json(G: FiniteGroup):
    try:
        if builtin_group(G.name).mul == G.mul:
            return G.name
    except GroupError:
        pass
    out = {"name": G.name, "table": [list(r) for r in G.mul]}
    if G.points is not None:
        out["points"] = [list(p) for p in G.points]
    return out


# -- rings and actions ---------------------------------------------------------------


def load_ring(spec) -> FiniteRing:
    try:
        if isinstance(spec, str):
            try:
                return builtin_ring(spec)
            except RingError as exc:
                raise UnresolvedReference(str(exc)) from None
        return FiniteRing(spec["add"], spec["mul"], spec["zero"], spec["one"],
                          names=spec.get("names"), name=spec.get("name", "R"))
    except RingError as exc:
        raise SpecError(str(exc)) from None
    except KeyError as exc:
        raise SpecError(f"ring spec lacks {exc}") from None


def _component_count(ring: FiniteRing) -> int:
    names = ring.names
    if not names or not names[0].startswith("("):
        raise SpecError(f"ring {ring.name} is not a product ring")
    return names[0].count(",") + 1


def permute_action(G: FiniteGroup, ring: FiniteRing) -> list[list[int]]:
    """``G`` permuting the factors of a power ring through ``G.points``."""
    if G.points is None:
        raise SpecError(f"group {G.name} has no permutation representation")
    k = _component_count(ring)
    if len(G.points[0]) != k:
        raise SpecError(f"{G.name} permutes {len(G.points[0])} points but {ring.name} has {k} factors")
    coords = {a: ring.names[a][1:-1].split(",") for a in ring.elements}
    index = {tuple(v): a for a, v in coords.items()}
    tables = []
    for g in G.elements:
        p = G.points[g]
        row = []
        for a in ring.elements:
            c = coords[a]
            moved = [None] * k
            for i in range(k):
                moved[p[i]] = c[i]
            row.append(index[tuple(moved)])
        tables.append(row)
    return tables


def frobenius_action(G: FiniteGroup, ring: FiniteRing) -> list[list[int]]:
    """A cyclic group whose generator ``1`` acts by ``r -> r^p`` (``p`` the characteristic)."""
    if G.points is None or not G.name.startswith("C"):
        raise SpecError("frobenius action needs a cyclic group")
    p = next(n for n in range(2, len(ring) + 1) if ring.times(n, ring.one) == ring.zero)
    tables = []
    for g in G.elements:
        row = []
        for a in ring.elements:
            x = a
            for _ in range(g):
                x = ring.power(x, p)
            row.append(x)
        tables.append(row)
    return tables


def load_action(G: FiniteGroup, ring: FiniteRing, spec):
    if spec in (None, "trivial"):
        return None
    if spec in ("swap", "permute"):
        return permute_action(G, ring)
    if spec == "frobenius":
        return frobenius_action(G, ring)
    if isinstance(spec, list):
        return [list(row) for row in spec]
    raise SpecError(f"unknown action {spec!r}")


# -- functors -------------------------------------------------------------------------


def functor_to_tables(T: TambaraFunctor) -> dict:
    """Serialize a finite functor; elements become positions in each level."""
    G = T.group
    subs = T.subgroups
    pos = {h: {x: i for i, x in enumerate(T.elements(h))} for h in subs}
    levels = {h.name: T.level(h).table_dict() for h in subs}
    res, tr, nm, conj = {}, {}, {}, {}
    for k in subs:
        for h in subs:
            if h < k:
                key = f"{k.name}>{h.name}"
                res[key] = [pos[h][T.res(k, h, x)] for x in T.elements(k)]
                tr[key] = [pos[k][T.tr(k, h, x)] for x in T.elements(h)]
                nm[key] = [pos[k][T.nm(k, h, x)] for x in T.elements(h)]
    for g in G.elements:
        for h in subs:
            if g in h:
                continue
            gh = G.conjugate(g, h)
            conj[f"{g}@{h.name}"] = [pos[gh][T.conj(g, h, x)] for x in T.elements(h)]
    return {"group": group_to_json(G), "name": T.name, "levels": levels,
            "res": res, "tr": tr, "nm": nm, "conj": conj}


def functor_from_tables(data: dict, group: FiniteGroup | None = None) -> TableFunctor:
    G = group or load_group(data["group"])
    try:
        levels = {G.subgroup_by_name(n): load_ring(spec) for n, spec in data["levels"].items()}

        def pair(key):
            a, b = key.split(">")
            return G.subgroup_by_name(a), G.subgroup_by_name(b)

        res, tr, nm, conj = {}, {}, {}, {}
        for key, row in data.get("res", {}).items():
            res[pair(key)] = dict(enumerate(row))
        for key, row in data.get("tr", {}).items():
            tr[pair(key)] = dict(enumerate(row))
        for key, row in data.get("nm", {}).items():
            nm[pair(key)] = dict(enumerate(row))
        for key, row in data.get("conj", {}).items():
            g, h = key.split("@")
            conj[(int(g), G.subgroup_by_name(h))] = dict(enumerate(row))
    except GroupError as exc:
        raise UnresolvedReference(f"bad functor tables: {exc}") from None
    except (KeyError, ValueError) as exc:
        raise SpecError(f"bad functor tables: {exc}") from None
    try:
        return TableFunctor(G, levels, res, tr, nm, conj, name=data.get("name", "T"))
    except FunctorError as exc:
        raise SpecError(str(exc)) from None


def build_functor(doc: dict, base: Path | None = None) -> TambaraFunctor:
    if "functor" not in doc:
        raise SpecError("spec has no [functor] table")
    fspec = doc["functor"]
    kind = fspec.get("kind")
    name = doc.get("name")
    if kind == "tables":
        if "file" in fspec:
            path = Path(fspec["file"])
            if base is not None and not path.is_absolute():
                path = base / path
            data = read_document(path)
        else:
            data = fspec.get("tables") or {}
        group = load_group(doc["group"]) if "group" in doc else None
        T = functor_from_tables(data, group)
        if name:
            T.name = name
        return T
    if "group" not in doc:
        raise SpecError("spec has no group")
    G = load_group(doc["group"])
    if kind == "burnside":
        T = BurnsideFunctor(G)
    elif kind == "fixed_point":
        ring = load_ring(fspec.get("ring", "F2"))
        action = load_action(G, ring, fspec.get("action"))
        try:
            T = FixedPointFunctor(G, ring, action)
        except FunctorError as exc:
            raise SpecError(str(exc)) from None
    else:
        raise SpecError(f"unknown functor kind {kind!r}")
    if name:
        T.name = name
    return T


def load_functor(path: str | Path) -> TambaraFunctor:
    path = Path(path)
    doc = read_document(path)
    if "functor" not in doc and "levels" in doc:
        return functor_from_tables(doc)
    return build_functor(doc, path.parent)


# -- elements ----------------------------------------------------------------------------

_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*?\s*)?(\[[^\]]*\]|[A-Za-z_][\w]*)?\s*")


def _linear(lvl, expr: str):
    """Integer-linear combination of named symbols (Burnside levels)."""
    symbols = lvl.symbol_table()
    total = lvl.zero
    pos = 0
    expr = expr.strip()
    if not expr:
        raise SpecParseError("empty element expression")
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if not m or m.end() == pos:
            raise SpecParseError(f"cannot parse element expression {expr!r}")
        sign, coef, sym = m.groups()
        if coef is None and sym is None:
            raise SpecParseError(f"cannot parse element expression {expr!r}")
        n = int(coef) if coef is not None else 1
        if sign == "-":
            n = -n
        if sym is None:
            vec = lvl.times(n, lvl.one)
        elif sym in symbols:
            vec = lvl.times(n, symbols[sym])
        else:
            raise UnresolvedReference(f"unknown symbol {sym!r}; known: {sorted(symbols)}")
        total = lvl.add(total, vec)
        pos = m.end()
    return total


def parse_element(T: TambaraFunctor, text: str) -> Element:
    """``"expr@SUBGROUP"``; finite levels take an element name or label."""
    if "@" not in text:
        raise SpecParseError(f"element literal {text!r} needs '@SUBGROUP'")
    expr, _, sub = text.rpartition("@")
    try:
        h = T.group.subgroup_by_name(sub)
    except GroupError as exc:
        raise UnresolvedReference(str(exc)) from None
    lvl = T.level(h)
    if isinstance(lvl, BurnsideLevel):
        return Element(h, _linear(lvl, expr))
    try:
        x = lvl.parse_element(expr)
    except RingError:
        # fall back to integer combinations of named elements
        x = _ring_linear(lvl, expr)
    if x not in lvl:
        raise SpecError(f"{expr!r} is not in level {h.name}")
    return Element(h, x)


def _ring_linear(lvl: FiniteRing, expr: str):
    parts = re.findall(r"[+-]?[^+-]+", expr.replace(" ", ""))
    if not parts:
        raise SpecParseError(f"cannot parse element {expr!r}")
    total = lvl.zero
    for p in parts:
        sign = -1 if p.startswith("-") else 1
        body = p.lstrip("+-")
        coef, _, sym = body.rpartition("*")
        try:
            n = int(coef) if coef else 1
            x = lvl.parse_element(sym)
        except (ValueError, RingError):
            raise SpecParseError(f"cannot parse element {expr!r} in {lvl.name}") from None
        total = lvl.add(total, lvl.times(sign * n, x))
    return total


def element_to_str(T: TambaraFunctor, el: Element) -> str:
    return f"{T.level(el.subgroup).element_name(el.value)}@{el.subgroup.name}"


# -- ideals ---------------------------------------------------------------------------------


def load_ideal(T: TambaraFunctor, spec):
    """An ideal from a file path, a ``;``-separated generator list, or a parsed document.

    Documents carry either ``generators`` (closed up) or explicit ``levels``.
    """
    if isinstance(spec, (str, Path)) and Path(spec).suffix in (".toml", ".json") and Path(spec).exists():
        spec = read_document(spec)
    if isinstance(spec, str):
        spec = {"generators": [s for s in spec.split(";") if s.strip()]}
    try:
        if "levels" in spec:
            return ideal_from_levels(T, spec["levels"])
        gens = [parse_element(T, g) for g in spec.get("generators", [])]
        if T.is_finite:
            return ideal_closure(T, gens)
        return GeneratedIdeal(T, gens)
    except IdealError as exc:
        raise SpecError(str(exc)) from None


def ideal_to_json(T: TambaraFunctor, ideal) -> dict:
    if getattr(ideal, "kind", "") == "finite":
        return {"kind": "finite",
                "levels": {h.name: [T.level(h).element_name(x) for x in sorted(ideal.level(h))]
                           for h in T.subgroups}}
    return ideal.to_json()


def corpus_dir() -> Path:
    return Path(__file__).parent / "corpus"


def corpus_files(directory: str | Path | None = None) -> list[Path]:
    d = Path(directory) if directory is not None else corpus_dir()
    if not d.is_dir():
        raise UnresolvedReference(f"no corpus directory {d}")
    return sorted(p for p in d.glob("*.toml") if p.is_file())
