"""Command line front end: ``tambara VERB --functor SPEC ...``.

Exit codes: 0 success, 1 invariant violated, 2 usage, 3 parse error,
4 unresolved reference, 5 precondition failure, 6 inconclusive search.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .axioms import check_axioms
from .bispans import BispanError, bispan_from_json, bispan_to_json, compose
from .functors import BurnsideFunctor, FixedPointFunctor, FunctorError
from .gsets import GSetError
from .ideals import IdealError, Inconclusive, is_prime, nakaoka_radical_search, nilradical_levelwise, radical
from .io import (
    SpecError,
    SpecParseError,
    UnresolvedReference,
    corpus_dir,
    corpus_files,
    dumps,
    element_to_str,
    ideal_to_json,
    load_functor,
    load_group,
    load_ideal,
    parse_element,
    read_document,
)
from .spectrum import (
    SpectrumError,
    check_spectral,
    is_kilpotent,
    kil_burnside_level,
    kilpotent_set,
    kilradical_trivial_action,
    localization_oracle_fp,
    nil_via_primes,
    radical_via_primes,
    spectrum,
    weyl_product,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PARSE, EXIT_REFERENCE, EXIT_PRECONDITION, EXIT_INCONCLUSIVE = range(7)


class Precondition(RuntimeError):
    pass


def _finite(T):
    if not T.is_finite:
        raise Precondition(f"{T.name} has infinite levels; this command needs finite levels")
    return T


def _levels_json(T, ideal) -> dict:
    return ideal_to_json(T, ideal)["levels"]


def _element_json(T, el) -> str:
    return element_to_str(T, el)


# -- verbs -------------------------------------------------------------------


def cmd_spec(args):
    T = _finite(load_functor(args.functor))
    space = spectrum(T, jobs=args.jobs)
    report = check_spectral(space)
    points = [{"index": i, "levels": _levels_json(T, P)} for i, P in enumerate(space.points)]
    edges = [list(e) for e in space.specialization_edges()]
    dot = spec_dot(T, space)
    if args.figure:
        from .plotting import plot_spectrum
        labels = [f"P{i}" for i in range(space.n)]
        plot_spectrum(labels, [tuple(e) for e in edges], args.figure, title=f"Spec {T.name}")
    if args.format == "dot":
        return dot, report.spectral
    out = {"functor": T.name, "group": T.group.name, "points": points,
           "specialization_edges": edges, "spectral": report.to_json(), "dot": dot}
    return out, report.spectral


def spec_dot(T, space) -> str:
    lines = ["digraph spec {", "  rankdir=BT;"]
    for i, P in enumerate(space.points):
        body = " ".join(f"{h}:{{{','.join(v)}}}" for h, v in _levels_json(T, P).items())
        lines.append(f'  p{i} [label="P{i}\\n{body}"];')
    for i, j in space.specialization_edges():
        lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_primes(args):
    T = _finite(load_functor(args.functor))
    space = spectrum(T, jobs=args.jobs)
    return {"functor": T.name, "count": space.n,
            "primes": [_levels_json(T, P) for P in space.points]}, True


def cmd_nilradical(args):
    T = _finite(load_functor(args.functor))
    N = nilradical_levelwise(T)
    out = {"functor": T.name, "nilradical": _levels_json(T, N)}
    ok = True
    if args.verify_primes:
        ok = nil_via_primes(T) == N
        out["matches_intersection_of_primes"] = ok
        if not ok:
            out["violated"] = "nil(T) = N(T)"
    return out, ok


def cmd_radical(args):
    T = _finite(load_functor(args.functor))
    if not args.ideal:
        raise Precondition("radical needs --ideal")
    I = load_ideal(T, args.ideal)
    r = radical(T, I)
    via = radical_via_primes(T, I)
    ok = r == via
    out = {"functor": T.name, "ideal": _levels_json(T, I), "radical": _levels_json(T, r),
           "matches_intersection_of_primes": ok, "prime": is_prime(T, I)[0]}
    if args.element:
        el = parse_element(T, args.element)
        search = nakaoka_radical_search(T, el, I)
        out["element"] = {"element": _element_json(T, el), "member": search.member,
                          "exponent": search.exponent, "reason": search.reason}
        ok = ok and search.member == (el in r)
    if not ok:
        out["violated"] = "radical(I) = intersection of primes containing I"
    return out, ok


def cmd_kilpotent(args):
    T = load_functor(args.functor)
    if not args.element:
        raise Precondition("kilpotent needs --element")
    el = parse_element(T, args.element)
    k = is_kilpotent(T, el)
    bottom = T.level(T.group.trivial)
    out = {"functor": T.name, "element": _element_json(T, el), "kilpotent": k,
           "weyl_product": bottom.element_name(weyl_product(T, el))}
    ok = True
    if isinstance(T, FixedPointFunctor):
        oracle = localization_oracle_fp(T, el)
        out["localization_oracle"] = oracle
        ok = oracle == k
        if not ok:
            out["violated"] = "kilpotence criterion = localization"
    return out, ok


def cmd_kilradical(args):
    T = load_functor(args.functor)
    if isinstance(T, BurnsideFunctor):
        G = T.group
        levels = {h.name: [list(v) for v in kil_burnside_level(G, h)] for h in T.subgroups}
        return {"functor": T.name, "kind": "lattice", "levels": levels}, True
    _finite(T)
    kil = kilpotent_set(T)
    out = {"functor": T.name, "kind": "finite",
           "levels": {h.name: [T.level(h).element_name(x) for x in sorted(v)] for h, v in kil.items()}}
    ok = True
    if T.weyl_action_trivial():
        pre = kilradical_trivial_action(T)
        ok = all(pre.level(h) == kil[h] for h in T.subgroups)
        out["matches_preimage_of_nilradical"] = ok
    else:
        out["note"] = "nontrivial Weyl action: elementwise criterion only"
    return out, ok


def cmd_check_axioms(args):
    T = load_functor(args.functor)
    rep = check_axioms(T, sample_budget=args.budget, seed=args.seed)
    return rep.to_json(), rep.passed


def cmd_compose_bispan(args):
    if not args.group:
        raise Precondition("compose-bispan needs --group")
    G = load_group(args.group)
    if len(args.inputs) < 2:
        raise Precondition("compose-bispan needs at least two bispan files (applied first to last)")
    spans = []
    for path in args.inputs:
        try:
            spans.append(bispan_from_json(G, read_document(path)))
        except KeyError as exc:
            raise SpecError(f"{path}: missing {exc}") from None
    result = spans[0]
    for b in spans[1:]:
        result = compose(b, result)
    return bispan_to_json(result), True


def cmd_verify(args):
    from .verify import verify_corpus
    directory = Path(args.inputs[0]) if args.inputs else corpus_dir()
    outcomes = verify_corpus(corpus_files(directory), seed=args.seed, jobs=args.jobs)
    for o in outcomes:
        print(o.line(), file=sys.stderr if args.out is None and args.quiet else sys.stdout)
    if args.figure:
        from .plotting import plot_verify_summary
        plot_verify_summary(outcomes, args.figure)
    ok = all(o.passed is not False for o in outcomes)
    return {"outcomes": [o.to_json() for o in outcomes], "passed": ok}, ok


VERBS = {
    "spec": cmd_spec,
    "primes": cmd_primes,
    "nilradical": cmd_nilradical,
    "radical": cmd_radical,
    "kilpotent": cmd_kilpotent,
    "kilradical": cmd_kilradical,
    "check-axioms": cmd_check_axioms,
    "compose-bispan": cmd_compose_bispan,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tambara", description="Tambara functor spectra, radicals and bispans.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("inputs", nargs="*", help="bispan files (compose-bispan) or a corpus directory (verify)")
    p.add_argument("--functor", help="functor spec (.toml or .json)")
    p.add_argument("--group", help="builtin group name or group spec file")
    p.add_argument("--element", help='element literal "expr@SUBGROUP"')
    p.add_argument("--ideal", help='ideal spec file or ";"-separated generators')
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--figure", help="also render a figure (spec, verify)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="cases per identity for check-axioms")
    p.add_argument("--verify-primes", action="store_true", help="nilradical: compare with the primes")
    p.add_argument("--quiet", action="store_true", help="verify: send the per-line log to stderr")
    return p


def _resolve_group_arg(value):
    if value and Path(value).suffix in (".toml", ".json"):
        doc = read_document(value)
        return doc.get("group", doc)
    return value


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    if args.functor is None and args.verb not in ("compose-bispan", "verify"):
        parser.error(f"{args.verb} needs --functor")
    if args.group:
        args.group = _resolve_group_arg(args.group)
    try:
        result, ok = VERBS[args.verb](args)
    except SpecParseError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    except UnresolvedReference as exc:
        return _fail(EXIT_REFERENCE, f"undefined reference: {exc}")
    except Inconclusive as exc:
        return _fail(EXIT_INCONCLUSIVE, f"inconclusive: {exc}")
    except SpecError as exc:
        return _fail(EXIT_PARSE, f"bad spec: {exc}")
    except (Precondition, SpectrumError, FunctorError, IdealError, BispanError, GSetError) as exc:
        return _fail(EXIT_PRECONDITION, f"precondition failed: {exc}")
    text = result if isinstance(result, str) else dumps(result)
    if args.out:
        Path(args.out).write_text(text)
    elif args.verb != "verify":
        sys.stdout.write(text)
    if not ok:
        print(f"invariant violated in {args.verb}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _fail(code: int, message: str) -> int:
    print(f"tambara: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
