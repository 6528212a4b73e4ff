import json

import pytest

from conftest import functor
from tambara.functors import Element, FixedPointFunctor
from tambara.io import (
    SpecError,
    SpecParseError,
    UnresolvedReference,
    corpus_files,
    dumps,
    element_to_str,
    functor_from_tables,
    functor_to_tables,
    load_functor,
    load_group,
    load_ideal,
    parse_element,
    read_document,
)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_corpus_loads():
    names = {p.stem for p in corpus_files()}
    assert {"fp_z4_c2", "burnside_s3", "tables_s3_f2cubed"} <= names
    for p in corpus_files():
        load_functor(p)


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
    assert dumps({}).endswith("\n")


def test_tables_roundtrip():
    T = functor("fp_f2xf2_swap_c2")
    data = json.loads(dumps(functor_to_tables(T)))
    U = functor_from_tables(data)
    assert functor_to_tables(U) == functor_to_tables(T)
    assert U.level_sizes() == T.level_sizes()


def test_tables_file_reproduces_permutation_functor():
    from tambara.groups import builtin_group
    from tambara.io import permute_action
    from tambara.rings import builtin_ring
    G = builtin_group("S3")
    R = builtin_ring("F2^3")
    fresh = FixedPointFunctor(G, R, permute_action(G, R), name="tables_s3_f2cubed")
    assert functor_to_tables(functor("tables_s3_f2cubed")) == functor_to_tables(fresh)


def test_parse_burnside_elements():
    A = functor("burnside_c3")
    C3 = A.group.whole
    assert parse_element(A, "t-3@C3") == Element(C3, (1, -3))
    assert parse_element(A, "2[C3/e] + 1@C3") == Element(C3, (2, 1))
    assert element_to_str(A, Element(C3, (1, -3))) == "[C3/e]-3@C3"
    with pytest.raises(UnresolvedReference):
        parse_element(A, "q@C3")
    with pytest.raises(UnresolvedReference):
        parse_element(A, "t@C5")
    with pytest.raises(SpecParseError):
        parse_element(A, "t")


def test_parse_finite_elements():
    T = functor("fp_f2xf2_swap_c2")
    e = T.group.trivial
    x = parse_element(T, "(1,0)@e")
    assert element_to_str(T, x) == "(1,0)@e"
    assert parse_element(T, "(1,0)+(0,1)@e").value == T.level(e).one
    with pytest.raises(SpecError):
        parse_element(T, "(1,0)@C2")


def test_load_ideal_forms(tmp_path):
    T = functor("fp_z4_c2")
    a = load_ideal(T, "2@e")
    b = load_ideal(T, {"levels": {"e": [0, 2]}})
    p = write(tmp_path, "i.toml", 'generators = ["2@e"]\n')
    assert a == b == load_ideal(T, str(p))
    with pytest.raises(SpecError):
        load_ideal(T, {"levels": {"C2": [0, 2]}})
    A = functor("burnside_c2")
    g = load_ideal(A, "2@e")
    assert g.contains(A.group.whole, (2, 0))


def test_bad_documents(tmp_path):
    with pytest.raises(UnresolvedReference):
        read_document(tmp_path / "missing.toml")
    with pytest.raises(SpecParseError):
        read_document(write(tmp_path, "bad.toml", "name = \n"))
    with pytest.raises(SpecError):
        load_functor(write(tmp_path, "nokind.toml", 'group = "C2"\n[functor]\nkind = "weird"\n'))
    with pytest.raises(UnresolvedReference):
        load_functor(write(tmp_path, "nogroup.toml", 'group = "C7x"\n[functor]\nkind = "burnside"\n'))
    with pytest.raises(SpecError):
        load_functor(write(tmp_path, "noaut.toml",
                           'group = "C2"\n[functor]\nkind = "fixed_point"\nring = "Z/4"\n'
                           'action = [[0, 1, 2, 3], [0, 0, 0, 0]]\n'))


def test_group_specs():
    assert load_group("S3").order == 6
    assert load_group({"table": [[0, 1], [1, 0]], "name": "C2"}).order == 2
    with pytest.raises(SpecError):
        load_group({"table": [[0, 1], [0, 1]]})
