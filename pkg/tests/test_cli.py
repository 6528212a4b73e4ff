import json
import subprocess
import sys

import pytest

from tambara.cli import main
from tambara.io import corpus_dir

C = corpus_dir()


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_spec_json(capsys):
    code, out, _ = run(capsys, "spec", "--functor", C / "fp_z6_c2.toml")
    assert code == 0
    doc = json.loads(out)
    assert doc["spectral"]["spectral"] and len(doc["points"]) == 2


def test_spec_dot_and_figure(capsys, tmp_path):
    fig = tmp_path / "spec.png"
    code, out, _ = run(capsys, "spec", "--functor", C / "fp_z12_c2.toml", "--format", "dot", "--figure", fig)
    assert code == 0 and out.startswith("digraph spec {")
    first = fig.read_bytes()
    run(capsys, "spec", "--functor", C / "fp_z12_c2.toml", "--format", "dot", "--figure", fig)
    assert fig.read_bytes() == first and first[:4] == b"\x89PNG"


def test_output_is_deterministic(capsys):
    a = run(capsys, "primes", "--functor", C / "tables_s3_f2cubed.toml")[1]
    b = run(capsys, "primes", "--functor", C / "tables_s3_f2cubed.toml", "--jobs", "3")[1]
    assert a == b


def test_nilradical_verify(capsys):
    code, out, _ = run(capsys, "nilradical", "--functor", C / "fp_z4_c2.toml", "--verify-primes")
    doc = json.loads(out)
    assert code == 0 and doc["matches_intersection_of_primes"]
    assert doc["nilradical"] == {"C2": ["0", "2"], "e": ["0", "2"]}


def test_radical_with_element(capsys):
    code, out, _ = run(capsys, "radical", "--functor", C / "fp_z8_c2.toml", "--ideal", "4@e", "--element", "2@e")
    doc = json.loads(out)
    assert code == 0 and doc["element"]["member"]


def test_kilpotent(capsys):
    code, out, _ = run(capsys, "kilpotent", "--functor", C / "burnside_c3.toml", "--element", "t-3@C3")
    assert code == 0 and json.loads(out)["kilpotent"]
    code, out, _ = run(capsys, "kilpotent", "--functor", C / "fp_f2xf2_swap_c2.toml", "--element", "(0,1)@e")
    doc = json.loads(out)
    assert code == 0 and doc["kilpotent"] and doc["localization_oracle"]


def test_kilradical(capsys):
    code, out, _ = run(capsys, "kilradical", "--functor", C / "burnside_c2.toml")
    doc = json.loads(out)
    assert code == 0 and doc["levels"]["C2"] in ([[1, -2]], [[-1, 2]])
    code, out, _ = run(capsys, "kilradical", "--functor", C / "fp_z8_c2.toml")
    assert code == 0 and json.loads(out)["matches_preimage_of_nilradical"]


def test_check_axioms(capsys):
    code, out, _ = run(capsys, "check-axioms", "--functor", C / "burnside_c2.toml", "--budget", "40")
    assert code == 0 and json.loads(out)["passed"]


def test_check_axioms_violation(capsys, tmp_path):
    from tambara.functors import materialize
    from tambara.io import dumps, functor_to_tables, load_functor
    data = functor_to_tables(materialize(load_functor(C / "fp_z4_c2.toml")))
    data["nm"]["C2>e"][1] = 0
    p = tmp_path / "bad.json"
    p.write_text(dumps(data))
    code, _, err = run(capsys, "check-axioms", "--functor", p)
    assert code == 1 and "violated" in err


def test_compose_bispan(capsys):
    code, out, _ = run(capsys, "compose-bispan", "--group", "C2",
                       C / "bispan_c2_fold.json", C / "bispan_c2_norm.json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"sets", "left", "middle", "right"}


def test_verify(capsys, tmp_path):
    fig = tmp_path / "verify.png"
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--figure", fig, "--out", report)
    assert code == 0
    assert all(line.split()[0] in ("PASS", "SKIP") for line in out.splitlines())
    assert json.loads(report.read_text())["passed"]
    assert fig.stat().st_size > 0


@pytest.mark.parametrize("argv,code", [
    (["spec"], 2),
    (["bogus", "--functor", "x.toml"], 2),
    (["spec", "--functor", "missing.toml"], 4),
    (["spec", "--functor", str(C / "burnside_c2.toml")], 5),
    (["radical", "--functor", str(C / "fp_z4_c2.toml")], 5),
    (["kilpotent", "--functor", str(C / "burnside_c2.toml"), "--element", "q@C2"], 4),
    (["kilpotent", "--functor", str(C / "burnside_c2.toml"), "--element", "t"], 3),
    (["compose-bispan", "--group", "C2", str(C / "bispan_c2_fold.json")], 5),
])
def test_exit_codes(capsys, argv, code):
    if code == 2:
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    else:
        assert main(argv) == code
    capsys.readouterr()


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.toml"
    p.write_text("group = [\n")
    assert main(["spec", "--functor", str(p)]) == 3


def test_inconclusive_exit(capsys, monkeypatch):
    import tambara.cli as cli
    from tambara.ideals import Inconclusive

    def boom(*a, **k):
        raise Inconclusive("bound reached")

    monkeypatch.setattr(cli, "nakaoka_radical_search", boom)
    assert main(["radical", "--functor", str(C / "fp_z4_c2.toml"), "--ideal", "0@e", "--element", "2@e"]) == 6


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "tambara.cli", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip()
