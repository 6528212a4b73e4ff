from conftest import functor
from mutations import nm_entry_changed
from tambara.io import corpus_files
from tambara.plotting import plot_spectrum, plot_verify_summary
from tambara.verify import INVARIANTS, Outcome, verify_corpus, verify_functor


def test_finite_functor_passes_everything():
    outcomes = verify_functor(functor("fp_z12_c2"))
    assert [o.invariant for o in outcomes] == list(INVARIANTS)
    assert all(o.passed for o in outcomes)


def test_burnside_skips_finite_invariants():
    outcomes = {o.invariant: o.passed for o in verify_functor(functor("burnside_c3"))}
    assert outcomes["axioms"] and outcomes["kilpotence"]
    assert outcomes["spectral"] is None


def test_corrupted_functor_fails_axioms():
    T, _ = nm_entry_changed()
    outcomes = verify_functor(T, label="broken")
    axioms = next(o for o in outcomes if o.invariant == "axioms")
    assert axioms.passed is False and axioms.witness
    assert axioms.line().startswith("FAIL  broken  axioms")


def test_jobs_keep_order():
    paths = corpus_files()[:4]
    assert verify_corpus(paths, jobs=3) == verify_corpus(paths)


def test_plots_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    plot_spectrum(["P0", "P1", "P2"], [(0, 1), (0, 2)], a)
    plot_spectrum(["P0", "P1", "P2"], [(0, 1), (0, 2)], b)
    assert a.read_bytes() == b.read_bytes()
    s = tmp_path / "s.svg"
    plot_verify_summary([Outcome("x", "axioms", True), Outcome("x", "spectral", None)], s)
    assert s.read_text().startswith("<?xml")


def test_plots_handle_empty_input(tmp_path):
    plot_spectrum([], [], tmp_path / "e.png")
    plot_verify_summary([], tmp_path / "v.png")
    assert (tmp_path / "e.png").exists() and (tmp_path / "v.png").exists()
