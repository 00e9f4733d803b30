import json
from importlib import resources

import jsonschema
import pytest

from operadlab.cli import main, EXIT_OK, EXIT_PARSE, EXIT_INCONSISTENT


@pytest.fixture(scope="session")
def schema():
    text = resources.files("operadlab").joinpath("data/report_schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    return code, doc


# -- check -------------------------------------------------------------------

def test_check_g5(capsys):
    code, out, _ = run(capsys, "check", "G5", "--cyclic", "--dihedral")
    assert code == EXIT_OK
    assert "cyclic:   no" in out and "dihedral: yes" in out


def test_check_llq_hopf_json(capsys, schema):
    code, doc = run_json(capsys, schema, "check", "LLq", "--hopf", "--json")
    assert code == EXIT_OK
    assert doc["hopf"] == {"verdict": "unique", "witness": "-1/4*q + 1/4"}


def test_check_lie_hopf(capsys):
    code, out, _ = run(capsys, "check", "Lie", "--hopf")
    assert code == EXIT_OK
    assert "hopf:     none" in out


def test_check_literal_text(capsys):
    code, out, _ = run(capsys, "check",
                       "gen m: none; rel m(m(x,y),z) - m(x,m(y,z)) = 0;")
    assert code == EXIT_OK
    assert "cyclic:   yes" in out


def test_check_file(tmp_path, capsys):
    f = tmp_path / "pres.op"
    f.write_text("operad FromFile { gen b: anti; "
                 "rel b(x,b(y,z)) + b(y,b(z,x)) + b(z,b(x,y)) = 0; }")
    code, out, _ = run(capsys, "check", str(f))
    assert code == EXIT_OK and "FromFile" in out


def test_check_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "check", "rel m(m(x,y),z")
    assert code == EXIT_PARSE
    assert "unbalanced parentheses" in err


def test_check_specialization_pole(capsys):
    code, _, err = run(capsys, "check", "LLq_depolarized", "--q", "-3")
    assert code == EXIT_PARSE and "pole" in err


# -- table --------------------------------------------------------------------

EXPECTED_TABLE = {
    "Ass": ("yes", True, True, "unique"),
    "Poiss": ("yes", True, True, "unique"),
    "LLq": ("yes", True, True, "unique"),
    "LLinf": ("yes", True, True, "none"),
    "Vinberg": ("yes", False, False, "none"),
    "PreLie": ("yes", False, False, "none"),
    "G4": ("no", True, True, "none"),
    "G5": ("no", False, True, "none"),
    "G6": ("yes", True, True, "none"),
}


def test_table_matches_expectations(capsys, schema):
    code, doc = run_json(capsys, schema, "table", "--json")
    assert code == EXIT_OK
    assert doc["koszul_note"] == "cited, not computed"
    got = {r["operad"]: (r["koszul"]["value"], r["cyclic"], r["dihedral"],
                         r["hopf"]["verdict"]) for r in doc["rows"]}
    assert got == EXPECTED_TABLE
    by_name = {r["operad"]: r for r in doc["rows"]}
    assert by_name["LLq"]["hopf"]["witness"] == "-1/4*q + 1/4"
    assert by_name["Ass"]["hopf"]["witness"] == "0"


def test_table_text_marks_cited_column(capsys):
    code, out, _ = run(capsys, "table")
    assert code == EXIT_OK
    assert "cited from the literature, not computed" in out


def test_table_deterministic(capsys):
    _, out1, _ = run(capsys, "table", "--json")
    _, out2, _ = run(capsys, "table", "--json")
    assert out1 == out2


# -- decompose / polarize --------------------------------------------------------

def test_decompose_free_type3(capsys, schema):
    code, doc = run_json(capsys, schema, "decompose", "--builtin", "free_type3",
                         "--json")
    assert code == EXIT_OK
    assert doc["gamma_plus"] == {"dim": 6, "decomposition": "1·id ⊕ 1·sgn ⊕ 2·V22"}
    assert doc["gamma_minus"] == {"dim": 6, "decomposition": "1·V31 ⊕ 1·V211"}


def test_decompose_27_dim(capsys, schema):
    code, doc = run_json(capsys, schema, "decompose", "CyclicNotDihedral", "--json")
    assert doc["gamma_plus"]["dim"] == 15
    assert doc["gamma_plus"]["decomposition"] == "3·id ⊕ 1·sgn ⊕ 4·V22 ⊕ 1·V31"
    assert doc["gamma_minus"]["decomposition"] == "2·V31 ⊕ 2·V211"
    assert doc["relations"] == {"dim": 4, "decomposition": "1·id ⊕ 1·V31"}


def test_polarize_ass_roundtrips(capsys, schema):
    code, doc = run_json(capsys, schema, "polarize", "Ass", "--json")
    assert code == EXIT_OK
    from operadlab import parse_presentation, builtin, polarize_map
    p = parse_presentation(doc["polarized"])
    target = polarize_map(builtin("Ass").shape, p.shape,
                          {"m": ("m_s", "m_a")}).apply_subspace(builtin("Ass").R)
    assert p.R == target


# -- iso ---------------------------------------------------------------------------

def test_iso_star(capsys, schema):
    code, doc = run_json(capsys, schema, "iso", "LLq", "Ass", "--map", "star",
                         "--json")
    assert code == EXIT_OK and doc["isomorphic"] is True


def test_iso_opposite(capsys):
    code, out, _ = run(capsys, "iso", "PreLie", "Vinberg", "--map", "opposite")
    assert code == EXIT_OK and "isomorphism" in out


def test_iso_explicit_map(capsys):
    code, out, _ = run(capsys, "iso", "Ass", "Ass", "--map", "m = m(x,y)")
    assert code == EXIT_OK and " isomorphism" in out


def test_iso_degenerate_map_errors(capsys):
    code, _, err = run(capsys, "iso", "LLq", "Ass", "--map", "star", "--q", "0")
    assert code == EXIT_PARSE and "not invertible" in err


# -- quantize / mlab -----------------------------------------------------------------

def test_quantize_report(capsys, schema):
    code, doc = run_json(capsys, schema, "quantize", "--example", "moyal",
                         "--order", "3", "--degree", "3", "--mutate", "--json")
    assert code == EXIT_OK
    assert doc["commutative_mod_t"] and doc["associative"]
    assert doc["ll_axioms"] is True and doc["first_failure"] is None
    assert doc["roundtrip"] is True
    assert doc["mutated_ll_axioms"] is False
    assert "fails on" in doc["mutated_first_failure"]


def test_quantize_unknown_example(capsys):
    code, _, err = run(capsys, "quantize", "--example", "weyl")
    assert code == EXIT_PARSE


def test_mlab_report(capsys, schema):
    code, doc = run_json(capsys, schema, "mlab", "--seed", "11", "--trials", "6",
                         "--json")
    assert code == EXIT_OK
    assert doc["pre_lie_failures"] == 0
    assert doc["vinberg_failures"] == 0
    assert doc["master_equivalence_failures"] == 0
    assert doc["g6_alternation_nonzero"] > 0


def test_mlab_seed_reproducible(capsys):
    _, out1, _ = run(capsys, "mlab", "--seed", "3", "--trials", "4", "--json")
    _, out2, _ = run(capsys, "mlab", "--seed", "3", "--trials", "4", "--json")
    assert out1 == out2
