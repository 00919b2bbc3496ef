"""Command line round trips.

Each invocation goes through cli.main with an argv list so stdout and
stderr land in capsys; one test drives the installed console script
through a real subprocess.  Expected documents are pinned against the
library calls the commands wrap.
"""

import io
import json
import shutil
import subprocess

import pytest

from preserverlab import cli
from preserverlab.fields import GF
from preserverlab.io import (
    canonical_dumps,
    field_from_json,
    named_poly,
    poly_to_json,
    spec_from_json,
    spec_to_json,
)
from preserverlab.matrices import identity_matrix, mat_from_ints
from preserverlab.preservers import PreserverSpec

F2 = GF(2)
F3 = GF(3)

E11 = '[["1","0"],["0","0"]]'
ZERO_PAIR = '[[["1","0"],["0","0"]],[["0","0"],["0","1"]]]'


def run(capsys, argv):
    rc = cli.main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def error_doc(err):
    doc = json.loads(err)
    return doc["error"]


def test_missing_subcommand_is_invalid(capsys):
    rc, out, err = run(capsys, [])
    assert rc == cli.EXIT_INVALID
    assert error_doc(err)["code"] == cli.EXIT_INVALID


def test_unknown_subcommand_is_invalid(capsys):
    rc, out, err = run(capsys, ["frobnicate"])
    assert rc == cli.EXIT_INVALID
    assert "message" in error_doc(err)


def test_eval_reports_value_and_zero_flag(capsys):
    rc, out, _ = run(capsys, ["eval", "--poly", "xy", "--field", "gf3",
                              "--tuple", ZERO_PAIR])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["command"] == "eval" and doc["v"] == 1
    assert doc["is_zero"] is True
    assert doc["value"] == [["0", "0"], ["0", "0"]]


def test_eval_wrong_tuple_length_is_invalid(capsys):
    rc, _, err = run(capsys, ["eval", "--poly", "xy", "--field", "gf3",
                              "--tuple", "[%s]" % E11])
    assert rc == cli.EXIT_INVALID
    assert "expected 2" in error_doc(err)["message"]


def test_zeros_membership_both_ways(capsys):
    rc, out, _ = run(capsys, ["zeros", "--poly", "xy", "--field", "gf3",
                              "--tuple", ZERO_PAIR])
    assert rc == cli.EXIT_OK and json.loads(out)["member"] is True
    eye = '[["1","0"],["0","1"]]'
    rc, out, _ = run(capsys, ["zeros", "--poly", "xy", "--field", "gf3",
                              "--tuple", "[%s,%s]" % (eye, eye)])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["member"] is False
    assert doc["value"] == [["1", "0"], ["0", "1"]]


def test_tuple_read_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(ZERO_PAIR))
    rc, out, _ = run(capsys, ["zeros", "--poly", "xy", "--field", "gf3",
                              "--tuple", "-"])
    assert rc == cli.EXIT_OK
    assert json.loads(out)["member"] is True


def test_poly_document_field_conflict_is_invalid(capsys):
    doc = canonical_dumps(poly_to_json(named_poly(F3, "xy")))
    rc, _, err = run(capsys, ["eval", "--poly", doc, "--field", "gf5",
                              "--tuple", ZERO_PAIR])
    assert rc == cli.EXIT_INVALID
    assert "conflicts" in error_doc(err)["message"]


def test_omega_pinned_annihilators(capsys):
    rc, out, _ = run(capsys, ["omega", "--poly", "xy", "--field", "gf3",
                              "--matrix", E11])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["pivot_variable"] == 2
    assert doc["slot_one"]["dimension"] == 2
    assert doc["slot_one"]["basis"] == [[["0", "1"], ["0", "0"]],
                                        [["0", "0"], ["0", "1"]]]
    assert doc["pivot"]["basis"] == [[["0", "0"], ["1", "0"]],
                                     [["0", "0"], ["0", "1"]]]
    assert doc["intersection"]["dimension"] == 1
    assert doc["intersection"]["basis"] == [[["0", "0"], ["0", "1"]]]


def test_classify_cross_agrees_on_projection(capsys):
    rc, out, _ = run(capsys, ["classify", "--poly", "xy+yx",
                              "--field", "gf3", "--matrix", E11])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["agree"] is True
    for path in ("structural", "direct"):
        assert doc[path]["case"] == "ScalarIdempotentLine"
        assert doc[path]["dimension"] == 1
        assert doc[path]["line"] == [["0", "0"], ["0", "1"]]


def test_classify_direct_refuses_rational_search(capsys):
    A = '[["0","-3","0"],["1","0","0"],["0","0","1"]]'
    rc, out, _ = run(capsys, ["classify", "--path", "direct",
                              "--poly", "xy+yx", "--field", "q",
                              "--matrix", A])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["case"] == "Other" and doc["dimension"] == 2
    assert any("refused" in note for note in doc["detail"])


def test_spectrum_pinned_eigenvalue(capsys):
    rc, out, _ = run(capsys, ["spectrum", "--field", "gf7",
                              "--left", '[["1","1"],["0","1"]]',
                              "--right", '[["2","1"],["0","2"]]',
                              "--coeffs", '["1","1"]'])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["eigenvalue"] == "3" and doc["dimension"] == 4


def test_spectrum_multiple_eigenvalues_is_invalid(capsys):
    rc, _, err = run(capsys, ["spectrum", "--field", "gf7",
                              "--left", '[["1","0"],["0","2"]]',
                              "--right", '[["2","1"],["0","2"]]',
                              "--coeffs", '["1","1"]'])
    assert rc == cli.EXIT_INVALID
    assert "singleton" in error_doc(err)["message"]


def test_companion_pinned(capsys):
    rc, out, _ = run(capsys, ["companion", "--field", "gf7",
                              "--coeffs", '["3","2","1"]'])
    assert rc == cli.EXIT_OK
    assert json.loads(out)["matrix"] == [["0", "4"], ["1", "5"]]


def test_companion_needs_positive_degree(capsys):
    rc, _, err = run(capsys, ["companion", "--field", "gf7",
                              "--coeffs", '["3"]'])
    assert rc == cli.EXIT_INVALID
    assert error_doc(err)["code"] == cli.EXIT_INVALID


def test_rcf_document_pinned(capsys):
    rc, out, _ = run(capsys, ["rcf", "--field", "gf3",
                              "--matrix", '[["2","0"],["0","1"]]'])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["form"] == [["2", "0"], ["0", "1"]]
    assert doc["blocks"] == [{"factor": ["1", "1"], "exponent": 1},
                             {"factor": ["2", "1"], "exponent": 1}]


def test_jordan_document_pinned(capsys):
    rc, out, _ = run(capsys, ["jordan", "--field", "gf3",
                              "--matrix", '[["0","2"],["1","0"]]'])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert field_from_json(doc["base_field"]) is F3
    assert doc["field"]["k"] == 2
    assert doc["eigenvalues"] == [["0", "1"], ["0", "2"]]
    assert doc["multiplicities"] == [1, 1]


def test_anticommutant_pinned(capsys):
    rc, out, _ = run(capsys, ["anticommutant", "--field", "gf5",
                              "--matrix", '[["1","0"],["0","4"]]'])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["dimension"] == 2
    assert doc["basis"] == [[["0", "0"], ["1", "0"]],
                            [["0", "1"], ["0", "0"]]]


def test_anticommutant_char_two_is_invalid(capsys):
    rc, _, err = run(capsys, ["anticommutant", "--field", "gf2",
                              "--matrix", '[["1","0"],["0","1"]]'])
    assert rc == cli.EXIT_INVALID
    assert error_doc(err)["code"] == cli.EXIT_INVALID


def test_verify_preserver_transpose_witness(capsys):
    spec = canonical_dumps(spec_to_json(
        PreserverSpec(field=F2, n=2, transpose=True)))
    rc, out, _ = run(capsys, ["verify-preserver", "--spec", spec,
                              "--poly", "xy", "--field", "gf2",
                              "--strategy", "exhaustive"])
    assert rc == cli.EXIT_VIOLATED
    doc = json.loads(out)
    assert doc["check"] == "zeros" and doc["outcome"] == "violated"
    assert doc["direction"] == "forward"
    assert doc["witness"] == [[["1", "0"], ["0", "0"]],
                              [["0", "0"], ["1", "0"]]]
    assert doc["images"] == [[["1", "0"], ["0", "0"]],
                             [["0", "1"], ["0", "0"]]]


def test_verify_preserver_similarity_strong_exhaustive(capsys):
    S = mat_from_ints(F2, ((1, 1), (0, 1)))
    spec = canonical_dumps(spec_to_json(
        PreserverSpec(field=F2, n=2, similarity=S)))
    rc, out, _ = run(capsys, ["verify-preserver", "--spec", spec,
                              "--poly", "xy", "--field", "gf2",
                              "--strong", "--strategy", "exhaustive"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["outcome"] == "holds"
    assert doc["checked"]["tuples"] == 256
    assert doc["checked"]["zeros"] == 58


def test_verify_preserver_budget_cap(capsys, monkeypatch):
    monkeypatch.setenv("PRESERVERLAB_BUDGET", "10")
    S = mat_from_ints(F2, ((1, 1), (0, 1)))
    spec = canonical_dumps(spec_to_json(
        PreserverSpec(field=F2, n=2, similarity=S)))
    rc, out, err = run(capsys, ["verify-preserver", "--spec", spec,
                                "--poly", "xy", "--field", "gf2",
                                "--strong", "--strategy", "exhaustive"])
    assert rc == cli.EXIT_BUDGET
    assert out == ""
    assert error_doc(err)["code"] == cli.EXIT_BUDGET


def test_verify_preserver_idempotent_structure_and_rescale(capsys):
    spec = canonical_dumps(spec_to_json(
        PreserverSpec(field=F3, n=2, gamma=F3.from_int(2))))
    rc, out, _ = run(capsys, ["verify-preserver", "--spec", spec,
                              "--poly", "xy", "--field", "gf3",
                              "--check", "idempotent-structure"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["outcome"] == "holds" and doc["checked"] == 12
    assert doc["precondition"]["outcome"] == "holds"

    rc, out, _ = run(capsys, ["verify-preserver", "--spec", spec,
                              "--poly", "xy", "--field", "gf3",
                              "--check", "rescale"])
    assert rc == cli.EXIT_OK
    fixed = spec_from_json(json.loads(out)["spec"])
    P = mat_from_ints(F3, ((1, 0), (0, 0)))
    assert fixed.gamma[P] == F3.one
    assert fixed.gamma[identity_matrix(F3, 2)] == F3.from_int(2)


def test_examples_single_id(capsys):
    rc, out, _ = run(capsys, ["examples", "--id", "transpose_xy"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["command"] == "examples"
    assert doc["example"] == "transpose_xy" and doc["match"] is True


def test_examples_rejects_unknown_id(capsys):
    rc, _, err = run(capsys, ["examples", "--id", "nope"])
    assert rc == cli.EXIT_INVALID
    assert error_doc(err)["code"] == cli.EXIT_INVALID


def test_oracle_zero_detection_report(capsys):
    rc, out, _ = run(capsys, ["oracle", "--lemma", "zero_detection",
                              "--q", "2", "--n", "2"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["lemma"] == "zero_detection"
    assert doc["instances"] == 16 and doc["passed"] is True
    assert doc["failures"] == []


def test_oracle_missing_size_is_invalid(capsys):
    rc, _, err = run(capsys, ["oracle", "--lemma", "orthogonality"])
    assert rc == cli.EXIT_INVALID
    assert "--q and --n" in error_doc(err)["message"]


def test_oracle_local_dependence_global_case(capsys):
    triple = json.dumps({
        "R1": [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]],
        "R2": [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]],
        "R3": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]],
    })
    rc, out, _ = run(capsys, ["oracle", "--lemma", "local_dependence",
                              "--field", "gf5", "--input", triple])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["dependent_everywhere"] is True
    assert doc["conclusion_case"] == "globally_dependent"


def test_enumerate_idempotent_count(capsys):
    rc, out, _ = run(capsys, ["enumerate", "--what",
                              "rank_one_idempotents", "--field", "gf3",
                              "--n", "2", "--count-only"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 12 and doc["items"] is None


def test_enumerate_zero_set_respects_limit(capsys):
    rc, out, _ = run(capsys, ["enumerate", "--what", "zero_set",
                              "--poly", "xy", "--field", "gf2",
                              "--n", "2", "--limit", "3"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 58 and len(doc["items"]) == 3
    zero = [["0", "0"], ["0", "0"]]
    assert doc["items"][0] == [zero, zero]


def test_enumerate_homs_of_quartic_field(capsys):
    rc, out, _ = run(capsys, ["enumerate", "--what", "homs",
                              "--field", "gf4"])
    assert rc == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 2
    assert {"kind": "frobenius", "power": 1} in doc["items"]


def test_enumerate_budget_cap(capsys, monkeypatch):
    monkeypatch.setenv("PRESERVERLAB_BUDGET", "10")
    rc, _, err = run(capsys, ["enumerate", "--what", "zero_set",
                              "--poly", "xy", "--field", "gf2",
                              "--n", "2"])
    assert rc == cli.EXIT_BUDGET
    assert error_doc(err)["code"] == cli.EXIT_BUDGET


def test_stdout_bytes_are_deterministic(capsys):
    argv = ["classify", "--poly", "xy+yx", "--field", "gf3",
            "--matrix", E11]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_console_script_matches_in_process(capsys):
    exe = shutil.which("preserverlab")
    assert exe is not None
    argv = ["companion", "--field", "gf7", "--coeffs", '["3","2","1"]']
    rc, out, _ = run(capsys, argv)
    assert rc == cli.EXIT_OK
    proc = subprocess.run([exe] + argv, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == out
