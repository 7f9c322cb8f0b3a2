import json
import subprocess
import sys

import pytest

from blockshuffle.cli import run
from blockshuffle.ncpoly import NCPoly, parse_word_expr


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_product(capsys):
    code, out, _ = call(capsys, "product", "--kind", "bsh", "z4", "z3 z2 z2")
    assert code == 0
    assert parse_word_expr(out) == parse_word_expr(
        "z4 z3 z2 z2 + z3 z4 z2 z2 + z3 z2 z4 z2 + z3 z2 z2 z4 - z9 z2 - z3 z8"
    )


def test_product_json(capsys):
    code, out, _ = call(capsys, "product", "--kind", "qsh", "--json", "z2", "z3")
    assert code == 0
    assert NCPoly.from_json_obj(json.loads(out)) == parse_word_expr("z2 z3 + z3 z2 + z5")


def test_psi(capsys):
    code, out, _ = call(capsys, "psi", "--f", "tanh", "z1 z2 z3")
    assert code == 0
    assert parse_word_expr(out) == parse_word_expr("z1 z2 z3 - 1/3*z6")


def test_identity_check(capsys):
    code, out, _ = call(capsys, "identity-check", "--z", "z1 + z3", "--degree", "4")
    assert code == 0
    assert out.count("PASS") == 3


def test_lyndon(capsys):
    assert call(capsys, "lyndon", "count", "--grading", "length", "--letters", "2", "--n", "3")[1].strip() == "2"
    code, out, _ = call(capsys, "lyndon", "list", "--letters", "2", "--n", "3", "--json")
    assert json.loads(out) == [[1, 1, 2], [1, 2, 2]]
    code, out, _ = call(capsys, "lyndon", "factor", "z1 z2 z1 z1")
    assert out.strip() == "z1 z2 | z1 | z1"
    code, out, _ = call(capsys, "lyndon", "decompose", "--product", "star", "--json", "z2 z1")
    assert code == 0 and len(json.loads(out)) == 2


def test_hopf_check(capsys):
    code, out, _ = call(capsys, "hopf-check", "--which", "qm", "--bound", "5")
    assert code == 0 and out.startswith("PASS")


def test_blocks(capsys):
    assert call(capsys, "blocks", "to-z", "e0e1e1e0e0e1")[1].strip() == "z2 z2 z2"
    assert call(capsys, "blocks", "to-binary", "z4 z3 z2 z2")[1].strip() == "e0e1e0e1e1e0e1e1e0e0e1"
    assert call(capsys, "blocks", "to-binary", "1 3")[1].strip() == "e0e1e1e0e0e1"
    assert call(capsys, "blocks", "to-index", "0101")[1].strip() == "zeta(2)"


def test_relations_generate(capsys):
    code, out, _ = call(capsys, "relations", "generate", "--family", "quasipower", "--z", "z2", "--k", "1", "--json")
    assert code == 0
    rels = json.loads(out)
    assert {"coef": "-1/3", "index": [2, 2]} in rels[0]["rendered"]


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--family", "product", "--u", "z4", "--v", "z3 z2 z2", "--N", "1000000")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = call(capsys, "verify", "--family", "bowman-bradley", "--n", "1", "--k", "1", "--json")
    assert code == 0 and json.loads(out)[0]["pass"]


def test_verify_random_is_reproducible(capsys):
    a = call(capsys, "verify", "--family", "product", "--random", "4", "--seed", "7")[1]
    b = call(capsys, "verify", "--family", "product", "--random", "4", "--seed", "7")[1]
    assert a == b


def test_verify_direct_precision_failure(capsys):
    code, _, err = call(capsys, "verify", "--family", "product", "--u", "z4", "--v", "z3 z2 z2", "--method", "direct", "--N", "100", "--tol", "1e-9")
    assert code == 1 and "tail bound" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["product", "z0", "z1"],
        ["bogus"],
        ["product", "--kind", "nope", "z1", "z2"],
        ["blocks", "to-index", "e0e0e1"],
        ["verify", "--family", "product"],
        ["lyndon", "factor", "z1 + z2"],
        ["product", "--unknown", "z1", "z2"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "blockshuffle.cli", "product", "--kind", "sh", "z1", "z2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert parse_word_expr(proc.stdout) == parse_word_expr("z1 z2 + z2 z1")
