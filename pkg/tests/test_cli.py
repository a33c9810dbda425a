import io
import subprocess
import sys

import pytest

from signed_spectra.cli import run

TRI = "3 3\n0 1 +\n1 2 +\n0 2 -\n"


def call(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, out)
    return code, out.getvalue()


@pytest.fixture
def tri(tmp_path):
    p = tmp_path / "triangle-neg.sg"
    p.write_text(TRI)
    return str(p)


def test_balance(tri):
    assert call(["balance", tri]) == (0, "unbalanced\n0 1 2\n")


def test_family_charpoly():
    assert call(["family", "--which", "2", "--n", "5", "--charpoly"]) == (0, "0 6 0 -6 0 1\n")


def test_family_index_and_emit(tmp_path):
    code, out = call(["family", "--which", "1", "--n", "36", "--index"])
    assert code == 0 and out == "5.92598032132\n"
    target = tmp_path / "g.sg"
    assert call(["family", "--which", "3", "--n", "9", "--emit", str(target)])[0] == 0
    code, out = call(["classify", str(target)])
    assert "type: theta" in out and "base: B(P2,P2,P1)" in out


def test_verify_ordering_output():
    code, out = call(["verify-ordering", "--n-min", "36", "--n-max", "36"])
    assert code == 0
    first = out.splitlines()[0]
    assert first == "OK n=36: 5.92598032132 > 5.92119035006 > 5.87038903919 > 5.86664073626 > 5.8660896376"


def test_index_spectrum_charpoly(tri):
    assert call(["index", tri]) == (0, "1\n")
    assert call(["spectrum", tri]) == (0, "1\n1\n-2\n")
    assert call(["charpoly", tri]) == (0, "2 -3 0 1\n")
    assert call(["charpoly", "--schwenk", tri]) == (0, "2 -3 0 1\n")


def test_stdin(monkeypatch):
    assert call(["charpoly", "-"], stdin=TRI, monkeypatch=monkeypatch) == (0, "2 -3 0 1\n")


def test_canon_idempotent(monkeypatch):
    code, fam = call(["family", "--which", "4", "--n", "9"])
    code, once = call(["canon", "-"], stdin=fam, monkeypatch=monkeypatch)
    code2, twice = call(["canon", "-"], stdin=once, monkeypatch=monkeypatch)
    assert code == code2 == 0 and once == twice


def test_perturb_report(tmp_path):
    p = tmp_path / "c5.sg"
    p.write_text("5 5\n0 1 +\n1 2 +\n2 3 +\n3 4 -\n0 4 +\n")
    code, out = call(["perturb", "--op", "alpha", "--edge", "0,1", str(p)])
    assert code == 0
    fields = dict(line.split(": ", 1) for line in out.splitlines())
    assert fields["op"] == "alpha" and fields["monotone"] == "true"
    assert float(fields["lambda_after"]) > float(fields["lambda_before"])
    code, out = call(["perturb", "--op", "relocate", "--edge", "1,0", "--targets", "4", str(p)])
    assert code == 0 and "m_after: 5" in out


def test_enumerate_tsv():
    code, out = call(["enumerate", "--n", "6", "--top", "2", "--tsv"])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    rank, lam, poly = lines[0].split("\t")
    assert rank == "1" and float(lam) == pytest.approx(2 ** 0.5 + 1)


def test_verify_exclusions_seed_env(monkeypatch):
    monkeypatch.setenv("SIGNED_SPECTRA_SEED", "17")
    code, out = call(["verify-exclusions", "--n", "36", "--samples", "50"])
    assert code == 0 and "seed: 17" in out and "violations: 0" in out


def test_domain_error_exit_code(tri, capsys):
    code, _ = call(["classify", tri])
    assert code == 1
    assert "NotBicyclic" in capsys.readouterr().err


def test_format_error(tmp_path, capsys):
    p = tmp_path / "bad.sg"
    p.write_text("3 1\n0 0 +\n")
    assert call(["index", str(p)])[0] == 1
    assert "SelfLoop" in capsys.readouterr().err


def test_usage_errors(tri):
    assert call(["index", "--bogus", tri])[0] == 2
    assert call(["nonsense"])[0] == 2
    assert call(["family", "--which", "9", "--n", "10"])[0] == 2
    assert call(["perturb", "--op", "alpha", "--edge", "1", tri])[0] == 2


def test_unsupported_n_is_domain_error(capsys):
    assert call(["family", "--which", "1", "--n", "3"])[0] == 1
    assert "UnsupportedN" in capsys.readouterr().err


def test_module_entry_point(tri):
    proc = subprocess.run([sys.executable, "-m", "signed_spectra", "balance", tri], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("unbalanced")
