import subprocess
import sys

import pytest

from admt import cli


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_twisted_cubic_poincare(capsys):
    status, out, _ = run(capsys, "--task", "poincare", "--example", "twisted-cubic",
                         "--max-hdeg", "5", "--max-deg", "5")
    assert status == 0
    assert "totals: 1 4 9 18 36 72" in out


def test_header_reports_default_bounds(capsys):
    status, out, _ = run(capsys, "--task", "groebner", "--ring", "k[x,y,z]",
                         "--gens", "x^2 - y*z; y^2 - x*z")
    assert status == 0
    assert "# bounds: D=5 d=10" in out
    assert "x^2 -> y*z" in out


def test_output_is_deterministic(capsys):
    argv = ("--task", "resolve", "--example", "x2-xy", "--max-hdeg", "3", "--max-deg", "4",
            "--dump-complex")
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    assert "[x|x]" in first


@pytest.mark.parametrize("task", sorted(cli.RUNNERS))
def test_every_task_in_both_formats(capsys, task):
    for fmt in ("text", "records"):
        status, out, _ = run(capsys, "--task", task, "--example", "dual-numbers",
                             "--max-hdeg", "3", "--max-deg", "4", "--format", fmt)
        assert status == 0 and out
    assert out.splitlines()[0].startswith("job task=" + task)


def test_verify_passes_on_a_catalog_algebra(capsys):
    status, out, _ = run(capsys, "--task", "verify", "--example", "four-cycle",
                         "--max-hdeg", "3", "--max-deg", "5")
    assert status == 0
    assert "result: pass" in out and "FAIL" not in out


def test_verify_failure_exits_with_one(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verification_checks",
                        lambda *a: [("oracle", False, "Tor dims differ")])
    status, out, _ = run(capsys, "--task", "verify", "--example", "dual-numbers",
                         "--max-hdeg", "2", "--max-deg", "2")
    assert status == 1
    assert "result: fail (first failure: oracle)" in out


def test_parse_error_exits_with_two(capsys):
    status, _, err = run(capsys, "--task", "betti", "--ring", "k[x,y]", "--gens", "x^2, x*y")
    assert status == 2
    assert "parse error at line 1, column 4" in err


def test_bad_ring_exits_with_two(capsys):
    assert run(capsys, "--task", "resolve", "--ring", "k[x")[0] == 2


def test_commutative_flavor_on_words_exits_with_two(capsys):
    status = run(capsys, "--task", "resolve", "--example", "free-mod-xy",
                 "--flavor", "commutative")[0]
    assert status == 2


def test_unknown_task_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["--task", "nonsense"])
    assert exc.value.code == 2


def test_job_file(tmp_path, capsys):
    job = tmp_path / "job.txt"
    job.write_text("# dual numbers over F_5\n"
                   "task = betti\n"
                   "ring = k[x]\n"
                   "field = Fp(5)\n"
                   "gens = x^2\n"
                   "max_hdeg = 3\n"
                   "max_deg = 3\n")
    status, out, _ = run(capsys, str(job))
    assert status == 0
    assert "# bounds: D=3 d=3" in out
    assert "totals: 1 1 1 1" in out


def test_gens_file(tmp_path, capsys):
    gens = tmp_path / "gens.txt"
    gens.write_text("x*y\n")
    status, out, _ = run(capsys, "--task", "hochschild", "--ring", "k<x,y>",
                         "--gens-file", str(gens), "--max-hdeg", "3", "--max-deg", "4")
    assert status == 0


def test_figure(tmp_path, capsys):
    path = tmp_path / "betti.png"
    status, out, _ = run(capsys, "--task", "betti", "--example", "four-cycle",
                         "--max-hdeg", "3", "--max-deg", "4", "--figure", str(path))
    assert status == 0 and path.stat().st_size > 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "admt.cli", "--task", "groebner",
                           "--example", "dual-numbers"], capture_output=True, text=True)
    assert proc.returncode == 0 and "x^2 -> 0" in proc.stdout
