import random
import subprocess
import sys

import pytest

from gcdoclist.cli import main


@pytest.fixture
def ex2_dir(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    (docs / "d1.txt").write_bytes(b"aba")
    (docs / "d2.txt").write_bytes(b"ab")
    return docs


@pytest.fixture
def ex2_file(tmp_path, ex2_dir):
    out = tmp_path / "ex2.gcda"
    assert main(["build", "--input", str(ex2_dir), "--b", "2", "--output", str(out)]) == 0
    return out


def test_build_prints_space(tmp_path, ex2_dir, capsys):
    out = tmp_path / "x.gcda"
    assert main(["build", "--input", str(ex2_dir), "--output", str(out)]) == 0
    fields = dict(line.split("=") for line in capsys.readouterr().out.splitlines())
    assert {"sa_bytes", "grammar_bytes", "lists_bytes", "index_file_bytes"} <= set(fields)
    assert int(fields["index_file_bytes"]) == out.stat().st_size
    assert (tmp_path / "x.gcda.names").read_text() == "d1.txt\nd2.txt\n"


def test_query(ex2_file, capsysbinary):
    capsysbinary.readouterr()
    for pattern, line in [("ab", b"ab\t1 2\n"), ("zz", b"zz\t\n"), ("ba", b"ba\t1\n")]:
        for mode in ("gcda", "brute-c", "brute-d"):
            assert main(["query", "--index", str(ex2_file), "--pattern", pattern, "--mode", mode]) == 0
            assert capsysbinary.readouterr().out == line


def test_concat_input_and_rebuild_determinism(tmp_path, capsys):
    src = tmp_path / "c.txt"
    src.write_bytes(b"aba\nab\n")
    first, second = tmp_path / "1.gcda", tmp_path / "2.gcda"
    for out in (first, second):
        assert main(["build", "--input", str(src), "--input-mode", "concat", "--output", str(out)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_gen_and_self_check(tmp_path, capsysbinary):
    coll, pats = tmp_path / "g.txt", tmp_path / "p.txt"
    assert main(["gen", "--base-count", "3", "--base-len", "200", "--variants", "10", "--rate", "0.01",
                 "--output", str(coll), "--patterns-out", str(pats), "--n-patterns", "500",
                 "--min-len", "1", "--max-len", "10"]) == 0
    # sprinkle in absent patterns
    rng = random.Random(0)
    extra = b"".join(bytes(rng.choice(b"acgtz") for _ in range(6)) + b"\n" for _ in range(500))
    pats.write_bytes(pats.read_bytes() + extra)
    idx = tmp_path / "g.gcda"
    assert main(["build", "--input", str(coll), "--input-mode", "concat", "--b", "16",
                 "--output", str(idx)]) == 0
    capsysbinary.readouterr()
    outputs = {}
    for mode in ("gcda", "brute-d"):
        assert main(["query", "--index", str(idx), "--patterns-file", str(pats), "--mode", mode]) == 0
        outputs[mode] = capsysbinary.readouterr().out
    assert outputs["gcda"] == outputs["brute-d"]
    assert outputs["gcda"].count(b"\n") == 1000


def test_bench_csv_and_figure(tmp_path, ex2_file, capsys):
    pats = tmp_path / "p.txt"
    pats.write_bytes(b"a\nab\nzz\n")
    fig = tmp_path / "bench.png"
    assert main(["bench", "--index", str(ex2_file), "--patterns-file", str(pats), "--repeat", "1",
                 "--figure", str(fig)]) == 0
    lines = capsys.readouterr().out.splitlines()
    lines = lines[lines.index("pattern_len,occ,docc,mode,microseconds"):]
    assert lines[0] == "pattern_len,occ,docc,mode,microseconds"
    assert len(lines) == 1 + 3 * 3
    assert fig.stat().st_size > 0


def test_report_csv_and_figure(tmp_path, capsys):
    fig = tmp_path / "trend.png"
    assert main(["report", "--base-count", "2", "--base-len", "100", "--variants", "5",
                 "--rates", "0.01", "0.1", "--b", "8", "--figure", str(fig)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("rate,n,d,grammar_rules")
    assert len(lines) == 3
    assert fig.stat().st_size > 0


@pytest.mark.parametrize("argv", [
    ["build", "--input", "x", "--b", "0", "--output", "y"],
    ["build", "--input", "x", "--beta", "0.5", "--output", "y"],
    ["query", "--index", "x"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_runtime_errors_exit_1(tmp_path, ex2_file, capsys):
    bad = tmp_path / "bad.gcda"
    data = bytearray(ex2_file.read_bytes())
    data[len(data) // 2] ^= 1
    bad.write_bytes(bytes(data))
    assert main(["query", "--index", str(bad), "--pattern", "ab"]) == 1
    assert "checksum" in capsys.readouterr().err
    assert main(["query", "--index", str(tmp_path / "missing"), "--pattern", "ab"]) == 1


def test_console_entry_point(ex2_file):
    proc = subprocess.run([sys.executable, "-m", "gcdoclist", "query", "--index", str(ex2_file),
                           "--pattern", "ab"], capture_output=True)
    assert proc.returncode == 0 and proc.stdout == b"ab\t1 2\n"
