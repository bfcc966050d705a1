import numpy as np
import pytest

from hdoracle.cli import main
from hdoracle.text import to_tokens

from conftest import random_text


@pytest.fixture
def texts(tmp_path):
    rng = np.random.default_rng(42)
    s_path = tmp_path / "s.bin"
    t_path = tmp_path / "t.bin"
    s_path.write_bytes(rng.integers(0, 4, size=1024, dtype=np.uint8).tobytes())
    t_path.write_bytes(rng.integers(0, 4, size=1024, dtype=np.uint8).tobytes())
    return s_path, t_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_prints_stats(texts, tmp_path, capsys):
    s, t = texts
    out_path = tmp_path / "oracle.bin"
    code, out, _ = run(capsys, "build", "--s", str(s), "--t", str(t),
                       "--x", "32", "--out", str(out_path))
    assert code == 0
    lines = dict(ln.split("=") for ln in out.strip().splitlines())
    assert lines["n"] == "1024"
    assert lines["m"] == "1024"
    assert lines["x"] == "32"
    assert lines["rows_built"] == "32"
    assert lines["cells_stored"] == str(32 * 1024)
    assert out_path.exists()


def test_build_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "build", "--s", str(tmp_path / "nope"),
                       "--t", str(tmp_path / "nope2"), "--x", "4",
                       "--out", str(tmp_path / "o.bin"))
    assert code == 1
    assert "error" in err


def test_build_x_zero_usage_error(texts, tmp_path, capsys):
    s, t = texts
    code, _, _ = run(capsys, "build", "--s", str(s), "--t", str(t),
                     "--x", "0", "--out", str(tmp_path / "o.bin"))
    assert code == 1


def test_build_budget_exit_code(tmp_path, capsys):
    # 20000 x 20000 cells at x=1 exceeds the default 2^28 budget; the
    # guard fires before any row is computed.
    big = tmp_path / "big.bin"
    big.write_bytes(bytes(20000))
    code, _, err = run(capsys, "build", "--s", str(big), "--t", str(big),
                       "--x", "1", "--out", str(tmp_path / "o.bin"))
    assert code == 2
    assert "error" in err


def test_query_suffix_and_sub(texts, tmp_path, capsys):
    s, t = texts
    oracle_path = tmp_path / "oracle.bin"
    code, _, _ = run(capsys, "build", "--s", str(s), "--t", str(s),
                     "--x", "16", "--out", str(oracle_path))
    assert code == 0
    code, out, _ = run(capsys, "query", "--oracle", str(oracle_path),
                       "--suffix", "5", "5")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "query", "--oracle", str(oracle_path),
                       "--sub", "3", "3", "1")
    assert code == 0 and out.strip() == "0"


def test_query_range_violation(texts, tmp_path, capsys):
    s, t = texts
    oracle_path = tmp_path / "oracle.bin"
    run(capsys, "build", "--s", str(s), "--t", str(t), "--x", "16",
        "--out", str(oracle_path))
    code, _, err = run(capsys, "query", "--oracle", str(oracle_path),
                       "--sub", "1020", "0", "100")
    assert code == 1
    assert "error" in err


def test_query_bad_oracle_file(tmp_path, capsys):
    bad = tmp_path / "bad.bin"
    bad.write_bytes(b"not an oracle")
    code, _, err = run(capsys, "query", "--oracle", str(bad), "--suffix", "0", "0")
    assert code == 1


def test_sweep_csv(texts, tmp_path, capsys):
    s, t = texts
    csv_path = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "--s", str(s), "--t", str(t),
                       "--xs", "1,16,256", "--queries", "32", "--seed", "9",
                       "--csv", str(csv_path))
    assert code == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("x,rows_built,cells_stored")
    assert len(lines) == 4


def test_sweep_queries_zero(texts, tmp_path, capsys):
    s, t = texts
    csv_path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--s", str(s), "--t", str(t),
                     "--xs", "8", "--queries", "0", "--seed", "1",
                     "--csv", str(csv_path))
    assert code == 0
    row = csv_path.read_text().strip().splitlines()[1].split(",")
    assert row[6] == "0.000000"
    assert row[8] == "0"


def test_sweep_inject_fault_exits_3(texts, tmp_path, capsys):
    s, t = texts
    code, _, err = run(capsys, "sweep", "--s", str(s), "--t", str(t),
                       "--xs", "8", "--queries", "64", "--seed", "2",
                       "--csv", str(tmp_path / "x.csv"), "--inject-fault")
    assert code == 3
    assert "cross-check" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["query"])  # missing required flags
    assert exc.value.code == 1


def test_tokens_format(tmp_path, capsys):
    rng = np.random.default_rng(3)
    s = random_text(rng, 64, 1000)
    s_path = tmp_path / "s.txt"
    s_path.write_text(to_tokens(s))
    oracle_path = tmp_path / "o.bin"
    code, out, _ = run(capsys, "build", "--s", str(s_path), "--t", str(s_path),
                       "--format", "tokens", "--x", "8", "--out", str(oracle_path))
    assert code == 0
    code, out, _ = run(capsys, "query", "--oracle", str(oracle_path),
                       "--suffix", "0", "0")
    assert code == 0 and out.strip() == "0"


def write_matrix(path, bits):
    rows = len(bits)
    cols = len(bits[0]) if rows else 0
    lines = [f"{rows} {cols}"] + ["".join(str(v) for v in row) for row in bits]
    path.write_text("\n".join(lines) + "\n")


def test_bmm_identity(tmp_path, capsys):
    a_path, b_path, out_path = tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "ab.txt"
    eye = np.eye(4, dtype=int).tolist()
    rng = np.random.default_rng(4)
    b = rng.integers(0, 2, size=(4, 6)).tolist()
    write_matrix(a_path, eye)
    write_matrix(b_path, b)
    code, out, _ = run(capsys, "bmm", "--a", str(a_path), "--b", str(b_path),
                       "--out", str(out_path))
    assert code == 0
    assert "mismatches_vs_naive=0" in out
    from hdoracle.bmm import parse_matrix
    assert parse_matrix(out_path.read_text()).bits.tolist() == b


def test_bmm_zero(tmp_path, capsys):
    a_path, b_path, out_path = tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "ab.txt"
    write_matrix(a_path, [[0, 0], [0, 0]])
    write_matrix(b_path, [[1], [1]])
    code, out, _ = run(capsys, "bmm", "--a", str(a_path), "--b", str(b_path),
                       "--variant", "binary", "--out", str(out_path))
    assert code == 0
    from hdoracle.bmm import parse_matrix
    assert parse_matrix(out_path.read_text()).bits.sum() == 0


def test_bmm_random_self_check(tmp_path, capsys):
    rng = np.random.default_rng(5)
    a_path, b_path, out_path = tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "ab.txt"
    write_matrix(a_path, rng.integers(0, 2, size=(32, 32)).tolist())
    write_matrix(b_path, rng.integers(0, 2, size=(32, 32)).tolist())
    code, out, _ = run(capsys, "bmm", "--a", str(a_path), "--b", str(b_path),
                       "--x-oracle", "16", "--out", str(out_path))
    assert code == 0
    assert "mismatches_vs_naive=0" in out


def test_bmm_dimension_mismatch(tmp_path, capsys):
    a_path, b_path = tmp_path / "a.txt", tmp_path / "b.txt"
    write_matrix(a_path, [[1, 0]])
    write_matrix(b_path, [[1]])
    code, _, err = run(capsys, "bmm", "--a", str(a_path), "--b", str(b_path),
                       "--out", str(tmp_path / "o.txt"))
    assert code == 1


def test_bmm_bad_format(tmp_path, capsys):
    a_path, b_path = tmp_path / "a.txt", tmp_path / "b.txt"
    a_path.write_text("garbage\n")
    write_matrix(b_path, [[1]])
    code, _, err = run(capsys, "bmm", "--a", str(a_path), "--b", str(b_path),
                       "--out", str(tmp_path / "o.txt"))
    assert code == 1
