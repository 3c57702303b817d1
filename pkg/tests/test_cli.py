import io
import json
import os

import pytest

from config import Config
from core import codec
from main import HamcayApp
from verifier.verify import Mode, verify

G21_FILE = os.path.join(Config.FIXTURE_DIR, "G21_mixed.json")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = HamcayApp(out, err).run(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestDecompose:
    def test_json_output(self, tmp_path):
        path = str(tmp_path / "out.json")
        code, out, _ = run("decompose", "--k", "4", "--l", "2", "--mode", "rays", "--json", path)
        assert code == 0
        d = codec.read(path)
        assert len(json.loads(open(path, encoding="utf-8").read())["edges"]) == 2 * 4 * d.period
        assert verify(d, Mode.RAYS).passed
        assert run("verify", path, "--mode", "rays")[0] == 0
        assert run("render", path, "--from", "0", "--to", str(2 * d.period))[0] == 0

    def test_parity_obstruction(self):
        code, _, err = run("decompose", "--k", "2", "--l", "1", "--mode", "rays")
        assert code == 2
        assert "3 edges" in err

    def test_auto_summary(self):
        code, out, _ = run("decompose", "--k", "5", "--l", "2")
        assert code == 0
        assert json.loads(out)["mode"] == "mixed"

    def test_no_verify_is_marked_unsafe(self, capsys):
        assert run("decompose", "--help")[0] == 0
        assert "UNSAFE" in capsys.readouterr().out

    def test_sweep(self, tmp_path):
        code, out, _ = run("decompose", "--sweep", "4", "--out-dir", str(tmp_path))
        assert code == 0
        summary = json.loads(out)
        assert summary["count"] == 11 and summary["failed"] == 0
        assert os.path.exists(tmp_path / "G4_2.json")
        assert not [name for name in os.listdir(tmp_path) if name.startswith(".tmp_")]

    def test_sweep_skips_incompatible_pairs(self, tmp_path):
        code, out, _ = run("decompose", "--sweep", "3", "--mode", "mixed", "--out-dir", str(tmp_path))
        assert code == 0
        assert [(r["k"], r["l"]) for r in json.loads(out)["results"]] == [(2, 1), (3, 0), (3, 2)]


class TestVerify:
    def test_fixture_passes(self):
        code, out, _ = run("verify", G21_FILE, "--mode", "mixed")
        assert code == 0
        assert json.loads(out)["verdict"]["passed"] is True

    def test_oracle(self):
        code, out, _ = run("verify", G21_FILE, "--oracle", "--window", "20")
        assert code == 0
        assert json.loads(out)["oracle"]["passed"] is True

    def test_failure_prints_witness(self):
        code, _, err = run("verify", G21_FILE, "--mode", "rays")
        assert code == 3
        witness = json.loads(err.split("\n", 1)[1])
        assert witness["error"] == "VerificationFailed"
        assert witness["witness"]["witness"]["class"] == 2

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert run("verify", str(path))[0] == 4

    def test_missing_file(self, tmp_path):
        assert run("verify", str(tmp_path / "missing.json"))[0] == 4


class TestOtherCommands:
    def test_classify(self):
        code, out, _ = run("classify", "--group", "Z", "--a", "2", "--b", "-3")
        assert code == 0
        assert json.loads(out) == {"tag": "Gkl", "k": 3, "l": 2, "iso": "Right = a, Up = b"}

    def test_module_entry_point(self, capsys):
        import main
        assert main.run(["classify", "--group", "Z", "--a", "2", "--b", "-3"]) == 0
        assert json.loads(capsys.readouterr().out)["tag"] == "Gkl"
        assert main.run(["decompose", "--k", "4", "--l", "2", "--mode", "rays"]) == 0

    def test_classify_square_grid(self):
        code, out, _ = run("classify", "--a", "1,0", "--b", "0,1")
        assert json.loads(out)["tag"] == "SquareGrid"

    def test_classify_involutions(self):
        code, out, _ = run("classify", "--involutions", "3")
        assert (json.loads(out)["k"], json.loads(out)["l"]) == (4, 0)

    def test_render_ascii(self):
        code, out, _ = run("render", G21_FILE, "--from", "0", "--to", "3")
        assert code == 0
        assert out.split("\n", 1)[1].count("o") == 8

    def test_render_to_file(self, tmp_path):
        path = tmp_path / "g21.tex"
        code, out, _ = run("render", G21_FILE, "--format", "tikz", "--from", "0", "--to", "3", "--out", str(path))
        assert code == 0 and out == ""
        assert path.read_text(encoding="utf-8").startswith("\\documentclass")

    def test_bad_palette(self):
        assert run("render", G21_FILE, "--from", "0", "--to", "3", "--palette", "red")[0] == 4

    def test_search_not_found(self):
        assert run("search", "--k", "2", "--l", "1", "--pmax", "2", "--mode", "rays")[0] == 2

    def test_cuts(self):
        code, out, _ = run("cuts", "--k", "2", "--l", "1", "--max-edges", "4", "--window", "12")
        assert code == 0
        assert json.loads(out)["odd_cut"] is True

    def test_fixtures(self):
        code, out, _ = run("fixtures", "--list")
        assert code == 0
        assert len(out.strip().split("\n")) == 10
        assert run("fixtures", "--check")[0] == 0


class TestUsage:
    @pytest.mark.parametrize("argv", [
        [], ["frobnicate"], ["decompose", "--k", "x"], ["decompose", "--k", "4"],
        ["decompose", "--k", "4", "--l", "2", "--mode", "spirals"], ["decompose", "--k", "2", "--l", "0"],
    ])
    def test_exit_4(self, argv):
        assert run(*argv)[0] == 4

    def test_version(self):
        code, out, _ = run("--version")
        assert code == 0
        assert out.startswith(f"hamcay {Config.VERSION}")

    def test_bad_config_file(self, tmp_path):
        path = tmp_path / "hamcay.conf"
        path.write_text("colour = blue\n", encoding="utf-8")
        assert run("--config", str(path), "fixtures", "--list")[0] == 4
