import io
import json

import pytest

from parind import build, character, chars_equal, ps_coinvariants
from parind import verify
from parind.cli import run
from parind.serialize import decode_report


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "a1.json").write_text('{"type": "A1"}')
    (tmp_path / "a2.json").write_text('{"type": "A2"}')
    (tmp_path / "b2.toml").write_text('type = "B2"\nd = [1, 2]\n')
    (tmp_path / "gl2.json").write_text('{"cartan": [[2]], "d": [1], "z_dim": 2, "f": 1, "p": 5}')
    (tmp_path / "bad.json").write_text("{not json")
    (tmp_path / "affine.json").write_text('{"cartan": [[2, -2], [-2, 2]]}')
    return tmp_path


def test_cosets_example(files):
    code, out, _ = call("cosets", "--datum", str(files / "a2.json"), "--I", "a1", "--K", "")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    reps = report["result"]["representatives"]
    assert [r["w"] for r in reps] == [[], [2], [2, 1]]
    assert [r["d_w"] for r in reps] == [0, 1, 2]


def test_ps_example(files):
    code, out, _ = call("ps", "--datum", str(files / "a1.json"), "--I", "", "--K", "", "--chi", "trivial")
    assert code == 0
    assert [g["degree"] for g in json.loads(out)["result"]["degrees"]] == [0, -1]


def test_verify_b2_passes(files):
    code, out, _ = call("verify", "--datum", str(files / "b2.toml"), "--suite", "all")
    assert code == 0
    assert json.loads(out)["result"]["passed"]


def test_verify_failure_exit_code(files, monkeypatch):
    def broken(rd):
        yield None
        yield ("always fails", {"I": ["a1"]})

    monkeypatch.setitem(verify.SUITES, "dw_dim", broken)
    code, out, _ = call("verify", "--datum", str(files / "a1.json"), "--suite", "dw_dim")
    assert code == 2
    suite = json.loads(out)["result"]["suites"][0]
    assert suite["counterexample"] == {"check": "always fails", "I": ["a1"]} and suite["checked"] == 2


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["cosets", "--datum", "MISSING"], "cannot read"),
        (["cosets", "--datum", "bad.json"], "not well-formed"),
        (["roots", "--datum", "affine.json"], "finite type"),
        (["cosets", "--datum", "a2.json", "--I", "a7"], "out of range"),
        (["cosets", "--datum", "a2.json", "--I", "b1"], "unknown simple root"),
        (["ps", "--datum", "a1.json", "--chi", "{oops"], "character"),
        (["ps", "--datum", "a1.json", "--chi", "trivial", "--char-mode", "concrete"], "prime"),
        (["ext", "--datum", "a2.json", "--mode", "ps", "--r", "1", "--K", "a1"], "K must be empty"),
        (["verify", "--datum", "a1.json", "--suite", "nope"], "unknown suite"),
        (["frobnicate"], "invalid choice"),
    ],
)
def test_input_errors_exit_one(files, argv, needle):
    argv = [str(files / a) if a.endswith((".json", ".toml")) or a == "MISSING" else a for a in argv]
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert needle in err


def test_contradictory_flags(files):
    code, _, err = call(
        "ext", "--datum", str(files / "a1.json"), "--mode", "parabolic", "--r", "1",
        "--distinct-central", "yes", "--central-v", "[1]", "--central-w", "[1]",
    )
    assert code == 1 and "contradicts" in err


def test_determinism(files):
    argv = ("filtration", "--datum", str(files / "b2.toml"), "--I", "a1")
    assert call(*argv)[1] == call(*argv)[1]


@pytest.mark.parametrize(
    "argv",
    [
        ("cosets", "--type", "B3", "--I", "a1,a3", "--K", "a2"),
        ("filtration", "--type", "G2", "--I", "a1"),
        ("ps", "--type", "A2", "--I", "a1", "--chi", '{"cyclo": [2, 4], "sym": {"u": 1}}'),
        ("steinberg", "--type", "A3", "--I", "a2", "--K", "a1,a3"),
        ("ext", "--type", "A1xA1", "--mode", "parabolic", "--I", "a1", "--K", "a1", "--r", "1",
         "--left-cuspidal", "--distinct-central", "yes"),
    ],
)
def test_round_trip(argv):
    code, out, _ = call(*argv)
    assert code == 0
    command, rd, payload = decode_report(out)
    assert command == argv[0]
    again = call(*argv)[1]
    assert decode_report(again)[2] == payload


def test_round_trip_ps_payload(files):
    code, out, _ = call("ps", "--datum", str(files / "gl2.json"), "--chi", '{"cyclo": [2]}', "--char-mode", "concrete")
    assert code == 0
    _, rd, payload = decode_report(out)
    direct = ps_coinvariants(rd, (), (), character(rd, cyclo=[2], mode="concrete"))
    assert payload == direct
    assert chars_equal(payload[1][0].character, character(rd, cyclo=[3], mode="concrete"))
    assert rd == build({"cartan": [[2]], "d": [1], "z_dim": 2, "f": 1, "p": 5})


def test_ext_ps_mode(files):
    code, out, _ = call(
        "ext", "--datum", str(files / "gl2.json"), "--mode", "ps", "--r", "1", "--chi", "[1]", "--chi-prime", "[1]",
        "--char-mode", "concrete", "--split", "--p-odd", "--no-pth-roots",
    )
    assert code == 0
    pred = json.loads(out)["result"]["prediction"]
    assert pred["verdict"] == "dimension" and pred["dimension"] == 4 and pred["rule"] == "ps-generic-dimension"


@pytest.mark.parametrize("command", ["roots", "weyl", "cosets", "filtration", "ps", "steinberg", "verify"])
def test_text_format(command):
    code, out, _ = call(command, "--type", "A2", "--format", "text")
    assert code == 0 and out.strip()
    assert "\x1b[" not in out


def test_color(monkeypatch):
    from parind.cli import _use_color

    class Tty(io.StringIO):
        def isatty(self):
            return True

    monkeypatch.setenv("PARIND_COLOR", "never")
    assert not _use_color(Tty())
    monkeypatch.setenv("PARIND_COLOR", "auto")
    assert _use_color(Tty()) and not _use_color(io.StringIO())
