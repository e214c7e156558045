import json

import pytest

from hessaut import cli


def test_unknown_suite_gives_usage_error(capsys):
    assert cli.main(["verify", "nonsense"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_golay_suite_passes(capsys):
    assert cli.main(["verify", "golay"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] golay.octad-count expected=759 actual=759" in out


def test_json_reports_are_byte_identical_for_equal_seeds(capsys):
    cli.main(["verify", "leech", "--json", "--seed", "7"])
    first = capsys.readouterr().out
    cli.main(["verify", "leech", "--json", "--seed", "7"])
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["suite"] == "leech"
    assert doc["duration_ms"] == 0
    assert all(set(c) == {"id", "status", "expected", "actual", "ref"} for c in doc["checks"])
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_suite_option_spelling(capsys):
    assert cli.main(["verify", "--suite", "golay"]) == 0
    capsys.readouterr()


def test_reduce_word_command(capsys):
    assert cli.main(["reduce", "--word", "p16,tau", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["word"] == ["p16", "tau"]
    assert doc["residual"] is not None
    assert doc["heights"][-1] == 20


def test_reduce_rejects_unknown_generator(capsys):
    assert cli.main(["reduce", "--word", "p16,bogus"]) == 2
    assert "unknown generator" in capsys.readouterr().err


def test_failing_check_exits_one(monkeypatch, capsys):
    def broken(seed):
        return [cli.Check("fake.broken", "fail", "1", "2", "forced failure")]

    monkeypatch.setitem(cli.SUITES, "golay", broken)
    assert cli.main(["verify", "golay"]) == 1
    assert "[FAIL] fake.broken" in capsys.readouterr().out
