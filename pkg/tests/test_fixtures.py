import json

from gku import units
from gku.abelian import GroupShape
from gku.cli import main
from gku.fixtures import FIXTURES, run_fixtures


def test_all_fixtures_pass():
    failed = [r for r in run_fixtures() if not r.passed]
    assert not failed, failed


def test_fixture_names_are_unique():
    names = [f.name for f in FIXTURES]
    assert len(names) == len(set(names))


def test_suite_cli(capsys):
    assert main(["paper-suite"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == f"{len(FIXTURES)}/{len(FIXTURES)} fixtures passed"
    assert all(line.startswith("PASS ") for line in out[:-1])


def test_suite_json(capsys):
    assert main(["paper-suite", "--json"]) == 0
    js = json.loads(capsys.readouterr().out)
    assert js["command"] == "paper-suite" and js["result"]["passed"] is True
    assert len(js["result"]["fixtures"]) == len(FIXTURES)


def test_injected_fault_names_fixture(monkeypatch, capsys):
    real = units.unit_shape_prime_power

    def faulty(p, a):
        if (p, a) == (13, 2):
            return GroupShape.from_orders([12])  # drops the Z_13 factor
        return real(p, a)

    monkeypatch.setattr(units, "unit_shape_prime_power", faulty)
    assert main(["paper-suite"]) == 1
    out = capsys.readouterr().out
    assert "FAIL unit_shape_prime_power(13,2)" in out


def test_injected_engine_fault(monkeypatch, capsys, fresh_caches):
    real = units._units_pp

    def faulty(p, a):
        if p == 13:
            return GroupShape.from_orders([12])  # drops Z_{13^(a-1)}
        return real(p, a)

    monkeypatch.setattr(units, "_units_pp", faulty)
    units.clear_caches()
    assert main(["paper-suite", "--json"]) == 1
    js = json.loads(capsys.readouterr().out)
    failed = {f["name"] for f in js["result"]["fixtures"] if not f["passed"]}
    assert "uk_shape(338,1)" in failed and "unit_shape(338)" in failed
