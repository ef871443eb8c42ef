"""Named worked-example fixtures, runnable as one report.

Every fixture looks its function up through the owning module at run time,
so a monkeypatched function shows up as a named failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import abelian, arith, classify, oracle, pratt, units


def _shape(*orders: int) -> abelian.GroupShape:
    return abelian.GroupShape.from_orders(orders)


@dataclass(frozen=True)
class Fixture:
    name: str
    compute: Callable[[], Any]
    expected: Any


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _fixtures() -> list[Fixture]:
    F = Fixture
    fx = [
        F("is_prime(269)", lambda: arith.is_prime(269), True),
        F("is_prime(268)", lambda: arith.is_prime(268), False),
        F("factorize(338)", lambda: arith.factorize(338).factors, ((2, 1), (13, 2))),
        F("from_cyclic(338)", lambda: abelian.from_cyclic(338), _shape(2, 169)),
        F("product({2,4},{2,5})", lambda: abelian.product(_shape(2, 4), _shape(2, 5)), _shape(2, 2, 4, 5)),
        F("is_boolean(U^3(Z_338))", lambda: abelian.is_boolean(units.uk_shape(338, 3)), True),
        F("unit_shape_prime_power(2,1)", lambda: units.unit_shape_prime_power(2, 1), _shape()),
        F("unit_shape_prime_power(2,4)", lambda: units.unit_shape_prime_power(2, 4), _shape(2, 4)),
        F("unit_shape_prime_power(13,2)", lambda: units.unit_shape_prime_power(13, 2), _shape(12, 13)),
        F("unit_shape(2)", lambda: units.unit_shape(2), _shape()),
        F("unit_shape(338)", lambda: units.unit_shape(338), _shape(12, 13)),
        F("iterate_units(Z_12 x Z_13)", lambda: units.iterate_units(_shape(12, 13)), _shape(2, 2, 12)),
        F("iterate_units(Z_2 x Z_2 x Z_12)", lambda: units.iterate_units(_shape(2, 2, 12)), _shape(2, 2)),
    ]
    for k, want in enumerate([_shape(12, 13), _shape(2, 2, 12), _shape(2, 2), _shape()], start=1):
        fx.append(F(f"uk_shape(338,{k})", lambda k=k: units.uk_shape(338, k), want))
    fx += [
        F("uk_shape(47^6,8)", lambda: units.uk_shape(47**6, 8), _shape(2, 4, 2, 5)),
        F("uk_shape(23^6,9)", lambda: units.uk_shape(23**6, 9), _shape(2)),
    ]
    for k, want in enumerate([_shape(22), _shape(10), _shape(4), _shape(2)], start=1):
        fx.append(F(f"uk_shape(23,{k})", lambda k=k: units.uk_shape(23, k), want))
    fx += [
        F("uk_shape(47,5)", lambda: units.uk_shape(47, 5), _shape(2)),
        F("uk_two_power_closed(alpha=3,k=3)", lambda: units.uk_two_power_closed(3, 3), _shape()),
        F("uk_two_power_closed(alpha=6,k=3)", lambda: units.uk_two_power_closed(6, 3), _shape(2)),
        F("uk_two_power_closed(alpha=8,k=3)", lambda: units.uk_two_power_closed(8, 3), _shape(2, 4)),
        F("uk_three_power_closed(5,3)", lambda: units.uk_three_power_closed(5, 3), _shape(2, 9)),
        F("uk_three_power_closed(4,4)", lambda: units.uk_three_power_closed(4, 4), _shape(2)),
        F("uk_three_power_closed(2,3)", lambda: units.uk_three_power_closed(2, 3), _shape()),
        F("uk_five_power_closed(3,2)", lambda: units.uk_five_power_closed(3, 2), _shape(2, 4, 5)),
        F("uk_five_power_closed(2,3)", lambda: units.uk_five_power_closed(2, 3), _shape(2)),
        F("uk_five_power_closed(1,3)", lambda: units.uk_five_power_closed(1, 3), _shape()),
        F("uk_seven_power_closed(2,2)", lambda: units.uk_seven_power_closed(2, 2), _shape(2, 6)),
        F("uk_seven_power_closed(3,2)", lambda: units.uk_seven_power_closed(3, 2), _shape(2, 6, 7)),
        F("uk_seven_power_closed(1,4)", lambda: units.uk_seven_power_closed(1, 4), _shape()),
        F("uk_odd_prime_power_expand(47,6,8)", lambda: units.uk_odd_prime_power_expand(47, 6, 8), _shape(2, 4, 2, 5)),
        F("decomposition_trace(269).levels",
          lambda: [sorted(set(lv)) for lv in units.decomposition_trace(269, 4).depth_levels()],
          [[2, 67], [2, 3, 11], [2, 5], [2]]),
        F("classify(2^6,3)", lambda: _verdict_rule(2**6, 3), ("boolean", "2^a:alpha=2k")),
        F("classify(23^6,9)", lambda: _verdict_shape(23**6, 9), ("boolean", _shape(2))),
        F("classify(3^4,4)", lambda: classify.classify(3**4, 4).verdict, "boolean"),
        F("classify(3^12,12)", lambda: classify.classify(531441, 12).verdict, "boolean"),
        F("stabilization_index(338)", lambda: classify.stabilization_index(338), 4),
        F("stabilization_index(24)", lambda: classify.stabilization_index(24), 2),
        F("trivializing_bound(1)", lambda: classify.trivializing_bound(1).value, 2),
        F("trivializing_bound(2)", lambda: classify.trivializing_bound(2).value, 24),
        F("trivializing_bound(3)", lambda: classify.trivializing_bound(3).value, 131040),
        F("check_bound(N_2)", lambda: classify.check_bound(classify.trivializing_bound(2), 100).ok, True),
        F("check_bound(N_3)", lambda: classify.check_bound(classify.trivializing_bound(3), 100).ok, True),
        F("shift_equivalence(23,6,9,3)", lambda: classify.shift_equivalence(23, 6, 9, 3), True),
        F("uk_shape(23^9,12)", lambda: units.uk_shape(23**9, 12), _shape(2)),
        F("shift_equivalence(3,5,5,4)", lambda: classify.shift_equivalence(3, 5, 5, 4), True),
        F("brute_unit_shape(8)", lambda: oracle.brute_unit_shape(8), _shape(2, 2)),
        F("brute_uk(338,2)", lambda: oracle.brute_uk(338, 2), _shape(2, 2, 12)),
        F("brute_uk(338,4)", lambda: oracle.brute_uk(338, 4), _shape()),
        F("brute_uk(47,5)", lambda: oracle.brute_uk(47, 5), _shape(2)),
        F("build_cert(269).children", lambda: [c.prime for c in pratt.build_cert(269).children], [2, 67]),
        F("verify_cert(build_cert(269))", lambda: pratt.verify_cert(pratt.build_cert(269)), True),
        F("build_tree(269).levels", lambda: pratt.build_tree(269).levels, [[2, 67], [2, 3, 11], [2, 2, 5], [2]]),
        F("correspondence_check(269)", lambda: pratt.correspondence_check(269), True),
    ]
    return fx


def _verdict_rule(n, k):
    c = classify.classify(n, k)
    return c.verdict, c.rule


def _verdict_shape(n, k):
    c = classify.classify(n, k)
    return c.verdict, c.shape


FIXTURES = _fixtures()


def run_fixtures(fixtures: list[Fixture] | None = None) -> list[FixtureResult]:
    results = []
    for fx in FIXTURES if fixtures is None else fixtures:
        try:
            got = fx.compute()
        except Exception as exc:  # a crashing fixture is a failing fixture
            results.append(FixtureResult(fx.name, False, f"raised {type(exc).__name__}: {exc}"))
            continue
        if got == fx.expected:
            results.append(FixtureResult(fx.name, True, "ok"))
        else:
            results.append(FixtureResult(fx.name, False, f"expected {fx.expected!r}, got {got!r}"))
    return results
