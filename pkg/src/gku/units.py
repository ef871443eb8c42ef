"""Structure of the iterated unit groups U^k(Z_n).

``U^0(Z_n)`` is the additive group ``Z_n``; ``U^k(Z_n)`` is the unit group of
the ring carried by the cyclic decomposition of ``U^{k-1}(Z_n)``.  Since the
units of a direct sum are the product of the units of the summands, all the
work reduces to prime-power moduli, which is what the memo table is keyed on.

The closed forms for moduli 2^a, 3^a, 5^a, 7^a and the expansion of an odd
prime power into levels of ``U^i(Z_p)`` are kept separately from the generic
engine so they can be checked against it.
"""

from __future__ import annotations

import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .abelian import TRIVIAL, GroupShape, from_cyclic, product
from .arith import Factorization, factorize, is_prime

Modulus = Union[int, Factorization]


class UnitsQuery(NamedTuple):
    modulus: int
    level: int


def _memo_cap() -> int | None:
    raw = os.environ.get("GKU_MEMO_CAP")
    if not raw:
        return None
    cap = int(raw)
    if cap < 1:
        raise ValueError("GKU_MEMO_CAP must be positive")
    return cap


_MEMO_CAP = _memo_cap()
_levels: dict[tuple[int, int], list[GroupShape]] = {}
_unit_memo: dict[tuple[int, int], GroupShape] = {}
_lock = threading.Lock()


def clear_caches() -> None:
    with _lock:
        _levels.clear()
        _unit_memo.clear()


def _store(table: dict, key, value) -> None:
    with _lock:
        if _MEMO_CAP is not None and len(table) >= _MEMO_CAP:
            table.clear()
        table[key] = value


def _as_factorization(n: Modulus) -> Factorization:
    if isinstance(n, Factorization):
        return n
    return factorize(n)


def _cyclic_prime_power(p: int, a: int) -> GroupShape:
    return GroupShape(((p, a),)) if a > 0 else TRIVIAL


def unit_shape_prime_power(p: int, a: int) -> GroupShape:
    """``U(Z_{p^a})``.

    >>> unit_shape_prime_power(13, 2).orders()
    [4, 3, 13]
    """
    if a < 1:
        raise ValueError("exponent must be at least 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _units_pp(p, a)


def _units_pp(p: int, a: int) -> GroupShape:
    key = (p, a)
    hit = _unit_memo.get(key)
    if hit is not None:
        return hit
    if p == 2:
        if a == 1:
            shape = TRIVIAL
        else:
            shape = product(_cyclic_prime_power(2, 1), _cyclic_prime_power(2, a - 2))
    else:
        shape = product(from_cyclic(p - 1), _cyclic_prime_power(p, a - 1))
    _store(_unit_memo, key, shape)
    return shape


def unit_shape(n: Modulus) -> GroupShape:
    """``U(Z_n)`` as a product over the prime-power parts of ``n``."""
    f = _as_factorization(n)
    return product(*(_units_pp(p, a) for p, a in f))


def iterate_units(s: GroupShape) -> GroupShape:
    """Units of the ring ``Z_{q1^e1} + Z_{q2^e2} + ...`` carried by ``s``."""
    return product(*(_units_pp(q, e) for q, e in s))


def _uk_prime_power(p: int, a: int, k: int) -> GroupShape:
    """Level ``k`` of the memoized chain ``U^0, U^1, ...`` of ``Z_{p^a}``.

    The chain ends at its first trivial level, so any ``k`` past the end is
    answered without further work.
    """
    chain = _levels.get((p, a))
    if chain is None:
        chain = [_cyclic_prime_power(p, a)]
    if k < len(chain):
        return chain[k]
    if not chain[-1]:
        return TRIVIAL
    # build a private copy and publish it whole; readers never see a
    # half-extended chain
    chain = list(chain)
    bound = (p**a).bit_length() + 2
    current = Counter(chain[-1].factors)
    while len(chain) <= k and current:
        nxt: Counter = Counter()
        for (q, e), mult in current.items():
            for entry in _units_pp(q, e).factors:
                nxt[entry] += mult
        current = nxt
        chain.append(GroupShape(tuple(sorted(current.elements()))))
        # along any lineage each step at least halves the entry, except one
        # step from a Fermat prime q to the power of two q - 1
        assert not current or len(chain) <= bound, (p, a, len(chain))
    _store(_levels, (p, a), chain)
    return chain[k] if k < len(chain) else TRIVIAL


def uk_shape(n: Modulus | UnitsQuery, k: int | None = None) -> GroupShape:
    """Primary decomposition of ``U^k(Z_n)``.

    >>> uk_shape(338, 2).orders()
    [2, 2, 4, 3]
    >>> uk_shape(338, 4)
    GroupShape(factors=())
    """
    if isinstance(n, UnitsQuery):
        n, k = n.modulus, n.level
    if k is None or k < 0:
        raise ValueError("level k must be a non-negative integer")
    f = _as_factorization(n)
    if k == 0:
        return GroupShape(f.factors)
    return product(*(_uk_prime_power(p, a, k) for p, a in f))


# -- closed forms ------------------------------------------------------------


def two_power_case(alpha: int, k: int) -> str:
    if alpha > 2 * k:
        return "alpha>2k"
    if alpha == 2 * k:
        return "alpha=2k"
    return "alpha<2k"


def uk_two_power_closed(alpha: int, k: int) -> GroupShape:
    """``U^k(Z_{2^alpha})`` without iterating."""
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be positive")
    case = two_power_case(alpha, k)
    if case == "alpha>2k":
        return product(_cyclic_prime_power(2, 1), _cyclic_prime_power(2, alpha - 2 * k))
    if case == "alpha=2k":
        return _cyclic_prime_power(2, 1)
    return TRIVIAL


def three_power_case(alpha: int, k: int) -> str:
    if alpha > k:
        return "alpha>k"
    return "alpha=k" if alpha == k else "alpha<k"


def uk_three_power_closed(alpha: int, k: int) -> GroupShape:
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be positive")
    case = three_power_case(alpha, k)
    if case == "alpha>k":
        return product(_cyclic_prime_power(2, 1), _cyclic_prime_power(3, alpha - k))
    if case == "alpha=k":
        return _cyclic_prime_power(2, 1)
    return TRIVIAL


def _five_seven_case(alpha: int, k: int) -> str:
    if k == 1:
        return "k=1"
    if alpha > k:
        return "alpha>k"
    if alpha == k:
        return "alpha=k"
    return "alpha=k-1" if alpha == k - 1 else "alpha<k-1"


five_power_case = seven_power_case = _five_seven_case


def uk_five_power_closed(alpha: int, k: int) -> GroupShape:
    """``U^k(Z_{5^alpha})``.

    The generic pattern needs ``U^1(Z_4) = Z_2`` to be one of the
    factors, which only happens for ``k >= 2``; at ``k = 1`` the group is
    just ``Z_4 x Z_{5^(alpha-1)}``.
    """
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be positive")
    z2, z4 = _cyclic_prime_power(2, 1), _cyclic_prime_power(2, 2)
    case = five_power_case(alpha, k)
    if case == "k=1":
        return product(z4, _cyclic_prime_power(5, alpha - 1))
    if case == "alpha>k":
        return product(z2, z4, _cyclic_prime_power(5, alpha - k))
    if case == "alpha=k":
        return product(z2, z4)
    if case == "alpha=k-1":
        return z2
    return TRIVIAL


def uk_seven_power_closed(alpha: int, k: int) -> GroupShape:
    """``U^k(Z_{7^alpha})``; same ``k = 1`` caveat as the 5-power form."""
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be positive")
    z2, z6 = _cyclic_prime_power(2, 1), from_cyclic(6)
    case = seven_power_case(alpha, k)
    if case == "k=1":
        return product(z6, _cyclic_prime_power(7, alpha - 1))
    if case == "alpha>k":
        return product(z2, z6, _cyclic_prime_power(7, alpha - k))
    if case == "alpha=k":
        return product(z2, z6)
    if case == "alpha=k-1":
        return z2
    return TRIVIAL


def odd_expand_case(alpha: int, k: int) -> str:
    return three_power_case(alpha, k)


def uk_odd_prime_power_expand(p: int, alpha: int, k: int) -> GroupShape:
    """``U^k(Z_{p^alpha})`` as ``U^k(Z_p) x U^{k-1}(Z_p) x ...``.

    The product runs over ``min(alpha, k)`` consecutive levels of ``Z_p``;
    when ``alpha > k`` a cyclic ``Z_{p^(alpha-k)}`` factor is left over.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if alpha < 1 or k < 1:
        raise ValueError("alpha and k must be positive")
    parts = [uk_shape(p, k - j) for j in range(min(alpha, k))]
    if alpha > k:
        parts.append(_cyclic_prime_power(p, alpha - k))
    return product(*parts)


# -- recursion trace ---------------------------------------------------------

RULES = ("base-2-power", "base-odd-prime-power", "crt-split", "cyclic-units")


@dataclass
class TraceNode:
    modulus: int
    level: int
    rule: str
    shape: GroupShape
    prime: int | None = None
    exponent: int | None = None
    children: list["TraceNode"] = field(default_factory=list)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def to_json(self) -> dict:
        out = {
            "modulus": self.modulus,
            "level": self.level,
            "rule": self.rule,
            "shape": self.shape.to_json(),
            "children": [c.to_json() for c in self.children],
        }
        if self.prime is not None:
            out["prime"] = self.prime
            out["exponent"] = self.exponent
        return out


@dataclass
class RecursionTrace:
    root_modulus: int
    level: int
    root: TraceNode

    def depth_levels(self) -> list[list[int]]:
        """Primes of the prime-power nodes at each depth below the root(s).

        For a composite root the crt-split node is skipped, so depth 0 holds
        the prime-power parts of the modulus.
        """
        frontier = self.root.children if self.root.rule == "crt-split" else [self.root]
        levels = []
        frontier = [c for n in frontier for c in n.children]
        while frontier:
            levels.append([n.prime for n in frontier])
            frontier = [c for n in frontier for c in n.children]
        return levels

    def primes(self) -> set[int]:
        return {n.prime for n in self.root.walk() if n.prime is not None}

    def to_json(self) -> dict:
        return {"modulus": self.root_modulus, "k": self.level, "root": self.root.to_json()}

    def to_dot(self, name: str = "trace") -> str:
        lines = [f"digraph {name} {{", "  node [shape=box];"]
        ids: dict[int, str] = {}
        for i, node in enumerate(self.root.walk()):
            ids[id(node)] = f"n{i}"
            if node.prime is None:
                label = f"Z_{node.modulus}"
            else:
                label = f"U^{node.level}(Z_{_pp_label(node.prime, node.exponent)})"
            lines.append(f'  n{i} [label="{label}\\n{node.rule}"];')
        for node in self.root.walk():
            for c in node.children:
                lines.append(f"  {ids[id(node)]} -> {ids[id(c)]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _pp_label(p: int, e: int | None) -> str:
    return f"{p}^{e}" if e and e > 1 else str(p)


def _trace_prime_power(p: int, a: int, k: int) -> TraceNode:
    shape = _uk_prime_power(p, a, k) if k > 0 else _cyclic_prime_power(p, a)
    if p == 2:
        return TraceNode(2**a, k, "base-2-power", shape, 2, a)
    if k == 0:
        return TraceNode(p**a, k, "cyclic-units", shape, p, a)
    node = TraceNode(p**a, k, "base-odd-prime-power", shape, p, a)
    # U^k(Z_{p^a}) only needs U^i(Z_{p-1}) for levels i <= k - 1, so the
    # subtree hangs off the prime factors of p - 1 at level k - 1
    for q, e in factorize(p - 1):
        node.children.append(_trace_prime_power(q, e, k - 1))
    return node


def decomposition_trace(n: Modulus, k: int) -> RecursionTrace:
    """Recursion tree of subproblems visited while decomposing ``U^k(Z_n)``.

    Each odd prime-power node ``p^a`` has one child per prime-power part of
    ``p - 1``; powers of two are leaves (they have a closed form), as are
    odd nodes whose level has run out.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    f = _as_factorization(n)
    value = f.value
    if len(f) == 1:
        (p, a), = f.factors
        root = _trace_prime_power(p, a, k)
    else:
        root = TraceNode(value, k, "crt-split" if len(f) > 1 else "cyclic-units", uk_shape(f, k))
        root.children = [_trace_prime_power(p, a, k) for p, a in f]
    return RecursionTrace(value, k, root)
