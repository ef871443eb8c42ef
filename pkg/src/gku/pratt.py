"""Pratt primality certificates and Pratt trees.

A certificate for an odd prime p names a witness g of multiplicative order
p - 1, the factorization of p - 1, and a certificate for every prime in that
factorization; the certificate for 2 is an axiom leaf.  The Pratt tree keeps
just the primes: the children of p are the distinct primes dividing p - 1.

The tree has the same shape as the recursion that decomposes U^k(Z_p):
every odd prime p hands its work to the prime-power parts of p - 1.
:func:`correspondence_check` compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .arith import Factorization, factorize, find_primitive_root, is_prime
from .units import decomposition_trace


class CompositeError(ValueError):
    pass


@dataclass(frozen=True)
class PrattCert:
    prime: int
    witness: int
    factored_p_minus_1: Factorization
    children: tuple["PrattCert", ...] = ()

    @property
    def is_axiom(self) -> bool:
        return self.prime == 2

    def nodes(self) -> Iterator["PrattCert"]:
        yield self
        for c in self.children:
            yield from c.nodes()

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "witness": self.witness,
            "factors": self.factored_p_minus_1.to_json(),
            "children": [c.to_json() for c in self.children],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PrattCert":
        return cls(
            int(data["prime"]),
            int(data["witness"]),
            Factorization(tuple((int(p), int(e)) for p, e in data["factors"])),
            tuple(cls.from_json(c) for c in data.get("children", ())),
        )


AXIOM_TWO = PrattCert(2, 1, Factorization())


@lru_cache(maxsize=None)
def build_cert(p: int) -> PrattCert:
    """Certificate with the smallest valid witness at every node."""
    if p == 2:
        return AXIOM_TWO
    if not is_prime(p):
        raise CompositeError(f"{p} is not prime")
    f = factorize(p - 1)
    g = find_primitive_root(p, f)
    children = tuple(build_cert(q) for q in f.primes)
    return PrattCert(p, g, f, children)


def cert_failure(c: PrattCert) -> str | None:
    """Path to the first node that fails verification, or None if valid.

    Only modular arithmetic is used here; in particular the primality test
    of :mod:`gku.arith` is never consulted.
    """
    p = c.prime
    if p == 2:
        if c.children or c.factored_p_minus_1.factors:
            return "2: axiom leaf carries data"
        return None
    if p < 3:
        return f"{p}: not a candidate prime"
    f = c.factored_p_minus_1
    if f.value != p - 1:
        return f"{p}: factors multiply to {f.value}, not {p - 1}"
    child_primes = [ch.prime for ch in c.children]
    if sorted(child_primes) != list(f.primes):
        return f"{p}: children {child_primes} do not match factors {list(f.primes)}"
    g = c.witness % p
    if pow(g, p - 1, p) != 1:
        return f"{p}: witness {c.witness} fails g^(p-1) = 1"
    for q in f.primes:
        if pow(g, (p - 1) // q, p) == 1:
            return f"{p}: witness {c.witness} has order dividing (p-1)/{q}"
    for ch in c.children:
        if ch.prime >= p:
            return f"{p}: child {ch.prime} does not decrease"
        sub = cert_failure(ch)
        if sub is not None:
            return f"{p} -> {sub}"
    return None


def verify_cert(c: PrattCert) -> bool:
    return cert_failure(c) is None


@dataclass
class PrattNode:
    prime: int
    children: list["PrattNode"] = field(default_factory=list)

    def walk(self) -> Iterator["PrattNode"]:
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class PrattTree:
    root: PrattNode
    levels: list[list[int]]

    @property
    def prime(self) -> int:
        return self.root.prime

    @property
    def depth(self) -> int:
        return len(self.levels)

    def primes(self) -> set[int]:
        return {n.prime for n in self.root.walk()}

    def chains(self) -> Iterator[list[int]]:
        """Root-to-leaf prime paths, listed from the leaf up (2 first)."""

        def go(node: PrattNode, path: list[int]):
            path = [node.prime] + path
            if not node.children:
                yield path
            for c in node.children:
                yield from go(c, path)

        yield from go(self.root, [])

    def to_json(self) -> dict:
        return {"prime": self.prime, "levels": self.levels}

    def to_dot(self, name: str = "pratt") -> str:
        lines = [f"digraph {name} {{", "  node [shape=circle];"]
        lines += _dot_body(self.root, "p")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_body(root: PrattNode, prefix: str) -> list[str]:
    lines = []
    ids = {}
    for i, node in enumerate(root.walk()):
        ids[id(node)] = f"{prefix}{i}"
        lines.append(f'  {prefix}{i} [label="{node.prime}"];')
    for node in root.walk():
        for c in node.children:
            lines.append(f"  {ids[id(node)]} -> {ids[id(c)]};")
    return lines


def _tree_node(p: int) -> PrattNode:
    node = PrattNode(p)
    if p != 2:
        node.children = [_tree_node(q) for q in factorize(p - 1).primes]
    return node


def build_tree(p: int) -> PrattTree:
    """Pratt tree of ``p`` with its per-level prime multisets.

    >>> build_tree(269).levels
    [[2, 67], [2, 3, 11], [2, 2, 5], [2]]
    """
    if not is_prime(p):
        raise CompositeError(f"{p} is not prime")
    root = _tree_node(p)
    levels = []
    frontier = root.children
    while frontier:
        levels.append([n.prime for n in frontier])
        frontier = [c for n in frontier for c in n.children]
    return PrattTree(root, levels)


def correspondence_check(p: int) -> bool:
    """Same primes, level by level, in the Pratt tree of ``p`` and in the
    decomposition trace of ``U^k(Z_p)`` with ``k`` the tree depth."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    tree = build_tree(p)
    trace = decomposition_trace(p, tree.depth)
    if trace.primes() != tree.primes():
        return False
    got = [sorted(level) for level in trace.depth_levels()]
    want = [sorted(level) for level in tree.levels]
    return got == want


def equivalence_dot(p: int, k: int | None = None) -> str:
    """Two-cluster DOT graph: the decomposition trace of ``U^k(Z_p)`` beside
    the Pratt tree of ``p``."""
    tree = build_tree(p)
    k = tree.depth if k is None else k
    trace = decomposition_trace(p, k)
    lines = ["digraph equivalence {", "  subgraph cluster_decomposition {",
             f'    label="U^{k}(Z_{p}) decomposition";', "    node [shape=box];"]
    ids = {}
    for i, node in enumerate(trace.root.walk()):
        ids[id(node)] = f"d{i}"
        lines.append(f'    d{i} [label="U^{node.level}(Z_{node.modulus})"];')
    for node in trace.root.walk():
        for c in node.children:
            lines.append(f"    {ids[id(node)]} -> {ids[id(c)]};")
    lines += ["  }", "  subgraph cluster_pratt {", f'    label="Pratt tree of {p}";',
              "    node [shape=circle];"]
    lines += ["  " + line for line in _dot_body(tree.root, "t")]
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"
