"""Constructions of antisymmetric Eulerian edge sets and the sequences
they spell.

Three families select edges directly by an end-difference rule; the
fourth picks a low-pseudoweight edge set one order down and lifts it
through the difference map, trading the antisymmetry requirement for the
easier negated-reversal one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import oracle
from .errors import (
    ConstructionError,
    DomainError,
    InternalInvariantError,
    ResourceCapError,
)
from .graph import (
    DBSubgraph,
    _check_cap,
    _check_code_width,
    _codes_to_digits,
    _digits_to_codes,
    circuit_to_sequence,
    component_edge_counts,
    eulerian_circuit,
    is_antinegasymmetric,
    is_antisymmetric,
    is_balanced,
    is_connected,
)
from .sequences import OrientableSequence
from .tuples import ZkTuple, count_by_doubled_pseudoweight


class Method(str, Enum):
    """Construction families, keyed by their command-line tags."""

    END_DIFFERENCE = "a"
    ODD_END_DIFFERENCE = "c"
    BLOCK_END_DIFFERENCE = "a_t"
    LEMPEL_LIFT = "lempel"


@dataclass(frozen=True)
class ConstructionRecipe:
    """Everything needed to rebuild a sequence: method and parameters.

    n is the window length of the sequence the recipe produces.
    """

    method: Method
    k: int
    n: int
    t: int | None = None
    beta: int = 1

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        k, n, t = self.k, self.n, self.t
        if self.method is Method.END_DIFFERENCE:
            if k < 3:
                raise DomainError("end-difference construction needs k >= 3")
            if n < 2:
                raise DomainError("end-difference construction needs n >= 2")
        elif self.method is Method.ODD_END_DIFFERENCE:
            if k % 2 == 0:
                raise DomainError("odd-end-difference construction needs odd k")
            if k < 5:
                raise DomainError("odd-end-difference construction needs k >= 5")
            if n < 2:
                raise DomainError("odd-end-difference construction needs n >= 2")
        elif self.method is Method.BLOCK_END_DIFFERENCE:
            if k < 5:
                raise DomainError("block-end-difference construction needs k >= 5")
            if n < 2:
                raise DomainError("block-end-difference construction needs n >= 2")
            if t is None or t < 1 or 2 * t > n:
                raise DomainError(
                    f"block width must satisfy 1 <= t <= n/2, got {t}")
        elif self.method is Method.LEMPEL_LIFT:
            if k < 3:
                raise DomainError("lifted construction needs k >= 3")
            if n < 3:
                raise DomainError("lifted construction needs n >= 3")
        if t is not None and self.method is not Method.BLOCK_END_DIFFERENCE:
            raise DomainError("t applies only to the block-end-difference method")
        if self.beta != 1:
            # The lift is defined against the plain difference map.
            raise DomainError("only beta = 1 is supported in recipes")


def _candidate_codes(k: int, n: int, cap: int | None) -> np.ndarray:
    _check_code_width(k, n)
    total = k**n
    _check_cap(total, cap)
    return np.arange(total, dtype=np.int64)


def end_difference_graph(k: int, n: int, cap: int | None = None) -> DBSubgraph:
    """Edges: n-tuples whose last symbol exceeds the first by 1..floor((k-1)/2)
    modulo k.

    Defined for k >= 3; the result is disconnected for k in {3, 4} once
    n >= 3, which generate() reports rather than hides.
    """
    if k < 3:
        raise DomainError("end-difference graph needs k >= 3")
    if n < 2:
        raise DomainError("end-difference graph needs n >= 2")
    codes = _candidate_codes(k, n, cap)
    diff = (codes % k - codes // k ** (n - 1)) % k
    mask = (diff >= 1) & (diff <= (k - 1) // 2)
    return DBSubgraph(k, n - 1, codes[mask])


def odd_end_difference_graph(k: int, n: int, cap: int | None = None) -> DBSubgraph:
    """Edges: n-tuples whose last-minus-first difference is odd modulo k."""
    if k % 2 == 0:
        raise DomainError("odd-end-difference graph needs odd k")
    if k < 5:
        raise DomainError("odd-end-difference graph needs k >= 5")
    if n < 2:
        raise DomainError("odd-end-difference graph needs n >= 2")
    codes = _candidate_codes(k, n, cap)
    diff = (codes % k - codes // k ** (n - 1)) % k
    return DBSubgraph(k, n - 1, codes[diff % 2 == 1])


def block_end_difference_graph(k: int, n: int, t: int,
                               cap: int | None = None) -> DBSubgraph:
    """Edges: n-tuples where the last t symbols outweigh the first t by
    1..floor((k-1)/2), summed modulo k.

    t = 1 reduces to the plain end-difference rule.
    """
    if k < 5:
        raise DomainError("block-end-difference graph needs k >= 5")
    if n < 2:
        raise DomainError("block-end-difference graph needs n >= 2")
    if t < 1 or 2 * t > n:
        raise DomainError(f"block width must satisfy 1 <= t <= n/2, got {t}")
    codes = _candidate_codes(k, n, cap)
    digits = _codes_to_digits(codes, k, n)
    diff = (digits[:, n - t:].sum(axis=1) - digits[:, :t].sum(axis=1)) % k
    mask = (diff >= 1) & (diff <= (k - 1) // 2)
    return DBSubgraph(k, n - 1, codes[mask])


def lempel_map(t: ZkTuple, beta: int = 1) -> ZkTuple:
    """Scaled difference map: symbol i becomes beta*(t[i+1]-t[i]) mod k.

    Shortens the word by one; beta must be a unit of Z_k.
    """
    if len(t) < 2:
        raise DomainError("difference map needs at least two symbols")
    if math.gcd(beta, t.k) != 1:
        raise DomainError(f"beta = {beta} is not a unit modulo {t.k}")
    diffs = tuple(
        (beta * (t.symbols[i + 1] - t.symbols[i])) % t.k
        for i in range(len(t) - 1))
    return ZkTuple(t.k, diffs)


def lempel_preimages(c: ZkTuple) -> list[ZkTuple]:
    """The k words mapping to c under the plain difference map.

    One per starting symbol, in starting-symbol order; each is the running
    prefix sum of c shifted by the start.
    """
    prefix = [0]
    for s in c.symbols:
        prefix.append((prefix[-1] + s) % c.k)
    return [
        ZkTuple(c.k, tuple((a + p) % c.k for p in prefix))
        for a in range(c.k)
    ]


def low_pseudoweight_graph(k: int, n: int, cap: int | None = None) -> DBSubgraph:
    """Edges: n-tuples with doubled pseudoweight below n*k.

    The resulting edge set is antinegasymmetric and balanced; it feeds the
    lift below.
    """
    if k < 2:
        raise DomainError("low-pseudoweight graph needs k >= 2")
    if n < 2:
        raise DomainError("low-pseudoweight graph needs n >= 2")
    codes = _candidate_codes(k, n, cap)
    digits = _codes_to_digits(codes, k, n)
    weights = np.where(digits == 0, k, 2 * digits).sum(axis=1)
    return DBSubgraph(k, n - 1, codes[weights < n * k])


def lempel_lift(g: DBSubgraph, cap: int | None = None) -> DBSubgraph:
    """Preimage of an edge set under the difference map: k edges per edge,
    one order up."""
    k = g.k
    length = g.order + 1
    _check_code_width(k, length + 1)
    _check_cap(k * g.edge_count, cap)
    digits = _codes_to_digits(g.edges, k, length)
    prefix = np.zeros((g.edge_count, length + 1), dtype=np.int64)
    np.cumsum(digits, axis=1, out=prefix[:, 1:])
    prefix %= k
    lifted = np.concatenate([
        _digits_to_codes((prefix + a) % k, k) for a in range(k)
    ])
    lifted.sort()
    if np.unique(lifted).size != lifted.size:
        raise InternalInvariantError("difference-map preimages collided")
    return DBSubgraph(k, length, lifted)


def lifted_low_pseudoweight_graph(k: int, n: int,
                                  cap: int | None = None) -> DBSubgraph:
    """The low-pseudoweight edge set on n-tuples, lifted to (n+1)-tuples."""
    return lempel_lift(low_pseudoweight_graph(k, n, cap), cap)


def _build_graph(recipe: ConstructionRecipe) -> DBSubgraph:
    if recipe.method is Method.END_DIFFERENCE:
        return end_difference_graph(recipe.k, recipe.n)
    if recipe.method is Method.ODD_END_DIFFERENCE:
        return odd_end_difference_graph(recipe.k, recipe.n)
    if recipe.method is Method.BLOCK_END_DIFFERENCE:
        return block_end_difference_graph(recipe.k, recipe.n, recipe.t)
    base = low_pseudoweight_graph(recipe.k, recipe.n - 1)
    ok, witness = is_antinegasymmetric(base)
    if not ok:
        raise InternalInvariantError(
            f"low-pseudoweight set is not antinegasymmetric: {witness}")
    balanced, bad = is_balanced(base)
    if not balanced:
        raise InternalInvariantError(
            f"low-pseudoweight set is not balanced at {bad[0]}")
    return lempel_lift(base)


def expected_period(recipe: ConstructionRecipe) -> int:
    """The period the recipe is guaranteed to produce when it succeeds.

    End-difference family: floor((k-1)/2) * k**(n-1).  Lift: k times half
    the count of (n-1)-tuples off the pseudoweight threshold.  The block
    variant with t >= 2 has no closed form here; its edge set is counted
    directly.
    """
    k, n = recipe.k, recipe.n
    if recipe.method in (Method.END_DIFFERENCE, Method.ODD_END_DIFFERENCE):
        return (k - 1) // 2 * k ** (n - 1)
    if recipe.method is Method.BLOCK_END_DIFFERENCE:
        if recipe.t == 1:
            return (k - 1) // 2 * k ** (n - 1)
        return block_end_difference_graph(k, n, recipe.t).edge_count
    threshold_count = count_by_doubled_pseudoweight(k, n - 1, (n - 1) * k)
    below_pairs = k ** (n - 1) - threshold_count
    if below_pairs % 2:
        raise InternalInvariantError(
            "off-threshold tuples failed to pair up under negated reversal")
    return k * below_pairs // 2


def generate(recipe: ConstructionRecipe) -> OrientableSequence:
    """Run a recipe end to end: build, certify, extract, verify.

    Certification failures that the constructions rule out raise
    InternalInvariantError; a disconnected edge set (possible for the
    end-difference family at k in {3, 4}) raises ConstructionError with
    the component report.
    """
    g = _build_graph(recipe)
    ok, witness = is_antisymmetric(g)
    if not ok:
        raise InternalInvariantError(
            f"constructed edge set is not antisymmetric: {witness}")
    balanced, bad = is_balanced(g)
    if not balanced:
        raise InternalInvariantError(
            f"constructed edge set is not balanced at {bad[0]}")
    connected, ncomp = is_connected(g)
    if not connected:
        sizes = component_edge_counts(g)
        raise ConstructionError(
            f"edge set splits into {ncomp} strongly-connected components "
            f"(edge counts {', '.join(map(str, sizes))}); "
            f"no single circuit covers it",
            component_count=ncomp, component_edge_counts=sizes)
    circuit = eulerian_circuit(g)
    symbols = circuit_to_sequence(circuit)
    verdict = oracle.verify(symbols, recipe.n, recipe.k)
    if not verdict.accepted:
        raise InternalInvariantError(
            f"extracted sequence failed verification: {verdict.message}")
    want = expected_period(recipe)
    if symbols.size != want:
        raise InternalInvariantError(
            f"period {symbols.size} differs from expected {want}")
    return OrientableSequence(k=recipe.k, n=recipe.n, period=int(symbols.size),
                              symbols=symbols, recipe=recipe)
