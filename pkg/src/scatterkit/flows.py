"""Finite checks of the linear-order dynamics.

LO(X) is the set of linear orders on X, acted on by permutations via
x (g<) y iff g^-1(x) < g^-1(y); on a ranked sequence this is plain
relabelling.  For finite X the action is simply transitive, and for a
fully transitive finite space the homeomorphism group acts simply
transitively on the product of the LO spaces of its similarity classes,
matching the flow of the (compact, because finite) group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .errors import BoundExceededError, DomainError
from .finite import FiniteSpace, is_fully_transitive

__all__ = [
    "lo_space",
    "act",
    "check_simply_transitive",
    "product_flow_check",
    "FlowReport",
]

DEFAULT_MAX_ENUMERATION = 8
DEFAULT_MAX_FLOW_SIZE = 40320


def lo_space(n: int, max_n: int = DEFAULT_MAX_ENUMERATION) -> list[tuple[int, ...]]:
    """All linear orders on {1..n}, each as its increasing sequence."""
    if n > max_n:
        raise BoundExceededError(f"LO enumeration is limited to {max_n} elements")
    return [perm for perm in itertools.permutations(range(1, n + 1))]


def act(g, order):
    """Translate a ranked sequence by a permutation (a mapping or a dict)."""
    if isinstance(g, dict):
        missing = [x for x in order if x not in g]
        if missing:
            raise DomainError(f"permutation does not cover {missing[0]!r}")
        return tuple(g[x] for x in order)
    if len(g) != len(order):
        raise DomainError("permutation and order have different ground sets")
    return tuple(g[x - 1] for x in order)


def check_simply_transitive(n: int, max_n: int = DEFAULT_MAX_ENUMERATION) -> bool:
    """Exactly one permutation carries any linear order to any other.

    Counted exhaustively: every (permutation, order) pair contributes one
    (source, target) incidence, and simple transitivity means the
    incidence table is everywhere exactly one.
    """
    orders = lo_space(n, max_n=max_n)
    perms = list(itertools.permutations(range(1, n + 1)))
    counts: dict[tuple[int, int], int] = {}
    index = {o: i for i, o in enumerate(orders)}
    for g in perms:
        for i, order in enumerate(orders):
            target = tuple(g[x - 1] for x in order)
            key = (i, index[target])
            counts[key] = counts.get(key, 0) + 1
    total = len(orders)
    if len(counts) != total * total:
        return False
    return all(c == 1 for c in counts.values())


@dataclass(frozen=True)
class FlowReport:
    flow_size: int
    group_order: int
    simply_transitive: bool
    minimal: bool
    factor_sizes: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.simply_transitive and self.minimal


def product_flow_check(
    space: FiniteSpace,
    max_flow: int = DEFAULT_MAX_FLOW_SIZE,
) -> FlowReport:
    """Let the homeomorphism group act factor-wise on the product of the
    LO spaces of the similarity classes and verify the action is simply
    transitive and every orbit is the whole product."""
    report = is_fully_transitive(space)
    if not report.holds:
        raise DomainError(
            "product flow check requires a fully transitive space; "
            f"counterexample pair {report.failure}"
        )
    group, part = report.group, report.partition
    blocks = part.blocks
    flow_size = 1
    for block in blocks:
        flow_size *= factorial(len(block))
    if flow_size > max_flow:
        raise BoundExceededError(f"flow has {flow_size} points, above the bound of {max_flow}")

    block_orders = [list(itertools.permutations(block)) for block in blocks]
    flow = list(itertools.product(*block_orders))
    index = {pt: i for i, pt in enumerate(flow)}
    counts: dict[tuple[int, int], int] = {}
    elements = group.sorted_elements()
    for perm in elements:
        mapping = group.as_mapping(perm)
        for i, pt in enumerate(flow):
            target = tuple(tuple(mapping[x] for x in order) for order in pt)
            key = (i, index[target])
            counts[key] = counts.get(key, 0) + 1
    simply = len(counts) == len(flow) ** 2 and all(c == 1 for c in counts.values())
    orbit = {flow[0]}
    frontier = [flow[0]]
    while frontier:
        pt = frontier.pop()
        for perm in group.generators:
            mapping = group.as_mapping(perm)
            target = tuple(tuple(mapping[x] for x in order) for order in pt)
            if target not in orbit:
                orbit.add(target)
                frontier.append(target)
    minimal = len(orbit) == len(flow)
    return FlowReport(
        flow_size=len(flow),
        group_order=group.order,
        simply_transitive=simply,
        minimal=minimal,
        factor_sizes=tuple(len(b) for b in blocks),
    )
