"""Chip-firing groups and divisor arithmetic.

The chip-firing (critical) group of a connected graph is the cokernel of the
reduced Laplacian; its invariant factors come straight out of Smith normal
form.  Divisor-class questions (is this divisor principal, what is the order
of its class, what group do some classes generate) are answered through the
SNF witness matrices, so after one SNF per graph each query is cheap.

Divisors are plain integer vectors indexed by vertex; the degree-zero
constraint is a checked precondition rather than a separate type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InputError, NotConnectedError
from .graphs import Graph, is_connected
from .intlinalg import (
    IntMatrix,
    IntPoly,
    SnfResult,
    char_poly,
    determinant,
    poly_divide_by_x,
    smith_normal_form,
)

__all__ = [
    "CriticalGroup",
    "laplacian",
    "reduced_laplacian",
    "critical_group",
    "spanning_tree_count",
    "char_poly_restricted",
    "fire_vertex",
    "divisor_degree",
    "is_principal",
    "class_order",
    "quotient_by_classes",
    "subgroup_invariants",
    "groups_isomorphic",
    "direct_sum",
]


@dataclass(frozen=True)
class CriticalGroup:
    """Finite abelian group in canonical invariant-factor form.

    Factors are each at least 2 and each divides the next; the trivial group
    is the empty tuple, so isomorphism is plain equality of factor lists.
    """

    invariant_factors: tuple

    def __init__(self, invariant_factors: Iterable[int] = ()):
        factors = tuple(invariant_factors)
        for d in factors:
            if not isinstance(d, int) or d < 2:
                raise InputError(f"invariant factor {d!r} must be an integer >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise InputError(f"invariant factors must form a divisibility chain: {a} does not divide {b}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @classmethod
    def trivial(cls) -> "CriticalGroup":
        return cls(())

    @classmethod
    def from_diagonal(cls, diagonal: Iterable[int]) -> "CriticalGroup":
        """Canonical group from an SNF diagonal; unit entries are dropped."""
        factors = []
        for d in diagonal:
            if d == 0:
                raise InputError("zero diagonal entry: the quotient group is infinite")
            if abs(d) > 1:
                factors.append(abs(d))
        return cls(factors)

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "CriticalGroup":
        """Canonicalize a direct sum of cyclic groups of the given orders."""
        orders = [o for o in orders]
        for o in orders:
            if not isinstance(o, int) or o < 1:
                raise InputError(f"cyclic order {o!r} must be a positive integer")
        if not orders:
            return cls(())
        diag = IntMatrix(
            len(orders),
            len(orders),
            [orders[i] if i == j else 0 for i in range(len(orders)) for j in range(len(orders))],
        )
        return cls.from_diagonal(smith_normal_form(diag).diagonal)

    def __str__(self):
        if self.is_trivial:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def laplacian(g: Graph) -> IntMatrix:
    """Degree matrix minus adjacency matrix."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        rows[v][v] = g.degree(v)
    for u, v in g.edges:
        rows[u][v] = -1
        rows[v][u] = -1
    return IntMatrix.from_rows(rows)


def _require_connected(g: Graph):
    if not is_connected(g):
        raise NotConnectedError(f"graph with {g.vertex_count} vertices is not connected")


def reduced_laplacian(g: Graph, remove: int) -> IntMatrix:
    """Laplacian with one row and column deleted (the matrix-tree device)."""
    g._check_vertex(remove)
    _require_connected(g)
    lap = laplacian(g)
    keep = [v for v in range(g.vertex_count) if v != remove]
    return IntMatrix.from_rows([[lap.entry(i, j) for j in keep] for i in keep])


@lru_cache(maxsize=256)
def _reduced_snf(g: Graph, remove: int) -> SnfResult:
    return smith_normal_form(reduced_laplacian(g, remove))


@lru_cache(maxsize=256)
def _full_laplacian_snf(g: Graph) -> SnfResult:
    return smith_normal_form(laplacian(g))


def critical_group(g: Graph, remove: int = 0) -> CriticalGroup:
    """Pic0(g) as the cokernel of the reduced Laplacian.

    The result does not depend on which vertex is removed; the parameter
    exists for cross-checking.
    """
    return CriticalGroup.from_diagonal(_reduced_snf(g, remove).diagonal)


def spanning_tree_count(g: Graph, remove: int = 0) -> int:
    """Number of spanning trees, equal to the critical group order."""
    return abs(determinant(reduced_laplacian(g, remove)))


def char_poly_restricted(g: Graph) -> IntPoly:
    """Characteristic polynomial of the Laplacian restricted to degree zero.

    Equals det(xI - L) / x, which is exact because the Laplacian of a
    connected graph has one-dimensional kernel; a single vertex yields the
    constant polynomial 1.
    """
    _require_connected(g)
    return poly_divide_by_x(char_poly(laplacian(g)))


def divisor_degree(d: Sequence[int]) -> int:
    return sum(d)


def _check_divisor(g: Graph, d: Sequence[int]) -> tuple:
    coeffs = tuple(d)
    if len(coeffs) != g.vertex_count:
        raise InputError(
            f"divisor has {len(coeffs)} coefficients for a graph on {g.vertex_count} vertices"
        )
    for c in coeffs:
        if not isinstance(c, int):
            raise InputError(f"divisor coefficient {c!r} is not an integer")
    return coeffs


def _check_degree_zero(g: Graph, d: Sequence[int]) -> tuple:
    coeffs = _check_divisor(g, d)
    if sum(coeffs) != 0:
        raise InputError(f"divisor has degree {sum(coeffs)}, expected 0")
    return coeffs


def fire_vertex(g: Graph, d: Sequence[int], v: int, direction: str) -> tuple:
    """One chip-firing move at v.

    ``lend`` sends a chip along each incident edge (subtracts the Laplacian
    column of v), ``borrow`` is the inverse.  The divisor degree is preserved.
    """
    coeffs = list(_check_divisor(g, d))
    g._check_vertex(v)
    if direction not in ("lend", "borrow"):
        raise InputError(f"direction must be 'lend' or 'borrow', got {direction!r}")
    sign = -1 if direction == "lend" else 1
    coeffs[v] += sign * g.degree(v)
    for w in g.neighbors(v):
        coeffs[w] -= sign
    return tuple(coeffs)


def _snf_coordinates(g: Graph, d: Sequence[int]) -> list:
    """Pairs (s_i, c_i) with c = U d for the full-Laplacian SNF U L V = S."""
    _require_connected(g)
    snf = _full_laplacian_snf(g)
    c = snf.u.mul_vector(d)
    return list(zip(snf.diagonal, c))


def is_principal(g: Graph, d: Sequence[int]) -> bool:
    """Whether d lies in the image of the Laplacian, i.e. is reachable from
    the zero divisor by chip-firing moves."""
    coeffs = _check_degree_zero(g, d)
    for s_i, c_i in _snf_coordinates(g, coeffs):
        if s_i == 0:
            if c_i != 0:
                return False
        elif c_i % s_i != 0:
            return False
    return True


def class_order(g: Graph, d: Sequence[int]) -> int:
    """Order of the class of d in Pic0(g): the least m with m*d principal."""
    coeffs = _check_degree_zero(g, d)
    order = 1
    for s_i, c_i in _snf_coordinates(g, coeffs):
        if s_i == 0:
            # the zero row of S corresponds to the all-ones left kernel, and
            # c_i is +-degree(d) = 0 after the precondition check
            if c_i != 0:
                raise InputError("divisor class has infinite order")
            continue
        order = math.lcm(order, s_i // math.gcd(s_i, c_i))
    return order


def _reduced_coordinates(d: Sequence[int], remove: int) -> list:
    return [c for v, c in enumerate(d) if v != remove]


def _checked_generators(g: Graph, generators: Iterable[Sequence[int]]) -> list:
    return [_check_degree_zero(g, d) for d in generators]


def quotient_by_classes(g: Graph, generators: Iterable[Sequence[int]]) -> CriticalGroup:
    """Pic0(g) modulo the subgroup generated by the given divisor classes.

    Presented as the cokernel of the reduced Laplacian augmented with the
    generators' reduced coordinate columns.
    """
    gens = _checked_generators(g, generators)
    _require_connected(g)
    remove = 0
    reduced = reduced_laplacian(g, remove)
    columns = [_reduced_coordinates(d, remove) for d in gens]
    rows = [
        list(reduced.row(i)) + [col[i] for col in columns] for i in range(reduced.rows)
    ]
    if not rows:  # single-vertex graph: Pic0 is trivial
        return CriticalGroup.trivial()
    snf = smith_normal_form(IntMatrix.from_rows(rows))
    return CriticalGroup.from_diagonal(snf.diagonal)


def subgroup_invariants(g: Graph, generators: Iterable[Sequence[int]]) -> CriticalGroup:
    """Structure of the subgroup of Pic0(g) generated by the given classes.

    The subgroup is Z^r modulo the relation lattice of the generators; the
    lattice is the projection onto the first r coordinates of the kernel of
    [G | Lred], read off the SNF column witness.
    """
    gens = _checked_generators(g, generators)
    _require_connected(g)
    r = len(gens)
    if r == 0:
        return CriticalGroup.trivial()
    remove = 0
    reduced = reduced_laplacian(g, remove)
    columns = [_reduced_coordinates(d, remove) for d in gens]
    k = reduced.rows
    if k == 0:  # single-vertex graph: every class is trivial
        return CriticalGroup.trivial()
    rows = [
        [col[i] for col in columns] + list(reduced.row(i)) for i in range(k)
    ]
    snf = smith_normal_form(IntMatrix.from_rows(rows))
    rank = sum(1 for d in snf.diagonal if d != 0)
    total_cols = r + k
    # kernel basis of [G | Lred]: columns of V past the rank
    relation_rows = [
        [snf.v.entry(i, j) for j in range(rank, total_cols)] for i in range(r)
    ]
    relations = smith_normal_form(IntMatrix.from_rows(relation_rows))
    if any(d == 0 for d in relations.diagonal) or len(relations.diagonal) < r:
        raise AssertionError("relation lattice of finite classes must have full rank")
    return CriticalGroup.from_diagonal(relations.diagonal)


def groups_isomorphic(a: CriticalGroup, b: CriticalGroup) -> bool:
    return a.invariant_factors == b.invariant_factors


def direct_sum(a: CriticalGroup, b: CriticalGroup) -> CriticalGroup:
    return CriticalGroup.from_cyclic_orders(a.invariant_factors + b.invariant_factors)
