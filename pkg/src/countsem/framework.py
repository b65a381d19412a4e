"""Immutable argumentation frameworks and their attack matrices.

A framework is a set of named arguments plus a binary attack relation.
Arguments get dense indices in input order; every matrix and vector in the
package is aligned to that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple


class FrameworkError(ValueError):
    """Raised for malformed frameworks: duplicate names, unknown arguments,
    bad isomorphism mappings."""


class Argument(NamedTuple):
    name: str
    index: int


@dataclass(frozen=True)
class AttackMatrix:
    """Sparse 0/1 matrix with entry (i, j) = 1 iff argument j attacks argument i.

    This is the transpose of the attack digraph's adjacency matrix.  Row i
    lists the attackers of argument i, so the row sum is the in-degree under
    attack and the column sum is the out-degree.  Stored as sorted nonzero
    column indices per row.
    """

    dimension: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return 1 if j in self.rows[i] else 0

    def row_sum(self, i: int) -> int:
        return len(self.rows[i])

    def col_sum(self, j: int) -> int:
        return sum(1 for row in self.rows if j in row)

    def max_row_sum(self) -> int:
        """Infinity norm of the matrix: the largest number of attackers."""
        return max((len(row) for row in self.rows), default=0)

    def dense(self) -> list[list[int]]:
        out = [[0] * self.dimension for _ in range(self.dimension)]
        for i, row in enumerate(self.rows):
            for j in row:
                out[i][j] = 1
        return out


@dataclass(frozen=True)
class ArgumentationFramework:
    """Arguments plus an attack relation, immutable after construction.

    ``names`` fixes the index order; ``attacks`` holds (attacker index,
    target index) pairs.  Self-attacks are permitted.  Use
    :func:`build_framework` rather than the raw constructor.
    """

    names: tuple[str, ...]
    attacks: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def arguments(self) -> tuple[Argument, ...]:
        return tuple(Argument(name, i) for i, name in enumerate(self.names))

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise FrameworkError(f"unknown argument: {name!r}") from None

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.names]
        for attacker, target in self.attacks:
            out[attacker].append(target)
        return tuple(tuple(sorted(ts)) for ts in out)

    def attackers_of(self, name: str) -> frozenset[str]:
        """All arguments y with y attacking ``name``."""
        i = self.index_of(name)
        return frozenset(self.names[j] for j in self._matrix.rows[i])

    def attacked_by(self, name: str) -> frozenset[str]:
        """All arguments y that ``name`` attacks."""
        i = self.index_of(name)
        return frozenset(self.names[j] for j in self._out[i])

    def attack_pairs(self) -> list[tuple[str, str]]:
        """Attacks as (attacker, target) name pairs in index order."""
        return [(self.names[a], self.names[t]) for a, t in sorted(self.attacks)]

    @cached_property
    def _matrix(self) -> AttackMatrix:
        rows: list[list[int]] = [[] for _ in self.names]
        for attacker, target in self.attacks:
            rows[target].append(attacker)
        return AttackMatrix(len(self.names), tuple(tuple(sorted(r)) for r in rows))

    def attack_matrix(self) -> AttackMatrix:
        return self._matrix

    def apply_isomorphism(self, mapping: Mapping[str, str]) -> ArgumentationFramework:
        """Rename every argument through a bijective ``mapping``.

        The result keeps the positional order of the source arguments, so
        attack index pairs are unchanged and applying the inverse mapping
        restores the original framework exactly.
        """
        missing = [n for n in self.names if n not in mapping]
        if missing:
            raise FrameworkError(f"mapping not total, missing: {sorted(missing)}")
        images = [mapping[n] for n in self.names]
        if len(set(images)) != len(images):
            raise FrameworkError("mapping is not injective on the argument names")
        return ArgumentationFramework(tuple(images), self.attacks)


def build_framework(
    names: Iterable[str], attacks: Iterable[tuple[str, str]]
) -> ArgumentationFramework:
    """Build a framework from argument names and (attacker, target) name pairs.

    Indices are assigned in the order names are given.  Duplicate attack
    pairs collapse silently; duplicate names and attacks mentioning unknown
    names are errors.
    """
    name_list = list(names)
    index: dict[str, int] = {}
    for name in name_list:
        if not isinstance(name, str) or not name:
            raise FrameworkError(f"argument names must be non-empty strings, got {name!r}")
        if name in index:
            raise FrameworkError(f"duplicate argument name: {name!r}")
        index[name] = len(index)
    pairs = set()
    for attacker, target in attacks:
        if attacker not in index:
            raise FrameworkError(f"attack references unknown argument: {attacker!r}")
        if target not in index:
            raise FrameworkError(f"attack references unknown argument: {target!r}")
        pairs.add((index[attacker], index[target]))
    return ArgumentationFramework(tuple(name_list), frozenset(pairs))
