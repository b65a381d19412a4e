"""Classical extension-based semantics, computed by brute force.

These are baseline oracles, not a competitive solver: every semantics except
grounded enumerates all 2^n subsets, so frameworks are capped at a
configurable size.  Grounded is computed by iterating the defense operator
from the empty set, which needs no enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .framework import ArgumentationFramework

SEMANTICS = ("admissible", "complete", "preferred", "stable", "grounded")

DEFAULT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class ExtensionSet:
    """All extensions of a framework under one semantics.

    ``extensions`` is ordered lexicographically by each member's sorted
    argument names, for reproducible output.
    """

    semantics: str
    extensions: tuple[frozenset[str], ...]

    def __contains__(self, members: Iterable[str]) -> bool:
        return frozenset(members) in self.extensions


def _indices(af: ArgumentationFramework, members: Iterable[str]) -> list[int]:
    return [af.index_of(name) for name in members]


def _masks(af: ArgumentationFramework) -> tuple[list[int], list[int]]:
    """Per-argument bitmasks: attackers of i, and targets attacked by i."""
    n = len(af)
    att = [0] * n
    out = [0] * n
    for a, t in af.attacks:
        att[t] |= 1 << a
        out[a] |= 1 << t
    return att, out


def is_conflict_free(af: ArgumentationFramework, members: Iterable[str]) -> bool:
    """True iff no member of the set attacks another member (or itself)."""
    mask = 0
    for i in _indices(af, members):
        mask |= 1 << i
    att, _ = _masks(af)
    return all(not (att[i] & mask) for i in range(len(af)) if mask >> i & 1)


def defends(af: ArgumentationFramework, members: Iterable[str], name: str) -> bool:
    """True iff every attacker of ``name`` is attacked by some member."""
    target = af.index_of(name)
    att, out = _masks(af)
    counter = 0
    for i in _indices(af, members):
        counter |= out[i]
    return not (att[target] & ~counter)


def characteristic(af: ArgumentationFramework, members: Iterable[str]) -> frozenset[str]:
    """The set of arguments defended by ``members``."""
    att, out = _masks(af)
    counter = 0
    for i in _indices(af, members):
        counter |= out[i]
    return frozenset(
        af.names[i] for i in range(len(af)) if not (att[i] & ~counter)
    )


def grounded_extension(af: ArgumentationFramework) -> frozenset[str]:
    """Least fixpoint of the defense operator, starting from the empty set.

    Monotone, so it stabilises in at most n steps; no enumeration cap applies.
    """
    att, out = _masks(af)
    n = len(af)
    current = 0
    while True:
        counter = 0
        for i in range(n):
            if current >> i & 1:
                counter |= out[i]
        defended = 0
        for i in range(n):
            if not (att[i] & ~counter):
                defended |= 1 << i
        if defended == current:
            return frozenset(af.names[i] for i in range(n) if current >> i & 1)
        current = defended


def _sorted_extensions(af, masks: Iterable[int]) -> tuple[frozenset[str], ...]:
    sets = [
        frozenset(af.names[i] for i in range(len(af)) if m >> i & 1) for m in masks
    ]
    return tuple(sorted(sets, key=lambda s: tuple(sorted(s))))


def enumerate_extensions(
    af: ArgumentationFramework, semantics: str, cap: int = DEFAULT_ENUMERATION_CAP
) -> ExtensionSet:
    """All extensions under ``semantics``.

    Subset-enumerating semantics refuse frameworks larger than ``cap``
    arguments; grounded has no cap.
    """
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics: {semantics!r}")
    if semantics == "grounded":
        return ExtensionSet("grounded", _sorted_extensions(af, [_as_mask(af, grounded_extension(af))]))
    n = len(af)
    if n > cap:
        raise ValueError(
            f"framework has {n} arguments, above the enumeration cap of {cap}"
        )
    att, out = _masks(af)
    full = (1 << n) - 1

    def conflict_free(s: int) -> bool:
        for i in range(n):
            if s >> i & 1 and att[i] & s:
                return False
        return True

    def counter_mask(s: int) -> int:
        c = 0
        for i in range(n):
            if s >> i & 1:
                c |= out[i]
        return c

    def defended_mask(s: int) -> int:
        c = counter_mask(s)
        d = 0
        for i in range(n):
            if not (att[i] & ~c):
                d |= 1 << i
        return d

    found: list[int] = []
    for s in range(1 << n):
        if not conflict_free(s):
            continue
        if semantics == "stable":
            if counter_mask(s) | s == full:
                found.append(s)
        elif semantics == "complete":
            if defended_mask(s) == s:
                found.append(s)
        else:  # admissible or preferred
            if not (s & ~defended_mask(s)):
                found.append(s)

    if semantics == "preferred":
        found = [s for s in found if not any(t != s and t & s == s for t in found)]
    return ExtensionSet(semantics, _sorted_extensions(af, found))


def _as_mask(af: ArgumentationFramework, members: frozenset[str]) -> int:
    mask = 0
    for name in members:
        mask |= 1 << af.index_of(name)
    return mask
