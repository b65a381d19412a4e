"""Rankings over arguments and verification of their structural guarantees.

Strengths are quantized to a fixed number of decimals before comparison:
raw tolerance-band equality is not transitive, while quantized comparison
yields a genuine total preorder.  Nine decimals sits far below meaningful
strength gaps at the default tolerance yet above accumulated float noise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import counting
from .framework import ArgumentationFramework, FrameworkError, build_framework
from .generate import cycle_framework

QUANT_DECIMALS = 9

GREATER = ">"
EQUIVALENT = "="
LESS = "<"


@dataclass(frozen=True)
class Ranking:
    """Total preorder over arguments by non-increasing strength."""

    names: tuple[str, ...]
    strengths: tuple[float, ...]
    quantized: tuple[float, ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def _q(self, name: str) -> float:
        try:
            return self.quantized[self._index[name]]
        except KeyError:
            raise FrameworkError(f"unknown argument: {name!r}") from None

    def compare(self, x: str, y: str) -> str:
        """One of ``'>'``, ``'='``, ``'<'`` for x versus y."""
        qx, qy = self._q(x), self._q(y)
        if qx > qy:
            return GREATER
        if qx < qy:
            return LESS
        return EQUIVALENT

    def at_least(self, x: str, y: str) -> bool:
        return self.compare(x, y) != LESS

    def strictly_above(self, x: str, y: str) -> bool:
        return self.compare(x, y) == GREATER

    def equivalence_classes(self) -> tuple[tuple[str, ...], ...]:
        """Classes of equally ranked arguments, strongest first, names sorted."""
        by_value: dict[float, list[str]] = {}
        for name, q in zip(self.names, self.quantized):
            by_value.setdefault(q, []).append(name)
        return tuple(
            tuple(sorted(by_value[q])) for q in sorted(by_value, reverse=True)
        )


def rank(names: Sequence[str], strengths: Sequence[float]) -> Ranking:
    """Derive the ranking: x is at least as acceptable as y iff v(x) >= v(y)."""
    if len(names) != len(strengths):
        raise ValueError("names and strengths must have equal length")
    return Ranking(
        tuple(names),
        tuple(strengths),
        tuple(round(v, QUANT_DECIMALS) for v in strengths),
    )


def _max_matching(adjacency: list[list[int]], right_size: int) -> list[int]:
    """Kuhn's augmenting-path matching; returns right-to-left assignment."""
    matched_right = [-1] * right_size

    def augment(left: int, seen: list[bool]) -> bool:
        for right in adjacency[left]:
            if not seen[right]:
                seen[right] = True
                if matched_right[right] < 0 or augment(matched_right[right], seen):
                    matched_right[right] = left
                    return True
        return False

    for left in range(len(adjacency)):
        augment(left, [False] * right_size)
    return matched_right


def _compat(ranking: Ranking, s1: list[str], s2: list[str]) -> list[list[int]]:
    return [
        [j for j, y in enumerate(s2) if ranking.at_least(y, x)] for x in s1
    ]


def set_leq(ranking: Ranking, s1: Iterable[str], s2: Iterable[str]) -> bool:
    """True iff an injective map sends each member of s1 to an s2 member
    ranked at least as high.  Decided by maximum bipartite matching."""
    left = sorted(set(s1))
    right = sorted(set(s2))
    if len(left) > len(right):
        return False
    matched = _max_matching(_compat(ranking, left, right), len(right))
    return sum(1 for m in matched if m >= 0) == len(left)


def set_lt(ranking: Ranking, s1: Iterable[str], s2: Iterable[str]) -> bool:
    """Strong set comparison: s1 maps injectively into s2 rank-non-decreasingly,
    and either s2 is strictly larger or some image is strictly higher ranked.

    Both clauses must hold for a single map, so when sizes are equal each
    candidate strict pair is forced into the matching before re-solving.
    """
    left = sorted(set(s1))
    right = sorted(set(s2))
    if not set_leq(ranking, left, right):
        return False
    if len(left) < len(right):
        return True
    for i, x in enumerate(left):
        for j, y in enumerate(right):
            if not ranking.strictly_above(y, x):
                continue
            rest_left = left[:i] + left[i + 1 :]
            rest_right = right[:j] + right[j + 1 :]
            if set_leq(ranking, rest_left, rest_right):
                return True
    return False


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one structural check; a failure carries concrete witnesses."""

    name: str
    passed: bool
    witnesses: tuple[tuple[str, str, str], ...] = ()


@dataclass(frozen=True)
class PropertyReport:
    """Results of the per-pair ranking guarantees on one framework.

    ``near_ties`` lists argument pairs whose raw strengths differ by less
    than ten times the iteration tolerance without being equal: on such
    pairs a strict comparison reflects approximation error, not structure.
    """

    results: tuple[PropertyResult, ...]
    near_ties: tuple[tuple[str, str], ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {
            "properties": [
                {
                    "name": r.name,
                    "status": "pass" if r.passed else "fail",
                    "witnesses": [list(w) for w in r.witnesses],
                }
                for r in self.results
            ],
            "near_ties": [list(p) for p in self.near_ties],
        }


UNATTACKED_MAXIMAL = "unattacked_maximal"
EQUAL_ATTACKERS_EQUIVALENT = "equal_attackers_equivalent"
ATTACKER_SUBSET_STRICT = "attacker_subset_strict"
ATTACKER_DOMINANCE_WEAK = "attacker_dominance_weak"
ATTACKER_DOMINANCE_STRICT = "attacker_dominance_strict"
CYCLE_EQUAL_STRENGTHS = "cycle_equal_strengths"
ISOMORPHISM_INVARIANCE = "isomorphism_invariance"


def check_properties(
    af: ArgumentationFramework,
    strengths: Sequence[float],
    epsilon: float | None = None,
) -> PropertyReport:
    """Verify the guaranteed pairwise ranking properties on one framework.

    For every ordered argument pair: an unattacked argument outranks any
    attacked one; equal attacker sets force a tie; a proper subset of the
    other's attackers forces a strict win; and attacker sets related by the
    (weak or strong) injective set comparison force the matching weak or
    strict order.  All hold for any damping factor, so a failure witnesses
    an implementation bug rather than an unlucky input.
    """
    names = af.names
    ranking = rank(names, strengths)
    attackers = {name: af.attackers_of(name) for name in names}

    failures: dict[str, list[tuple[str, str, str]]] = {
        UNATTACKED_MAXIMAL: [],
        EQUAL_ATTACKERS_EQUIVALENT: [],
        ATTACKER_SUBSET_STRICT: [],
        ATTACKER_DOMINANCE_WEAK: [],
        ATTACKER_DOMINANCE_STRICT: [],
    }
    for x in names:
        for y in names:
            if x == y:
                continue
            ax, ay = attackers[x], attackers[y]
            if not ax and ay and not ranking.strictly_above(x, y):
                failures[UNATTACKED_MAXIMAL].append(
                    (x, y, f"expected {x} {GREATER} {y}")
                )
            if ax == ay and ranking.compare(x, y) != EQUIVALENT:
                failures[EQUAL_ATTACKERS_EQUIVALENT].append(
                    (x, y, f"expected {x} {EQUIVALENT} {y}")
                )
            if ax < ay and not ranking.strictly_above(x, y):
                failures[ATTACKER_SUBSET_STRICT].append(
                    (x, y, f"expected {x} {GREATER} {y}")
                )
            if set_leq(ranking, ax, ay) and not ranking.at_least(x, y):
                failures[ATTACKER_DOMINANCE_WEAK].append(
                    (x, y, f"expected {x} {GREATER}= {y}")
                )
            if set_lt(ranking, ax, ay) and not ranking.strictly_above(x, y):
                failures[ATTACKER_DOMINANCE_STRICT].append(
                    (x, y, f"expected {x} {GREATER} {y}")
                )

    near: list[tuple[str, str]] = []
    if epsilon is not None:
        for i, x in enumerate(names):
            for j in range(i + 1, len(names)):
                gap = abs(strengths[i] - strengths[j])
                if 0.0 < gap < 10.0 * epsilon:
                    near.append((x, names[j]))

    results = tuple(
        PropertyResult(name, not wit, tuple(wit)) for name, wit in failures.items()
    )
    return PropertyReport(results, tuple(near))


def check_cycle_uniformity(
    size: int, params: counting.CountingParams | None = None
) -> PropertyResult:
    """All arguments of an elementary cycle must end up equally ranked."""
    af = cycle_framework(size)
    strengths = counting.counting_semantics(af, params)
    ranking = rank(af.names, strengths)
    witnesses = tuple(
        (af.names[0], name, f"strengths {strengths[0]!r} vs {strengths[i]!r}")
        for i, name in enumerate(af.names)
        if ranking.compare(af.names[0], name) != EQUIVALENT
    )
    return PropertyResult(CYCLE_EQUAL_STRENGTHS, not witnesses, witnesses)


def check_isomorphism_invariance(
    af: ArgumentationFramework,
    rng: random.Random,
    params: counting.CountingParams | None = None,
    tolerance: float = 1e-12,
) -> PropertyResult:
    """Relabel and reorder arguments at random; strengths must carry over.

    The renamed framework is rebuilt in a shuffled input order, so this also
    exercises independence from index order, where float accumulation can
    differ by rounding; hence the small tolerance.
    """
    permuted = list(af.names)
    rng.shuffle(permuted)
    mapping = dict(zip(af.names, permuted))
    renamed = af.apply_isomorphism(mapping)
    shuffled_names = list(renamed.names)
    rng.shuffle(shuffled_names)
    image = build_framework(shuffled_names, renamed.attack_pairs())

    original = counting.counting_semantics(af, params)
    mapped = counting.counting_semantics(image, params)
    witnesses = []
    for i, name in enumerate(af.names):
        target = mapping[name]
        got = mapped[image.index_of(target)]
        if abs(got - original[i]) > tolerance:
            witnesses.append(
                (name, target, f"strength {original[i]!r} became {got!r}")
            )
    return PropertyResult(ISOMORPHISM_INVARIANCE, not witnesses, tuple(witnesses))
