"""Exact walk counting, cycle analysis, and dispute trees.

Walk counts are powers of the attack matrix over Python integers, so they
stay exact at any magnitude (a length-100 count in a small cyclic graph
already exceeds 64-bit range).  Dispute trees expand a root argument's
attackers level by level: a node at even depth defends the root, a node at
odd depth attacks it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .framework import ArgumentationFramework, FrameworkError

DEFENDER = "defender"
ATTACKER = "attacker"
NEITHER = "neither"

DEFAULT_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class WalkCountMatrix:
    """Entry (i, j) counts length-``length`` walks from argument j to argument i."""

    length: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.entries)


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _sparse_mult(rows: tuple[tuple[int, ...], ...], m: list[list[int]]) -> list[list[int]]:
    """Attack matrix (sparse rows) times a dense integer matrix."""
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for i, row in enumerate(rows):
        acc = out[i]
        for k in row:
            mk = m[k]
            for j in range(n):
                acc[j] += mk[j]
    return out


def _dense_mult(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        acc = out[i]
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(n):
                    acc[j] += x * bk[j]
    return out


def walk_count_matrix(af: ArgumentationFramework, length: int) -> WalkCountMatrix:
    """Exact integer power of the attack matrix, by repeated squaring."""
    if length < 0:
        raise ValueError("walk length must be non-negative")
    n = len(af)
    rows = af.attack_matrix().rows
    base = [[0] * n for _ in range(n)]
    for i, row in enumerate(rows):
        for j in row:
            base[i][j] = 1
    result = _identity(n)
    e = length
    while e:
        if e & 1:
            result = _dense_mult(result, base)
        e >>= 1
        if e:
            base = _dense_mult(base, base)
    return WalkCountMatrix(length, tuple(tuple(r) for r in result))


def walk_count_sequence(af: ArgumentationFramework, up_to: int) -> list[WalkCountMatrix]:
    """All powers 0..``up_to`` of the attack matrix, by repeated sparse multiply."""
    if up_to < 0:
        raise ValueError("walk length must be non-negative")
    rows = af.attack_matrix().rows
    current = _identity(len(af))
    out = [WalkCountMatrix(0, tuple(tuple(r) for r in current))]
    for length in range(1, up_to + 1):
        current = _sparse_mult(rows, current)
        out.append(WalkCountMatrix(length, tuple(tuple(r) for r in current)))
    return out


def count_walks(af: ArgumentationFramework, source: str, target: str, length: int) -> int:
    """Number of distinct attack walks of exactly ``length`` steps from source to target."""
    i = af.index_of(target)
    j = af.index_of(source)
    return walk_count_matrix(af, length).entry(i, j)


def classify(af: ArgumentationFramework, source: str, target: str, length: int) -> str:
    """Role of ``source`` toward ``target`` at walk length ``length``.

    An odd-length walk makes it an attacker, an even-length walk a defender;
    with no walk of that length it is neither.
    """
    if count_walks(af, source, target, length) == 0:
        return NEITHER
    return ATTACKER if length % 2 else DEFENDER


def has_cycle(af: ArgumentationFramework) -> bool:
    """True iff the attack digraph contains a directed cycle (self-loops count)."""
    out = af._out
    n = len(af)
    state = [0] * n  # 0 unvisited, 1 on stack, 2 done
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, iter(out[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == 1:
                    return True
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(out[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
    return False


def nilpotency_index(af: ArgumentationFramework) -> int | None:
    """Smallest power at which the attack matrix vanishes, or None if cyclic.

    For an acyclic graph this is one more than the longest walk length; for a
    cyclic graph no power ever vanishes.
    """
    if has_cycle(af):
        return None
    out = af._out
    n = len(af)
    indeg = [0] * n
    for i in range(n):
        for j in out[i]:
            indeg[j] += 1
    order = [i for i in range(n) if indeg[i] == 0]
    for node in order:  # grows during iteration: Kahn's algorithm
        for j in out[node]:
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    longest = [0] * n  # longest walk starting at each node
    for node in reversed(order):
        longest[node] = max((longest[j] + 1 for j in out[node]), default=0)
    return max(longest, default=0) + 1


class DisputeNode:
    """One move in the dispute tree: an argument at a given depth from the root."""

    __slots__ = ("argument", "depth", "children")

    def __init__(self, argument: str, depth: int):
        self.argument = argument
        self.depth = depth
        self.children: list[DisputeNode] = []

    @property
    def status(self) -> str:
        return DEFENDER if self.depth % 2 == 0 else ATTACKER


@dataclass(frozen=True)
class DisputeTree:
    """Dispute tree under a root argument, expanded to a fixed depth.

    Children of a node are the attackers of its argument, so the tree is
    infinite whenever the root can reach a cycle; expansion always truncates
    at ``depth_limit``.
    """

    root: DisputeNode
    depth_limit: int

    def level_counts(self) -> list[int]:
        """Number of nodes at each depth 0..depth_limit (trailing zeros kept)."""
        counts = [0] * (self.depth_limit + 1)
        level = [self.root]
        depth = 0
        while level:
            counts[depth] = len(level)
            level = [c for node in level for c in node.children]
            depth += 1
        return counts

    def nodes(self):
        level = [self.root]
        while level:
            yield from level
            level = [c for node in level for c in node.children]


def dispute_tree(
    af: ArgumentationFramework,
    root: str,
    depth_limit: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> DisputeTree:
    """Expand the dispute tree under ``root`` to ``depth_limit``.

    Cyclic graphs produce exponentially growing levels, so expansion aborts
    once more than ``node_budget`` nodes would be materialised.
    """
    if depth_limit < 0:
        raise ValueError("depth limit must be non-negative")
    root_idx = af.index_of(root)
    rows = af.attack_matrix().rows
    names = af.names
    top = DisputeNode(names[root_idx], 0)
    level = [(top, root_idx)]
    total = 1
    for depth in range(1, depth_limit + 1):
        nxt: list[tuple[DisputeNode, int]] = []
        for node, idx in level:
            for attacker in rows[idx]:
                child = DisputeNode(names[attacker], depth)
                node.children.append(child)
                nxt.append((child, attacker))
        total += len(nxt)
        if total > node_budget:
            raise ValueError(
                f"dispute tree exceeds the node budget of {node_budget} at depth {depth}"
            )
        level = nxt
    return DisputeTree(top, depth_limit)
