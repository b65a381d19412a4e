"""Deterministic framework generators for property batches and tests."""

from __future__ import annotations

import random

from .framework import ArgumentationFramework, build_framework


def random_framework(
    rng: random.Random, size: int, density: float
) -> ArgumentationFramework:
    """Framework with ``size`` arguments; each ordered pair (self-attacks
    included) becomes an attack with probability ``density``."""
    names = [f"a{i}" for i in range(size)]
    attacks = [
        (x, y) for x in names for y in names if rng.random() < density
    ]
    return build_framework(names, attacks)


def cycle_framework(size: int) -> ArgumentationFramework:
    """Elementary attack cycle a0 -> a1 -> ... -> a0; size 1 is a self-attacker."""
    if size < 1:
        raise ValueError("cycle needs at least one argument")
    names = [f"a{i}" for i in range(size)]
    attacks = [(names[i], names[(i + 1) % size]) for i in range(size)]
    return build_framework(names, attacks)
