"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's candidate-level shortcut
and tensor plumbing: the integral oracle sweeps a dense grid of levels, and
the certificate oracle recomputes best responses and residuals from raw
density algebra over label tuples.  Tests compare library results against
these slower routes.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iterproduct

import pytest

from fuzzygames import (
    Capacity,
    FiniteSpace,
    FuzzyFunction,
    Game,
    PossibilityCapacity,
)


def rand_unit(rng: random.Random, denom: int = 16) -> Fraction:
    return Fraction(rng.randint(0, denom), denom)


def random_space(rng: random.Random, min_size=2, max_size=4) -> FiniteSpace:
    size = rng.randint(min_size, max_size)
    return FiniteSpace(tuple(f"s{k}" for k in range(size)))


def random_possibility(space: FiniteSpace, rng: random.Random, denom: int = 8):
    density = [rand_unit(rng, denom) for _ in range(space.size)]
    density[rng.randrange(space.size)] = Fraction(1)
    return PossibilityCapacity(space, density)


def random_capacity(space: FiniteSpace, rng: random.Random, denom: int = 16):
    """Random monotone table: each value sits between its lower covers and 1."""
    n = space.size
    values = [None] * (1 << n)
    values[0] = Fraction(0)
    for mask in sorted(range(1, 1 << n), key=lambda m: m.bit_count()):
        floor = Fraction(0)
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            below = values[mask ^ bit]
            if below > floor:
                floor = below
        values[mask] = floor + Fraction(rng.randint(0, denom), denom) * (1 - floor)
    values[-1] = Fraction(1)
    return Capacity(space, values)


def random_supported_capacity(space, support_mask: int, rng, denom: int = 16):
    """Random capacity that vanishes on every subset of the support's complement."""
    base = random_capacity(space, rng, denom)
    complement = space.full_mask & ~support_mask
    values = [
        Fraction(0) if mask & ~complement == 0 else v
        for mask, v in enumerate(base.values)
    ]
    return Capacity(space, values)


def random_function(space: FiniteSpace, rng: random.Random, denom: int = 16):
    return FuzzyFunction(space, [rand_unit(rng, denom) for _ in range(space.size)])


def random_game(
    rng: random.Random, players=None, sizes=None, denom: int = 4
) -> Game:
    if players is None:
        players = rng.choice((2, 2, 2, 3))
    if sizes is None:
        sizes = [rng.choice((2, 3)) for _ in range(players)]
    spaces = [
        FiniteSpace(tuple("abcde"[k] for k in range(size))) for size in sizes
    ]
    total = 1
    for s in spaces:
        total *= s.size
    payoffs = [
        [Fraction(rng.randint(0, denom), denom) for _ in range(total)]
        for _ in range(players)
    ]
    return Game(spaces, payoffs)


def grid_integral(f: FuzzyFunction, mu, star, resolution: int = 1000):
    """Dense-grid evaluation of the defining supremum, no candidate shortcut."""
    best = Fraction(0)
    values = f.values
    n = len(values)
    for k in range(resolution + 1):
        t = Fraction(k, resolution)
        mask = 0
        for idx in range(n):
            if values[idx] >= t:
                mask |= 1 << idx
        v = star(mu.value(mask), t)
        if v > best:
            best = v
    return best


def fold_density(densities, ast):
    acc = densities[0]
    for d in densities[1:]:
        acc = ast(acc, d)
    return acc


def brute_force_certificate(game: Game, profile_caps, star, ast):
    """Recompute an induced-belief equilibrium check from raw density algebra.

    profile_caps: one PossibilityCapacity per player.  Returns (verdict,
    best_response_sets, residuals) built with nothing but loops over label
    tuples, the density closed form of the integral, and max/fold arithmetic.
    """
    n = game.players
    spaces = game.spaces
    densities = [dict(zip(c.space.labels, c.density)) for c in profile_caps]

    responses = []
    for i in range(n):
        opp_labels = [spaces[j].labels for j in range(n) if j != i]
        weights = {}
        for combo in iterproduct(*opp_labels):
            weights[combo] = fold_density(
                [densities[j][lab] for j, lab in zip(
                    [j for j in range(n) if j != i], combo
                )],
                ast,
            )
        scores = {}
        for xi in spaces[i].labels:
            best = Fraction(0)
            for combo, w in weights.items():
                full = list(combo)
                full.insert(i, xi)
                v = star(w, game.payoff_at(i, full))
                if v > best:
                    best = v
            scores[xi] = best
        top = max(scores.values())
        responses.append(tuple(x for x in spaces[i].labels if scores[x] == top))

    residuals = []
    for i in range(n):
        opp_players = [j for j in range(n) if j != i]
        opp_labels = [spaces[j].labels for j in opp_players]
        inside = set(iterproduct(*[responses[j] for j in opp_players]))
        worst = Fraction(0)
        for combo in iterproduct(*opp_labels):
            if combo in inside:
                continue
            w = fold_density(
                [densities[j][lab] for j, lab in zip(opp_players, combo)], ast
            )
            if w > worst:
                worst = w
        residuals.append(worst)
    verdict = all(r == 0 for r in residuals)
    return verdict, tuple(responses), tuple(residuals)


@pytest.fixture
def rng():
    return random.Random(987123)
