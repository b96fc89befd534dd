"""Finite games with capacity beliefs.

Players are indexed from 0.  Payoffs live in [0,1] and are stored as full
tables over the strategy product, row-major with the last player varying
fastest.  Everything opponent-shaped (belief spaces, payoff slices, induced
beliefs) lists the opponents in ascending player order with the player
removed.

A belief profile assigns each player a capacity on the opponents' product
space.  The player's expected payoff for a strategy is the t-normed integral
of the payoff slice against that belief.  A belief profile is an equilibrium
when, for every player, the belief puts mass 0 outside the product of all
opponents' best-response sets.

A strategy profile assigns each player a capacity on that player's own
strategy space.  Possibility profiles support the mixed layer: the joint
belief is the n-fold density tensor, expected payoffs integrate the full
payoff table against it, and the capacity equilibrium check compares each
player's payoff with the bound from replacing that player's capacity by the
greatest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iterproduct

from .spaces import FiniteSpace, ProductSpace
from .tnorms import TNorm
from .capacities import (
    Capacity,
    NecessityCapacity,
    PossibilityCapacity,
    greatest_capacity,
)
from .integrals import FuzzyFunction, tnormed_integral
from .tensors import tensor_n

DEFAULT_SEARCH_BUDGET = 10_000_000
DEFAULT_GRID_STEPS = 4


class SearchBudgetExceeded(RuntimeError):
    """The candidate profile count of a search exceeds the budget."""

    def __init__(self, candidates, budget):
        super().__init__(
            f"search would enumerate {candidates} candidate profiles, "
            f"over the budget of {budget}; raise the budget or coarsen the mode"
        )
        self.candidates = candidates
        self.budget = budget


class Game:
    """An n-player game with [0,1] payoffs, n >= 2.

    strategy_spaces: one FiniteSpace per player.
    payoffs: per player, either a mapping from label tuples to values or a
    flat sequence over the strategy product in row-major order.
    """

    __slots__ = ("spaces", "payoffs", "product", "_opponents", "_slices")

    def __init__(self, strategy_spaces, payoffs, tol=0):
        spaces = tuple(strategy_spaces)
        if len(spaces) < 2:
            raise ValueError("a game needs at least two players")
        for s in spaces:
            if not isinstance(s, FiniteSpace):
                raise ValueError("strategy spaces must be FiniteSpace instances")
        prod = ProductSpace(spaces)
        payoffs = list(payoffs)
        if len(payoffs) != len(spaces):
            raise ValueError(
                f"need one payoff table per player, got {len(payoffs)}"
            )
        tables = []
        for i, table in enumerate(payoffs):
            if hasattr(table, "keys"):
                flat = [None] * prod.size
                for key, v in table.items():
                    if isinstance(key, str) or len(key) != len(spaces):
                        raise ValueError(
                            f"payoff key {key!r} of player {i} must be a tuple "
                            f"of {len(spaces)} labels"
                        )
                    coords = tuple(
                        s.index(label) for s, label in zip(spaces, key)
                    )
                    idx = prod.index_of(coords)
                    if flat[idx] is not None:
                        raise ValueError(
                            f"payoff of player {i} at {key!r} given twice"
                        )
                    flat[idx] = v
                missing = [k for k, v in enumerate(flat) if v is None]
                if missing:
                    raise ValueError(
                        f"payoff table of player {i} misses "
                        f"{prod.space.labels[missing[0]]!r}"
                    )
                table = flat
            else:
                table = list(table)
                if len(table) != prod.size:
                    raise ValueError(
                        f"payoff table of player {i} needs {prod.size} entries, "
                        f"got {len(table)}"
                    )
            for idx, v in enumerate(table):
                if not -tol <= v <= 1 + tol:
                    raise ValueError(
                        f"payoff of player {i} at "
                        f"{prod.space.labels[idx]!r} is {v!r}, outside [0,1]"
                    )
            tables.append(tuple(table))
        object.__setattr__(self, "spaces", spaces)
        object.__setattr__(self, "payoffs", tuple(tables))
        object.__setattr__(self, "product", prod)
        object.__setattr__(
            self,
            "_opponents",
            tuple(
                ProductSpace([s for j, s in enumerate(spaces) if j != i])
                for i in range(len(spaces))
            ),
        )
        object.__setattr__(self, "_slices", {})

    def __setattr__(self, name, value):
        raise AttributeError("Game is immutable")

    @property
    def players(self) -> int:
        return len(self.spaces)

    def check_player(self, i: int) -> int:
        if not 0 <= i < len(self.spaces):
            raise ValueError(
                f"player index {i} out of range for a {len(self.spaces)}-player game"
            )
        return i

    def opponent_space(self, i: int) -> ProductSpace:
        """Product of the other players' spaces, ascending with i removed."""
        return self._opponents[self.check_player(i)]

    def payoff_at(self, i: int, coords):
        """Payoff of player i at a full strategy tuple of labels or indices."""
        self.check_player(i)
        coords = tuple(
            c if isinstance(c, int) else s.index(c)
            for s, c in zip(self.spaces, coords)
        )
        return self.payoffs[i][self.product.index_of(coords)]

    def restricted_values(self, i: int, xi: int) -> tuple:
        """Payoff slice of player i with own strategy fixed, over opponents."""
        key = (i, xi)
        cached = self._slices.get(key)
        if cached is not None:
            return cached
        opp = self._opponents[i]
        table = self.payoffs[i]
        out = []
        for o in range(opp.size):
            coords = list(opp.coords_of(o))
            coords.insert(i, xi)
            out.append(table[self.product.index_of(coords)])
        out = tuple(out)
        self._slices[key] = out
        return out


def _strategy_index(game: Game, i: int, strategy) -> int:
    if isinstance(strategy, int):
        if not 0 <= strategy < game.spaces[i].size:
            raise ValueError(f"strategy index {strategy} out of range for player {i}")
        return strategy
    return game.spaces[i].index(strategy)


def restricted_payoff(game: Game, i: int, strategy) -> FuzzyFunction:
    """Player i's payoff as a function on the opponents' product space."""
    game.check_player(i)
    xi = _strategy_index(game, i, strategy)
    opp = game.opponent_space(i)
    return FuzzyFunction(opp.space, game.restricted_values(i, xi))


def expected_payoff(game: Game, i: int, strategy, belief, star: TNorm):
    """t-normed integral of the payoff slice against the player's belief."""
    game.check_player(i)
    if belief.space != game.opponent_space(i).space:
        raise ValueError(
            f"belief of player {i} lives on {belief.space}, expected the "
            f"opponent space {game.opponent_space(i).space}"
        )
    return tnormed_integral(restricted_payoff(game, i, strategy), belief, star)


def best_response(game: Game, i: int, belief, star: TNorm, tol=0) -> tuple[str, ...]:
    """All strategies of player i whose expected payoff attains the maximum."""
    game.check_player(i)
    space = game.spaces[i]
    scores = [
        expected_payoff(game, i, xi, belief, star) for xi in range(space.size)
    ]
    top = max(scores)
    return tuple(
        label
        for label, sc in zip(space.labels, scores)
        if sc >= top - tol
    )


class BeliefProfile:
    """One capacity per player on that player's opponent product space."""

    __slots__ = ("game", "beliefs")

    def __init__(self, game: Game, beliefs):
        beliefs = tuple(beliefs)
        if len(beliefs) != game.players:
            raise ValueError(f"need {game.players} beliefs, got {len(beliefs)}")
        for i, b in enumerate(beliefs):
            expected = game.opponent_space(i).space
            if b.space != expected:
                raise ValueError(
                    f"belief of player {i} lives on {b.space}, expected {expected}"
                )
        object.__setattr__(self, "game", game)
        object.__setattr__(self, "beliefs", beliefs)

    def __setattr__(self, name, value):
        raise AttributeError("BeliefProfile is immutable")

    def __iter__(self):
        return iter(self.beliefs)

    def __getitem__(self, i):
        return self.beliefs[i]


class StrategyProfile:
    """One capacity per player on that player's own strategy space."""

    __slots__ = ("game", "capacities")

    def __init__(self, game: Game, capacities):
        capacities = tuple(capacities)
        if len(capacities) != game.players:
            raise ValueError(
                f"need {game.players} capacities, got {len(capacities)}"
            )
        for i, c in enumerate(capacities):
            if c.space != game.spaces[i]:
                raise ValueError(
                    f"capacity of player {i} lives on {c.space}, expected "
                    f"{game.spaces[i]}"
                )
        object.__setattr__(self, "game", game)
        object.__setattr__(self, "capacities", capacities)

    def __setattr__(self, name, value):
        raise AttributeError("StrategyProfile is immutable")

    def __iter__(self):
        return iter(self.capacities)

    def __getitem__(self, i):
        return self.capacities[i]

    def all_possibility(self) -> bool:
        return all(isinstance(c, PossibilityCapacity) for c in self.capacities)


@dataclass(frozen=True)
class EquilibriumCertificate:
    """Outcome of an equilibrium check.

    best_responses: per player, the full set of maximizing strategies.
    residuals: per player, the belief mass outside the product of the
    opponents' best-response sets.  verdict is True exactly when every
    residual vanishes (within the tolerance used by the check).
    """

    best_responses: tuple
    residuals: tuple
    verdict: bool
    payoff_tnorm: str
    tensor_tnorm: str | None = None


def verify_equilibrium(
    game: Game, beliefs, star: TNorm, tol=0, tensor_tnorm: str | None = None
) -> EquilibriumCertificate:
    """Check the equilibrium condition for a belief profile.

    For each player, the residual is the belief mass of the complement of the
    product of all opponents' best-response sets; the profile passes when all
    residuals are 0 (or within tol in float mode).
    """
    if not isinstance(beliefs, BeliefProfile):
        beliefs = BeliefProfile(game, beliefs)
    n = game.players
    responses = [
        best_response(game, j, beliefs[j], star, tol=tol) for j in range(n)
    ]
    response_masks = [
        game.spaces[j].mask_of(responses[j]) for j in range(n)
    ]
    residuals = []
    for i in range(n):
        opp = game.opponent_space(i)
        inside = opp.product_mask(
            [response_masks[j] for j in range(n) if j != i]
        )
        outside = opp.space.full_mask & ~inside
        residuals.append(beliefs[i].value(outside))
    verdict = all(r <= tol for r in residuals)
    return EquilibriumCertificate(
        best_responses=tuple(responses),
        residuals=tuple(residuals),
        verdict=verdict,
        payoff_tnorm=star.name,
        tensor_tnorm=tensor_tnorm,
    )


def induced_beliefs(profile: StrategyProfile, ast: TNorm, tol=0) -> BeliefProfile:
    """Beliefs induced by a strategy profile through the tensor product.

    Player i's belief is the tensor of the other players' capacities in
    ascending player order.  In a two-player game this is just the other
    player's capacity.
    """
    game = profile.game
    beliefs = [
        tensor_n(
            [profile[j] for j in range(game.players) if j != i], ast, tol=tol
        )
        for i in range(game.players)
    ]
    return BeliefProfile(game, beliefs)


def search_equilibria(
    game: Game,
    star: TNorm,
    ast: TNorm,
    mode: str = "indicator",
    budget: int = DEFAULT_SEARCH_BUDGET,
    tol=0,
):
    """Enumerate candidate strategy profiles and keep the equilibria.

    Modes:
      "indicator"            possibility capacities that are 1 on a nonempty
                             support and 0 elsewhere
      "grid" or "grid:<g>"   possibility densities with entries k/g and
                             maximum 1 (default g = 4)
      "necessity-indicator"  duals of the indicator possibilities
                             (alias "necessity")

    Candidates are enumerated in lexicographic order of the per-player
    density encodings, players ascending, so output order is deterministic.
    An empty result means no equilibrium exists at this resolution; finer
    grids or the continuum are not ruled out.  If the total candidate count
    exceeds the budget the search refuses to start.
    """
    mode = str(mode).strip().lower()
    necessity = False
    if mode == "indicator":
        per_player = [_indicator_densities(s.size) for s in game.spaces]
    elif mode == "grid" or mode.startswith("grid:"):
        if mode == "grid":
            steps = DEFAULT_GRID_STEPS
        else:
            try:
                steps = int(mode.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad grid mode {mode!r}; use grid:<steps>") from None
        if steps < 1:
            raise ValueError("grid mode needs at least one step")
        per_player = [_grid_densities(s.size, steps) for s in game.spaces]
    elif mode in ("necessity-indicator", "necessity"):
        necessity = True
        per_player = [_indicator_densities(s.size) for s in game.spaces]
    else:
        raise ValueError(
            f"unknown search mode {mode!r}; use indicator, grid:<g>, "
            "or necessity-indicator"
        )

    total = 1
    for cands in per_player:
        total *= len(cands)
    if total > budget:
        raise SearchBudgetExceeded(total, budget)

    results = []
    for combo in _iterproduct(*per_player):
        caps = []
        for space, density in zip(game.spaces, combo):
            poss = PossibilityCapacity(space, density)
            caps.append(poss.dual() if necessity else poss)
        profile = StrategyProfile(game, caps)
        beliefs = induced_beliefs(profile, ast, tol=tol)
        cert = verify_equilibrium(
            game, beliefs, star, tol=tol, tensor_tnorm=ast.name
        )
        if cert.verdict:
            results.append((profile, cert))
    return results


def _indicator_densities(size: int):
    """All 0/1 densities with at least one 1, in lexicographic order."""
    return sorted(
        tuple((mask >> k) & 1 for k in range(size))
        for mask in range(1, 1 << size)
    )


def _grid_densities(size: int, steps: int):
    """All densities with entries k/steps and maximum 1, lexicographic."""
    out = []
    for combo in _iterproduct(range(steps + 1), repeat=size):
        if max(combo) == steps:
            out.append(tuple(Fraction(k, steps) for k in combo))
    return out


def mixed_expected_payoff(
    game: Game, i: int, profile: StrategyProfile, star: TNorm, ast: TNorm, tol=0
):
    """Player i's payoff against the joint density tensor of a profile.

    The profile must consist of possibility capacities.  The value is the
    t-normed integral of the player's full payoff table against the n-fold
    tensor of all players' capacities.
    """
    game.check_player(i)
    if not profile.all_possibility():
        raise ValueError(
            "mixed expected payoff is defined for possibility profiles only"
        )
    joint = tensor_n(list(profile), ast, tol=tol)
    f = FuzzyFunction(game.product.space, game.payoffs[i])
    return tnormed_integral(f, joint, star)


@dataclass(frozen=True)
class NashReport:
    """Outcome of the capacity equilibrium check for a strategy profile.

    For each player: the profile payoff, the bound obtained by swapping that
    player's capacity for the greatest one, and their gap (bound minus
    payoff, always nonnegative).  verdict is True when every gap vanishes.
    """

    payoffs: tuple
    deviation_bounds: tuple
    gaps: tuple
    verdict: bool
    payoff_tnorm: str
    tensor_tnorm: str


def verify_capacity_nash(
    game: Game, profile: StrategyProfile, star: TNorm, ast: TNorm, tol=0
) -> NashReport:
    """Check whether no player gains by swapping in the greatest capacity.

    The greatest capacity dominates every capacity on the player's space, and
    payoffs are monotone in each profile slot, so the swap bounds every
    single-player deviation at once.
    """
    if not isinstance(profile, StrategyProfile):
        profile = StrategyProfile(game, profile)
    if not profile.all_possibility():
        raise ValueError(
            "the capacity equilibrium check supports possibility profiles only"
        )
    payoffs = []
    bounds = []
    gaps = []
    for i in range(game.players):
        own = mixed_expected_payoff(game, i, profile, star, ast, tol=tol)
        swapped = list(profile)
        swapped[i] = greatest_capacity(game.spaces[i])
        bound = mixed_expected_payoff(
            game, i, StrategyProfile(game, swapped), star, ast, tol=tol
        )
        payoffs.append(own)
        bounds.append(bound)
        gaps.append(bound - own)
    verdict = all(g <= tol for g in gaps)
    return NashReport(
        payoffs=tuple(payoffs),
        deviation_bounds=tuple(bounds),
        gaps=tuple(gaps),
        verdict=verdict,
        payoff_tnorm=star.name,
        tensor_tnorm=ast.name,
    )
