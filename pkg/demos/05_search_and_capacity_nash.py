"""Searching for equilibria and cross-checking them as capacity equilibria.

The search enumerates candidate possibility profiles at a chosen resolution
(indicator supports, a fractional grid, or necessity duals of indicators),
induces each player's belief about the others through the tensor product,
and keeps the profiles whose beliefs verify.  Every find should then pass
the capacity equilibrium check run with the same pair of t-norms; a three
player example shows why the tensor t-norm has to travel with the result.
"""

from fractions import Fraction

from fuzzygames import (
    FiniteSpace,
    Game,
    PossibilityCapacity,
    SearchBudgetExceeded,
    StrategyProfile,
    induced_beliefs,
    search_equilibria,
    tnorm,
    verify_capacity_nash,
    verify_equilibrium,
    example_game_one,
)

H = Fraction(1, 2)
MIN, PROD, LUK = tnorm("min"), tnorm("prod"), tnorm("luk")


def show(profile) -> str:
    return " x ".join(
        "(" + ",".join(str(d) for d in cap.density) + ")" for cap in profile
    )


g1 = example_game_one()
print("== search on the first reference game, payoff and tensor t-norm min ==")
for mode in ("indicator", "grid:2", "necessity-indicator"):
    found = search_equilibria(g1, MIN, MIN, mode=mode)
    print(f"  mode {mode}: {len(found)} equilibrium profile(s)")
    if mode == "grid:2":
        for profile, cert in found:
            print(f"    {show(profile)}")

# the half-step grid rediscovers the reference belief pair (1, 1/2) for both players
found = search_equilibria(g1, MIN, MIN, mode="grid:2")
assert any(
    profile[0].density == (1, H) and profile[1].density == (1, H)
    for profile, cert in found
)

# every find doubles as a capacity equilibrium under the same t-norm pair
for star in (MIN, PROD, LUK):
    for profile, cert in search_equilibria(g1, star, MIN, mode="indicator"):
        assert verify_capacity_nash(g1, profile, star, MIN).verdict
print("  every indicator find passes the capacity equilibrium check")

# a search that would enumerate too much refuses up front
try:
    search_equilibria(g1, MIN, MIN, mode="grid:50", budget=1000)
except SearchBudgetExceeded as e:
    print(f"  budget refusal: {e}")

print()
print("== three players: the tensor t-norm matters ==")
abc = FiniteSpace(("a", "b"))
u1 = [Fraction(2, 5)] * 4 + [0, 0, 0, 1]
u23 = [1] * 8
game3 = Game((abc, abc, abc), (u1, u23, u23))
profile = StrategyProfile(
    game3,
    (
        PossibilityCapacity(abc, (1, 0)),
        PossibilityCapacity(abc, (1, H)),
        PossibilityCapacity(abc, (1, H)),
    ),
)

# under the lukasiewicz tensor the profile verifies; under min it fails,
# because player 1's induced belief about (b,b) changes with the fold
for ast in (LUK, MIN):
    beliefs = induced_beliefs(profile, ast)
    cert = verify_equilibrium(game3, beliefs, MIN, tensor_tnorm=ast.name)
    mass_bb = beliefs[0].value(beliefs[0].space.mask_of(("b|b",)))
    print(
        f"  tensor {ast.name}: belief-1 mass on (b,b) = {mass_bb}, "
        f"equilibrium = {cert.verdict}"
    )

nash_match = verify_capacity_nash(game3, profile, MIN, LUK)
nash_cross = verify_capacity_nash(game3, profile, MIN, MIN)
print(f"  capacity check with the matching luk tensor: verdict {nash_match.verdict}")
print(
    f"  capacity check with the min tensor instead: verdict {nash_cross.verdict}, "
    f"player-1 gap {nash_cross.gaps[0]}"
)
assert nash_match.verdict and not nash_cross.verdict
print("  moral: report the tensor t-norm next to the payoff t-norm")

print()
print("== honest negatives ==")
# this game has no equilibrium at indicator resolution under any t-norm
stubborn = Game(
    (abc, abc),
    (
        {("a", "a"): H, ("a", "b"): 0, ("b", "a"): 0, ("b", "b"): Fraction(1, 4)},
        {("a", "a"): 0, ("a", "b"): H, ("b", "a"): H, ("b", "b"): 0},
    ),
)
for star in (MIN, PROD, LUK):
    assert search_equilibria(stubborn, star, MIN, mode="indicator") == []
print("  a game can come up empty at one resolution; that rules nothing out,")
print("  finer grids or beliefs off the grid may still verify")
