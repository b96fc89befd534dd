"""The two built-in reference games, walked through by hand.

Game 1 is a 2x2 match-versus-mismatch game where both players hold the same
possibility belief, density (a: 1, b: 1/2).  Whether that belief pair passes
the equilibrium check depends on the payoff t-norm: minimum says yes,
product says no and leaves player 2 a residual of exactly 1/2.  Game 2
separates the two solution concepts: the vacuous beliefs form a capacity
equilibrium but fail the belief-based check.
"""

from fuzzygames import (
    BeliefProfile,
    StrategyProfile,
    best_response,
    example_belief_one,
    example_belief_two,
    example_game_one,
    example_game_two,
    expected_payoff,
    reference_report,
    tnorm,
    verify_capacity_nash,
    verify_equilibrium,
)

MIN, PROD = tnorm("min"), tnorm("prod")

g1 = example_game_one()
b1 = example_belief_one()
print("== game 1, belief density (a: 1, b: 1/2) for both players ==")
for star in (MIN, PROD):
    pa = expected_payoff(g1, 0, "a", b1, star)
    pb = expected_payoff(g1, 0, "b", b1, star)
    resp = best_response(g1, 0, b1, star)
    print(f"  {star.name}: player 1 payoffs a={pa}, b={pb}; best responses {{{','.join(resp)}}}")

beliefs = BeliefProfile(g1, (b1, b1))
cert = verify_equilibrium(g1, beliefs, MIN)
print(f"  min verdict: equilibrium={cert.verdict}, residuals {tuple(str(r) for r in cert.residuals)}")
assert cert.verdict

cert = verify_equilibrium(g1, beliefs, PROD)
print(f"  prod verdict: equilibrium={cert.verdict}, player-2 residual {cert.residuals[1]}")
assert not cert.verdict and str(cert.residuals[1]) == "1/2"

print()
g2 = example_game_two()
top = example_belief_two()
print("== game 2, vacuous beliefs (density 1 everywhere) ==")
pa = expected_payoff(g2, 0, "a", top, MIN)
pb = expected_payoff(g2, 0, "b", top, MIN)
print(f"  min: player 1 payoffs a={pa}, b={pb}; best responses "
      f"{{{','.join(best_response(g2, 0, top, MIN))}}}")

nash = verify_capacity_nash(g2, StrategyProfile(g2, (top, top)), MIN, MIN)
print(f"  capacity equilibrium: verdict={nash.verdict}, gaps {tuple(str(g) for g in nash.gaps)}")
assert nash.verdict

cert = verify_equilibrium(g2, BeliefProfile(g2, (top, top)), MIN)
r1 = "{" + ",".join(cert.best_responses[0]) + "}"
r2 = "{" + ",".join(cert.best_responses[1]) + "}"
print(f"  belief equilibrium: verdict={cert.verdict} (best responses are {r1} and {r2}, "
      f"and the vacuous beliefs put mass {cert.residuals[0]} outside them)")
assert not cert.verdict

print()
print("== the full reproduction table ==")
rows = reference_report("rational")
width = max(len(r.name) for r in rows)
for r in rows:
    mark = "ok" if r.passed else "FAIL"
    print(f"  {r.name:<{width}}  expected {r.expected:<18} got {r.computed:<18} {mark}")
assert all(r.passed for r in rows)
print(f"  all {len(rows)} checks pass")
