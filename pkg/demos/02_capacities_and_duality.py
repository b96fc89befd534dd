"""Capacities on a finite space: construction, duality, order structure.

A capacity assigns 0 to the empty set, 1 to the whole space, and never
shrinks when the set grows.  Nothing else is required; additivity in
particular is not.  Possibility capacities (max over a density) and their
duals, the necessity capacities, are the two special classes the game
machinery leans on.
"""

from fractions import Fraction

from fuzzygames import (
    FiniteSpace,
    capacity_of_set,
    dual,
    greatest_capacity,
    interval_contains,
    is_necessity,
    is_possibility,
    lattice_join,
    lattice_meet,
    least_capacity,
    make_capacity,
    possibility_from_density,
    same_capacity,
)

H = Fraction(1, 2)
ab = FiniteSpace(("a", "b"))

# a general capacity is just a monotone subset table
coin = make_capacity(ab, {(): 0, ("a",): H, ("b",): H, ("a", "b"): 1})
print(f"additive-looking table on {{a,b}}: value of {{a}} is {capacity_of_set(coin, ('a',))}")
print(f"  is_possibility {is_possibility(coin)}, is_necessity {is_necessity(coin)}")
assert not is_possibility(coin) and not is_necessity(coin)

# monotonicity violations are rejected with the offending pair named
try:
    make_capacity(ab, {(): 0, ("a",): Fraction(3, 4), ("b",): 0, ("a", "b"): H})
except ValueError as e:
    print(f"rejected table: {e}")

print()
poss = possibility_from_density(ab, {"a": 1, "b": H})
print("possibility with density (a: 1, b: 1/2):")
for names in ((), ("a",), ("b",), ("a", "b")):
    shown = "{" + ",".join(names) + "}"
    print(f"  value of {shown}: {capacity_of_set(poss, names)}")

nec = dual(poss)
print("its dual, a necessity:")
for names in ((), ("a",), ("b",), ("a", "b")):
    shown = "{" + ",".join(names) + "}"
    print(f"  value of {shown}: {capacity_of_set(nec, names)}")
assert is_necessity(nec)
assert dual(nec) is poss   # duality is an involution
print("dual(dual(p)) is p again")

print()
# every capacity sits between the least and the greatest one
top = greatest_capacity(ab)
bottom = least_capacity(ab)
print(f"bounds: least {[str(capacity_of_set(bottom, s)) for s in ((), ('a',), ('b',), ('a', 'b'))]}, "
      f"greatest {[str(capacity_of_set(top, s)) for s in ((), ('a',), ('b',), ('a', 'b'))]}")
for cap in (coin, poss, nec):
    assert interval_contains(bottom, top, cap)
print("the general, possibility and necessity examples all sit between the bounds")

# join and meet are computed pointwise; join of possibilities stays one
other = possibility_from_density(ab, {"a": Fraction(1, 4), "b": 1})
joined = lattice_join(poss, other)
met = lattice_meet(poss, other)
print(f"join of densities (1, 1/2) and (1/4, 1): density {[str(d) for d in joined.density]}")
print(f"meet values: {[str(met.value(m)) for m in ab.subsets()]}")
assert same_capacity(lattice_join(poss, bottom), poss)
assert same_capacity(lattice_meet(poss, top), poss)
print("joining with the least and meeting with the greatest both change nothing")
