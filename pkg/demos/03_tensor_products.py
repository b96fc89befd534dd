"""Tensor products of capacities over a product space.

Two routes exist.  The density form combines two possibility densities
pointwise with a t-norm and is cheap.  The general form works for any pair
of capacities: the value of a product-space subset is a level maximum of the
first capacity against the per-element slice values of the second.  On
possibility inputs the two routes agree, and for any inputs the marginals of
the product recover the factors.
"""

from fractions import Fraction

from fuzzygames import (
    FiniteSpace,
    ProductSpace,
    dual,
    is_necessity,
    possibility_from_density,
    same_capacity,
    support_check,
    tensor_density,
    tensor_general,
    tensor_n,
    tnorm,
)

H = Fraction(1, 2)
TNORMS = tuple(tnorm(n) for n in ("min", "prod", "luk"))

left = FiniteSpace(("a", "b"))
right = FiniteSpace(("x", "y"))
p = possibility_from_density(left, (1, H))
q = possibility_from_density(right, (H, 1))

print("== density form ==")
print("densities (1, 1/2) and (1/2, 1) combine pointwise:")
for ast in TNORMS:
    prod = tensor_density(p, q, ast)
    cells = ", ".join(
        f"{lbl}:{v}" for lbl, v in zip(prod.space.labels, prod.density)
    )
    print(f"  {ast.name}:  {cells}")

print()
print("== general form coincides on possibilities ==")
for ast in TNORMS:
    assert same_capacity(
        tensor_density(p, q, ast),
        tensor_general(p.as_general(), q.as_general(), ast),
    )
print("density and general routes agree for min, prod and luk")

# marginals: fix a subset of one factor, stretch it across the other
grid = ProductSpace([left, right])
for ast in TNORMS:
    out = tensor_general(p.as_general(), q.as_general(), ast)
    for m in left.subsets():
        assert out.value(grid.product_mask([m, right.full_mask])) == p.value(m)
    for m in right.subsets():
        assert out.value(grid.product_mask([left.full_mask, m])) == q.value(m)
print("both marginals equal the factors, subset by subset")

print()
print("== supports ==")
# p is positive everywhere, q only on {y} if we zero the x entry
narrow = possibility_from_density(right, (0, 1))
ok = support_check([p, narrow], [left.full_mask, right.mask_of(("y",))], tnorm("min"))
print(f"tensor of full-support p and y-only q vanishes off {{a,b}} x {{y}}: {ok}")
assert ok

print()
print("== necessity pairs behave differently ==")
nu = dual(possibility_from_density(left, (1, H)))
nu2 = dual(possibility_from_density(right, (1, H)))
for ast in TNORMS:
    out = tensor_general(nu, nu2, ast)
    print(f"  {ast.name} product of two necessities: is_necessity {is_necessity(out)}")
# only the minimum t-norm keeps the class closed here; the witnessing
# failure for prod and luk is a pair of cylinder sets whose intersection
# scores below the smaller of the two
out = tensor_general(nu, nu2, tnorm("prod"))
A = grid.product_mask([left.mask_of(("a",)), right.full_mask])
B = grid.product_mask([left.full_mask, right.mask_of(("x",))])
print(
    f"  prod witness: value(A) = {out.value(A)}, value(B) = {out.value(B)}, "
    f"value(A n B) = {out.value(A & B)}"
)
assert out.value(A & B) < min(out.value(A), out.value(B))

print()
print("== n-fold products ==")
# three factors fold left to right; on possibilities the fold stays in
# density form and matches folding the general route
r3 = FiniteSpace(("u", "v"))
caps = [p, q, possibility_from_density(r3, (1, 1))]
for ast in TNORMS:
    folded = tensor_n(caps, ast)
    via_general = tensor_n([caps[0].as_general(), caps[1], caps[2]], ast)
    assert same_capacity(folded, via_general)
print("density fold and general fold agree on three factors")
