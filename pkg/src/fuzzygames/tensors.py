"""Tensor products of capacities generated by a t-norm.

Two routes exist on purpose.  For possibility capacities the product is
determined by densities: the density of a pair (x, y) is ast(d1(x), d2(y)).
For arbitrary capacities the product of a set B works through its slices:
with v(x) = mu2({y : (x, y) in B}), the value of B is

    max over candidate levels t of  ast(mu1({x : v(x) >= t}), t)

where the candidate levels are the distinct slice values of B together with
0.  On possibility inputs the two routes agree on every subset, and with
ast = min the general route reduces to max{t : mu1({v >= t}) >= t}.
"""

from __future__ import annotations

from .spaces import ProductSpace, GENERAL_TABLE_MAX_ELEMENTS
from .tnorms import TNorm
from .capacities import Capacity, PossibilityCapacity
from .integrals import _level_maximum


def tensor_density(mu1: PossibilityCapacity, mu2: PossibilityCapacity, ast: TNorm):
    """Density-form product of two possibility capacities."""
    if not isinstance(mu1, PossibilityCapacity) or not isinstance(
        mu2, PossibilityCapacity
    ):
        raise ValueError("tensor_density needs possibility capacities")
    prod = ProductSpace([mu1.space, mu2.space])
    density = [ast(a, b) for a in mu1.density for b in mu2.density]
    return PossibilityCapacity(prod.space, density)


def tensor_general(mu1, mu2, ast: TNorm, tol=0) -> Capacity:
    """Slice-form product of two arbitrary capacities.

    Materializes the full table on the product space, so the combined size is
    capped like any general capacity.
    """
    n1 = mu1.space.size
    n2 = mu2.space.size
    if n1 * n2 > GENERAL_TABLE_MAX_ELEMENTS:
        raise ValueError(
            f"product space has {n1 * n2} elements; general tables are capped "
            f"at {GENERAL_TABLE_MAX_ELEMENTS}"
        )
    prod = ProductSpace([mu1.space, mu2.space])
    full2 = mu2.space.full_mask
    measure = mu1.value
    values = []
    for b in range(1 << (n1 * n2)):
        slices = [mu2.value((b >> (x * n2)) & full2) for x in range(n1)]
        values.append(_level_maximum(slices, measure, ast))
    return Capacity(prod.space, values, tol=tol)


def tensor_n(caps, ast: TNorm, tol=0):
    """Left-associated n-fold tensor product.

    A single capacity is returned unchanged.  When every factor is a
    possibility capacity the density route is used; otherwise the general
    route folds pairwise, flattening the product space as it goes.
    """
    caps = list(caps)
    if not caps:
        raise ValueError("tensor_n needs at least one capacity")
    if len(caps) == 1:
        return caps[0]
    if all(isinstance(c, PossibilityCapacity) for c in caps):
        prod = ProductSpace([c.space for c in caps])
        density = []
        for flat in range(prod.size):
            coords = prod.coords_of(flat)
            acc = caps[0].density[coords[0]]
            for c, k in zip(caps[1:], coords[1:]):
                acc = ast(acc, c.density[k])
            density.append(acc)
        return PossibilityCapacity(prod.space, density, tol=tol)
    acc = caps[0]
    for nxt in caps[1:]:
        acc = tensor_general(acc, nxt, ast, tol=tol)
    return acc


def support_check(caps, supports, ast: TNorm, tol=0) -> bool:
    """Whether the tensor of capacities vanishes outside a support product.

    Each capacity must already vanish outside its own support (value 0 on the
    complement); violating that precondition is an error, not a False.
    Returns True when the tensor assigns 0 to the complement of the product
    of the supports.
    """
    caps = list(caps)
    supports = list(supports)
    if len(supports) != len(caps):
        raise ValueError("need one support per capacity")
    masks = []
    for c, sup in zip(caps, supports):
        mask = sup if isinstance(sup, int) else c.space.mask_of(sup)
        if mask < 0 or mask > c.space.full_mask:
            raise ValueError(f"support {sup!r} is not over {c.space}")
        outside = c.space.full_mask & ~mask
        if abs(c.value(outside)) > tol:
            raise ValueError(
                f"capacity on {c.space} has mass {c.value(outside)!r} outside "
                f"its declared support {c.space.members(mask)!r}"
            )
        masks.append(mask)
    joint = tensor_n(caps, ast, tol=tol)
    prod = ProductSpace([c.space for c in caps])
    inside = prod.product_mask(masks)
    outside = prod.space.full_mask & ~inside
    return abs(joint.value(outside)) <= tol
