"""The t-normed integral of a unit-interval function against a capacity.

For a function f on a finite space and a capacity mu, the integral generated
by a t-norm star is

    max over t in [0,1] of  star(mu({x : f(x) >= t}), t)

The level set {f >= t} only changes at the values f takes, and on each
constant step the maximum is attained at the step's right endpoint, so the
supremum is an exact finite maximum over the distinct values of f together
with 0.  With star = min this is the classical Sugeno integral.
"""

from __future__ import annotations

from .spaces import FiniteSpace
from .tnorms import MINIMUM, TNorm
from .capacities import PossibilityCapacity


class FuzzyFunction:
    """A [0,1]-valued function on a finite space, stored pointwise."""

    __slots__ = ("space", "values")

    def __init__(self, space, values):
        if not isinstance(space, FiniteSpace):
            raise ValueError("expected a FiniteSpace")
        values = tuple(values)
        if len(values) != space.size:
            raise ValueError(f"need {space.size} values, got {len(values)}")
        for name, v in zip(space.labels, values):
            if not 0 <= v <= 1:
                raise ValueError(f"value of {name!r} is {v!r}, outside [0,1]")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("FuzzyFunction is immutable")

    def __call__(self, label: str):
        return self.values[self.space.index(label)]

    def level_set(self, t) -> int:
        """Bitmask of {x : f(x) >= t}."""
        mask = 0
        for k, v in enumerate(self.values):
            if v >= t:
                mask |= 1 << k
        return mask

    def __eq__(self, other):
        return (
            isinstance(other, FuzzyFunction)
            and self.space == other.space
            and self.values == other.values
        )

    def __repr__(self):
        return f"FuzzyFunction({self.space!r}, {list(self.values)!r})"


def level_set(f: FuzzyFunction, t) -> int:
    """Bitmask of the upper level set {x : f(x) >= t}."""
    if not 0 <= t <= 1:
        raise ValueError(f"level {t!r} is outside [0,1]")
    return f.level_set(t)


def _level_maximum(values, measure, star: TNorm):
    """Core evaluation shared with the tensor module.

    values: per-element function values; measure: callable on bitmasks;
    returns max over the distinct values t (and 0) of star(measure({v >= t}), t).
    """
    order = sorted(range(len(values)), key=values.__getitem__, reverse=True)
    best = 0
    mask = 0
    i = 0
    n = len(order)
    while i < n:
        t = values[order[i]]
        while i < n and values[order[i]] == t:
            mask |= 1 << order[i]
            i += 1
        if t <= best:
            break  # star(m, t) <= t cannot improve on best any more
        v = star(measure(mask), t)
        if v > best:
            best = v
    return best


def tnormed_integral(f: FuzzyFunction, mu, star: TNorm):
    """Integrate f against the capacity mu with the given t-norm."""
    if f.space != mu.space:
        raise ValueError("function and capacity live on different spaces")
    return _level_maximum(f.values, mu.value, star)


def sugeno_integral(f: FuzzyFunction, mu):
    """The minimum t-norm special case."""
    return tnormed_integral(f, mu, MINIMUM)


def possibility_integral(f: FuzzyFunction, mu: PossibilityCapacity, star: TNorm):
    """Closed form for possibility capacities.

    Equals the level-set evaluation: max over points x of
    star(density(x), f(x)).  Kept as a separate route so the two can be
    cross-checked.
    """
    if not isinstance(mu, PossibilityCapacity):
        raise ValueError("the density closed form needs a possibility capacity")
    if f.space != mu.space:
        raise ValueError("function and capacity live on different spaces")
    best = 0
    for d, v in zip(mu.density, f.values):
        cand = star(d, v)
        if cand > best:
            best = cand
    return best
