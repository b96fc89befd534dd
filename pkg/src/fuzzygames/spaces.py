"""Finite spaces of named points and bitmask subset encoding."""

from __future__ import annotations

from itertools import product as _iterproduct

# General (table-backed) capacities materialize all 2^n subset values, so the
# space size is capped.  Density-backed capacities carry no such limit.
GENERAL_TABLE_MAX_ELEMENTS = 20


class FiniteSpace:
    """An ordered finite set of distinct labels.

    Subsets are encoded as bitmasks over the label order: bit k of a mask
    stands for ``labels[k]``.  Instances are immutable and hashable; two
    spaces are equal when their label tuples are equal.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels):
        labels = tuple(labels)
        if not labels:
            raise ValueError("a space needs at least one element")
        if len(set(labels)) != len(labels):
            raise ValueError("space labels must be distinct")
        for name in labels:
            if not isinstance(name, str) or not name:
                raise ValueError(f"bad label {name!r}: labels are nonempty strings")
            if "," in name:
                # commas delimit subset keys in the file formats
                raise ValueError(f"bad label {name!r}: commas are reserved")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {name: k for k, name in enumerate(labels)})

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSpace is immutable")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"label {label!r} is not a point of {self}") from None

    def mask_of(self, labels) -> int:
        """Bitmask of the subset given by an iterable of labels."""
        mask = 0
        for name in labels:
            mask |= 1 << self.index(name)
        return mask

    def members(self, mask: int) -> tuple[str, ...]:
        """Labels of the subset encoded by mask, in space order."""
        if mask < 0 or mask > self.full_mask:
            raise ValueError(f"mask {mask} is out of range for {self}")
        return tuple(name for k, name in enumerate(self.labels) if mask >> k & 1)

    def subsets(self) -> range:
        """All subset masks, empty set first, whole space last."""
        return range(1 << len(self.labels))

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"FiniteSpace({list(self.labels)!r})"


class ProductSpace:
    """Cartesian product of finite spaces, flattened row-major.

    The flat index of coordinates (i1, ..., ik) is (((i1 * n2) + i2) * n3 + i3)
    and so on: the last factor varies fastest.  Flat labels join the coordinate
    labels with "|".  A one-factor product is the factor itself.
    """

    __slots__ = ("factors", "space", "_strides")

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("a product needs at least one factor")
        for f in factors:
            if not isinstance(f, FiniteSpace):
                raise ValueError("product factors must be FiniteSpace instances")
        object.__setattr__(self, "factors", factors)
        strides = [1] * len(factors)
        for k in range(len(factors) - 2, -1, -1):
            strides[k] = strides[k + 1] * factors[k + 1].size
        object.__setattr__(self, "_strides", tuple(strides))
        if len(factors) == 1:
            flat = factors[0]
        else:
            flat = FiniteSpace(
                "|".join(combo)
                for combo in _iterproduct(*(f.labels for f in factors))
            )
        object.__setattr__(self, "space", flat)

    def __setattr__(self, name, value):
        raise AttributeError("ProductSpace is immutable")

    @property
    def size(self) -> int:
        return self.space.size

    def index_of(self, coords) -> int:
        """Flat index of a tuple of per-factor indices."""
        coords = tuple(coords)
        if len(coords) != len(self.factors):
            raise ValueError("coordinate count does not match factor count")
        flat = 0
        for c, f, s in zip(coords, self.factors, self._strides):
            if not 0 <= c < f.size:
                raise ValueError(f"coordinate {c} out of range for factor {f}")
            flat += c * s
        return flat

    def coords_of(self, index: int) -> tuple[int, ...]:
        """Per-factor indices of a flat index."""
        if not 0 <= index < self.space.size:
            raise ValueError(f"flat index {index} out of range")
        out = []
        for s in self._strides:
            c, index = divmod(index, s)
            out.append(c)
        return tuple(out)

    def product_mask(self, factor_masks) -> int:
        """Flat mask of a product set, one subset mask per factor."""
        factor_masks = tuple(factor_masks)
        if len(factor_masks) != len(self.factors):
            raise ValueError("need one mask per factor")
        picks = []
        for f, m in zip(self.factors, factor_masks):
            if m < 0 or m > f.full_mask:
                raise ValueError(f"mask {m} out of range for factor {f}")
            picks.append([i for i in range(f.size) if m >> i & 1])
        mask = 0
        for coords in _iterproduct(*picks):
            mask |= 1 << self.index_of(coords)
        return mask

    def __eq__(self, other):
        return isinstance(other, ProductSpace) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"ProductSpace({list(self.factors)!r})"
