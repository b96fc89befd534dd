"""JSON file formats with exact fraction strings.

Values are serialized as reduced fraction strings ("1/2", "1", "3/4") so
round-trips stay exact; plain JSON integers are accepted on input, and
decimal strings like "0.5" parse to the exact rational they spell.

Capacity files:

    {"space": ["a", "b"], "kind": "possibility", "density": {"a": "1", "b": "1/2"}}
    {"space": ["a", "b"], "kind": "necessity",  "density": {"a": "1", "b": "1/2"}}
    {"space": ["a", "b"], "kind": "general",
     "values": {"": "0", "a": "1", "b": "1/2", "a,b": "1"}}

General subset keys join member labels with commas, empty string for the
empty set.  A necessity file stores the density of its conjugate possibility
capacity.  Game files:

    {"players": 2, "strategies": [["a", "b"], ["a", "b"]],
     "payoffs": [{"a,a": "1/2", ...}, {...}]}

Payoff keys join one strategy label per player with commas, players in
order.  Function files mirror the possibility shape with "values" instead of
a density.  Points of product spaces are labeled by joining coordinates with
"|", for example "a|b".
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .spaces import FiniteSpace
from .capacities import (
    Capacity,
    NecessityCapacity,
    PossibilityCapacity,
)
from .integrals import FuzzyFunction
from .games import Game


def parse_value(raw, where: str = "value") -> Fraction:
    """Parse a JSON scalar into an exact Fraction."""
    if isinstance(raw, bool):
        raise ValueError(f"{where}: booleans are not numbers")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        # accept the decimal the float prints as, not its binary expansion
        return Fraction(repr(raw))
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"{where}: malformed fraction {raw!r}") from None
    raise ValueError(f"{where}: expected a fraction string, got {raw!r}")


def parse_unit(raw, where: str = "value") -> Fraction:
    """Parse a value and require it to lie in [0,1]."""
    v = parse_value(raw, where)
    if not 0 <= v <= 1:
        raise ValueError(f"{where}: {raw!r} is outside [0,1]")
    return v


def format_value(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(Fraction(v))


def _as_document(source, what: str) -> dict:
    if isinstance(source, dict):
        return source
    text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"{what} file {source}: invalid JSON ({e})") from None
    if not isinstance(doc, dict):
        raise ValueError(f"{what} file {source}: expected a JSON object")
    return doc


def _space_from(doc: dict, what: str) -> FiniteSpace:
    labels = doc.get("space")
    if not isinstance(labels, list) or not all(
        isinstance(x, str) for x in labels
    ):
        raise ValueError(f"{what}: 'space' must be a list of labels")
    return FiniteSpace(labels)


def _maybe_float(v, numeric: str):
    return float(v) if numeric == "float" else v


def _check_numeric(numeric: str) -> float:
    if numeric not in ("rational", "float"):
        raise ValueError(f"numeric mode must be rational or float, not {numeric!r}")
    return 1e-9 if numeric == "float" else 0


def load_capacity(source, numeric: str = "rational"):
    """Read a capacity of any kind from a path or a parsed JSON object."""
    tol = _check_numeric(numeric)
    doc = _as_document(source, "capacity")
    kind = doc.get("kind")
    space = _space_from(doc, "capacity")
    if kind in ("possibility", "necessity"):
        density_doc = doc.get("density")
        if not isinstance(density_doc, dict):
            raise ValueError(f"capacity of kind {kind}: 'density' must be an object")
        unknown = set(density_doc) - set(space.labels)
        if unknown:
            raise ValueError(
                f"capacity density names unknown labels {sorted(unknown)!r}"
            )
        density = [
            _maybe_float(
                parse_unit(density_doc.get(name, 0), f"density of {name!r}"),
                numeric,
            )
            for name in space.labels
        ]
        poss = PossibilityCapacity(space, density, tol=tol)
        return poss.dual() if kind == "necessity" else poss
    if kind == "general":
        values_doc = doc.get("values")
        if not isinstance(values_doc, dict):
            raise ValueError("capacity of kind general: 'values' must be an object")
        values = [None] * (1 << space.size)
        for key, raw in values_doc.items():
            labels = [] if key == "" else key.split(",")
            mask = space.mask_of(labels)
            if values[mask] is not None:
                raise ValueError(f"subset {key!r} given twice")
            values[mask] = _maybe_float(
                parse_unit(raw, f"value of subset {key!r}"), numeric
            )
        missing = [m for m, v in enumerate(values) if v is None]
        if missing:
            raise ValueError(
                f"general capacity misses {len(missing)} subsets, first "
                f"{space.members(missing[0])!r}"
            )
        return Capacity(space, values, tol=tol)
    raise ValueError(
        f"capacity kind must be possibility, necessity or general, not {kind!r}"
    )


def dump_capacity(cap) -> dict:
    """Serialize a capacity to its JSON object form."""
    if isinstance(cap, PossibilityCapacity):
        return {
            "space": list(cap.space.labels),
            "kind": "possibility",
            "density": {
                name: format_value(v)
                for name, v in zip(cap.space.labels, cap.density)
            },
        }
    if isinstance(cap, NecessityCapacity):
        conj = cap.conjugate
        return {
            "space": list(cap.space.labels),
            "kind": "necessity",
            "density": {
                name: format_value(v)
                for name, v in zip(conj.space.labels, conj.density)
            },
        }
    return {
        "space": list(cap.space.labels),
        "kind": "general",
        "values": {
            ",".join(cap.space.members(m)): format_value(cap.value(m))
            for m in cap.space.subsets()
        },
    }


def load_game(source, numeric: str = "rational") -> Game:
    """Read a game from a path or a parsed JSON object."""
    tol = _check_numeric(numeric)
    doc = _as_document(source, "game")
    strategies = doc.get("strategies")
    if not isinstance(strategies, list) or not strategies:
        raise ValueError("game: 'strategies' must be a list of label lists")
    spaces = [FiniteSpace(labels) for labels in strategies]
    players = doc.get("players", len(spaces))
    if players != len(spaces):
        raise ValueError(
            f"game: 'players' is {players} but {len(spaces)} strategy lists given"
        )
    payoff_docs = doc.get("payoffs")
    if not isinstance(payoff_docs, list) or len(payoff_docs) != len(spaces):
        raise ValueError("game: 'payoffs' must hold one table per player")
    tables = []
    for i, table_doc in enumerate(payoff_docs):
        if not isinstance(table_doc, dict):
            raise ValueError(f"game: payoff table of player {i + 1} must be an object")
        table = {}
        for key, raw in table_doc.items():
            combo = tuple(key.split(","))
            table[combo] = _maybe_float(
                parse_unit(raw, f"payoffs[{i}] at {key!r}"), numeric
            )
        tables.append(table)
    return Game(spaces, tables, tol=tol)


def dump_game(game: Game) -> dict:
    """Serialize a game to its JSON object form."""
    payoffs = []
    for table in game.payoffs:
        payoffs.append(
            {
                ",".join(
                    space.labels[c]
                    for space, c in zip(game.spaces, game.product.coords_of(idx))
                ): format_value(v)
                for idx, v in enumerate(table)
            }
        )
    return {
        "players": game.players,
        "strategies": [list(s.labels) for s in game.spaces],
        "payoffs": payoffs,
    }


def load_function(source, numeric: str = "rational") -> FuzzyFunction:
    """Read a pointwise [0,1] function from a path or parsed JSON object."""
    _check_numeric(numeric)
    doc = _as_document(source, "function")
    space = _space_from(doc, "function")
    values_doc = doc.get("values")
    if not isinstance(values_doc, dict):
        raise ValueError("function: 'values' must be an object")
    unknown = set(values_doc) - set(space.labels)
    if unknown:
        raise ValueError(f"function names unknown labels {sorted(unknown)!r}")
    missing = [name for name in space.labels if name not in values_doc]
    if missing:
        raise ValueError(f"function misses values for {missing!r}")
    values = [
        _maybe_float(
            parse_unit(values_doc[name], f"value of {name!r}"), numeric
        )
        for name in space.labels
    ]
    return FuzzyFunction(space, values)


def dump_function(f: FuzzyFunction) -> dict:
    return {
        "space": list(f.space.labels),
        "values": {
            name: format_value(v) for name, v in zip(f.space.labels, f.values)
        },
    }


def save_json(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=False) + "\n")
