"""t-normed integrals against capacities on finite spaces, capacity tensor
products, and equilibrium checks for games with possibility and necessity
beliefs.  Exact rational arithmetic by default."""

from .spaces import FiniteSpace, ProductSpace, GENERAL_TABLE_MAX_ELEMENTS
from .tnorms import (
    LUKASIEWICZ,
    MINIMUM,
    PRODUCT,
    LawReport,
    TNorm,
    check_tnorm_laws,
    tnorm,
)
from .capacities import (
    Capacity,
    CapacityError,
    NecessityCapacity,
    PossibilityCapacity,
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
from .integrals import (
    FuzzyFunction,
    level_set,
    possibility_integral,
    sugeno_integral,
    tnormed_integral,
)
from .tensors import support_check, tensor_density, tensor_general, tensor_n
from .games import (
    BeliefProfile,
    EquilibriumCertificate,
    Game,
    NashReport,
    SearchBudgetExceeded,
    StrategyProfile,
    best_response,
    expected_payoff,
    induced_beliefs,
    mixed_expected_payoff,
    restricted_payoff,
    search_equilibria,
    verify_capacity_nash,
    verify_equilibrium,
)
from .fileio import (
    dump_capacity,
    dump_function,
    dump_game,
    format_value,
    load_capacity,
    load_function,
    load_game,
    parse_unit,
    parse_value,
    save_json,
)
from .worked_examples import (
    CheckRow,
    example_belief_one,
    example_belief_two,
    example_game_one,
    example_game_two,
    reference_report,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteSpace",
    "ProductSpace",
    "GENERAL_TABLE_MAX_ELEMENTS",
    "TNorm",
    "LawReport",
    "MINIMUM",
    "PRODUCT",
    "LUKASIEWICZ",
    "tnorm",
    "check_tnorm_laws",
    "Capacity",
    "CapacityError",
    "PossibilityCapacity",
    "NecessityCapacity",
    "make_capacity",
    "possibility_from_density",
    "capacity_of_set",
    "dual",
    "greatest_capacity",
    "least_capacity",
    "is_possibility",
    "is_necessity",
    "lattice_join",
    "lattice_meet",
    "interval_contains",
    "same_capacity",
    "FuzzyFunction",
    "level_set",
    "tnormed_integral",
    "sugeno_integral",
    "possibility_integral",
    "tensor_density",
    "tensor_general",
    "tensor_n",
    "support_check",
    "Game",
    "BeliefProfile",
    "StrategyProfile",
    "EquilibriumCertificate",
    "NashReport",
    "SearchBudgetExceeded",
    "restricted_payoff",
    "expected_payoff",
    "best_response",
    "verify_equilibrium",
    "induced_beliefs",
    "search_equilibria",
    "mixed_expected_payoff",
    "verify_capacity_nash",
    "load_capacity",
    "dump_capacity",
    "load_game",
    "dump_game",
    "load_function",
    "dump_function",
    "parse_value",
    "parse_unit",
    "format_value",
    "save_json",
    "CheckRow",
    "example_game_one",
    "example_belief_one",
    "example_game_two",
    "example_belief_two",
    "reference_report",
]
