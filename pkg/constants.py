from enum import Enum, IntEnum, auto


class Side(Enum):
    OUTER = auto()
    INNER = auto()


class CoreStatus(Enum):
    CORE = "core"
    NOT_CORE = "not_core"
    BIPARTITE = "bipartite"


class CoreReason(Enum):
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"


class NotCoreCase(Enum):
    A_EVEN_SMALL = "a_even_small"
    A_ODD_LARGE = "a_odd_large"


class Cay1Variant(Enum):
    """ second connection element: (1,l0), (-1,l0) or (0,l0) """
    STANDARD = "standard"
    REVERSED = "reversed"
    LOOPED = "looped"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    DISAGREEMENT = 2
    INCONCLUSIVE = 3


# search limits
DEFAULT_NODE_BUDGET = 10 ** 8
BUDGET_ENV_VAR = "GP_ORACLE_BUDGET"
WITNESS_ENUMERATION_BOUND = 32
ISOMORPHISM_VERTEX_BOUND = 60
AUT_VERTEX_BOUND = 60

# largest n each verify check runs up to
ORACLE_CEILINGS = {
    "core": 16,
    "endo": 12,
    "aut": 12,
    "retract": 30,
    "spokes": 20,
    "cay1": 40,
    "group": 40,
    "coprime": 40,
}

# pairs with an automorphism group outside the generic presentations
EXCEPTIONAL_PAIRS = frozenset({(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)})

# |Aut| of the exceptional pairs
EXCEPTIONAL_AUT_ORDERS = {
    (4, 1): 48, (5, 2): 120, (8, 3): 96, (10, 2): 120,
    (10, 3): 240, (12, 5): 144, (24, 5): 144,
}

# brute-force Aut is filled into classify rows up to this n
BRUTE_AUT_DEFAULT_N = 12

PLANE_COLUMNS = (
    "n", "k", "bipartite", "core", "vertex_transitive", "group_graph",
    "two_gen_monoid_graph", "loopless_obstruction", "aut_order_expected", "aut_order_found",
)
PLANE_HEADER = "# petersen-plane v1: " + ",".join(PLANE_COLUMNS)
