"""Exact computations with monomial ideals of Borel type.

Deciders for the Borel-type property, Castelnuovo-Mumford regularity through
stable truncations, the stratified generator structure, associated primes,
and a brute-force Betti-number oracle to check all of it against.
"""

from .betti import BettiTable, betti_table, regularity_oracle
from .borel import (
    RegularityCertificate,
    ahmad_anwar_bound,
    exchange_witnesses,
    is_borel_definitional,
    is_borel_exchange,
    is_stable,
    regularity,
)
from .errors import (
    BorelKitError,
    BudgetExceeded,
    DegenerateIdeal,
    NotBorelType,
    StructureViolation,
)
from .ideal import MonomialIdeal
from .primes import associated_primes, check_initial_segment
from .ring import Monomial, RingContext
from .structure import BorelBudget, BorelStructure, decompose_structure, random_borel, validate_structure

__version__ = "0.1.0"
