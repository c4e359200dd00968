"""De Concini-Procesi ideals of hooks: closed forms and an exact brute-force oracle."""

from .partitions import Hook, NotAPartition, Partition, as_hook, conjugate, delta, hook_to_partition, make_partition
from .polyring import MvPoly, elementary_symmetric, monomials_of_degree
from .ideals import (
    MonomialIdeal,
    alexander_dual,
    colon_by_monomial,
    equal_as_ideals_truncated,
    hook_split,
    krull_dim_quotient,
    linear_quotients_lex,
    minimal_primes,
    set_size_multiset,
    tanisaki_generators,
)
from .series import (
    BettiTable,
    BiPoly,
    UniSeries,
    betti_table,
    hilbert_hook,
    hilbert_via_factorization,
    poincare_hook,
    poincare_J_hook,
    regularity_from_table,
    regularity_hook,
    t_binomial,
)
from .oracle import graded_dim, hilbert_oracle, total_dimension, verify_hook

__version__ = "0.1.0"
