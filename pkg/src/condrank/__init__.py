"""Ranking arguments of abstract argumentation frameworks through System Z.

Typical use::

    from condrank import parse_tgf, ccbs
    af = parse_tgf(open("example.tgf").read())
    print(ccbs(af))
"""

from .af import (
    ArgumentationFramework,
    ParseError,
    apply_isomorphism,
    attackers,
    connected_components,
    disjoint_union,
    parse_apx,
    parse_tgf,
    random_af,
    self_attackers,
    to_apx,
    to_tgf,
)
from .kernels import available_backends, default_backend, set_threads
from .logic import (
    BOTTOM,
    DEFAULT_WORLD_LIMIT,
    TOP,
    And,
    Atom,
    Formula,
    Not,
    Or,
    PossibleWorld,
    WorldLimitExceeded,
    enumerate_worlds,
    evaluate,
    models,
    parse_formula,
)
from .postulates import (
    Postulate,
    PostulateReport,
    SuiteConfig,
    check_abstraction,
    check_independence,
    check_self_contradiction,
    check_void_precedence,
    run_suite,
)
from .ranking import ArgumentRanking, CcsScores, Comparison, Semantics, ccbs, ccbs_prime, ccs, compare, rank
from .systemz import (
    INFINITY,
    Conditional,
    ConditionalKB,
    Indicator,
    ZPartition,
    accepts,
    entails_z,
    indicator,
    kappa_of_formula,
    kappa_z,
    min_worlds,
    tolerates,
    z_partition,
    z_rank,
)
from .translation import theta

__version__ = "0.1.0"
