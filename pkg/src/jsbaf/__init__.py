"""Structured argumentation with deductive joint support.

Builds arguments from strict and defeasible rules, derives undercut and
unrestricted-rebuttal attacks plus the joint-support relation induced by
strict rule applications, flattens joint-support bipolar frameworks to plain
attack graphs, computes extensions under the four admissibility-based
semantics, and checks the closure and consistency rationality postulates.
"""

from .arguments import (
    Argument,
    ArgumentStore,
    AttackWitness,
    EnumerationLimits,
    attack_witnesses,
    build_aspic_minus_af,
    build_da_jsbaf,
    construct_arguments,
    rebuts_unrestricted,
    strict_argument_nodes,
    support_pairs,
    undercuts,
)
from .core import (
    ArgumentationSystem,
    DefeasibleRule,
    Formula,
    StrictRule,
    atom,
    complement,
    defeasible_rule,
    find_complement_pair,
    is_consistent,
    neg,
    strict_closure,
    strict_rule,
)
from .dsl import SourceDocument, parse_system, print_system
from .errors import (
    GenerationFailedError,
    InconsistentSystemError,
    JsbafError,
    LimitExceededError,
    ParseError,
    SearchLimitExceededError,
    ValidationError,
)
from .frameworks import (
    AF,
    JSBAF,
    HigherLevelAF,
    bar,
    base,
    e_node,
    flatten_joint_attacks,
    flatten_one_step,
    flatten_simplified,
    is_meta,
    project,
    prune_inert,
    sort_nodes,
)
from .oracle import brute_force_extensions
from .postulates import (
    MODES,
    POSTULATES,
    ConclusionSet,
    GeneratedSystem,
    JsbafParams,
    ModeComparison,
    PostulateReport,
    SystemParams,
    Verdict,
    check_closure,
    check_direct_consistency,
    check_indirect_consistency,
    compare_modes,
    conclusion_sets,
    evaluate_postulates,
    random_jsbaf,
    random_system,
)
from .reporting import build_report, emit_apx, emit_dot, emit_report
from .semantics import (
    DEFAULT_NODE_BOUND,
    SEMANTICS,
    complete_extensions,
    defends,
    extensions,
    flattened_af,
    grounded_extension,
    is_conflict_free,
    is_conflict_free_jsbaf,
    is_deductive_extension,
    jsbaf_extensions,
    preferred_extensions,
    stable_extensions,
)

__version__ = "0.1.0"
