"""Argument enumeration and the attack / joint-support relations.

An argument is a tree of rule applications: its top rule's body formulas are
concluded, in order, by its immediate sub-arguments.  Enumeration follows
the recursive definition, restricted so that no root-to-leaf branch repeats
a conclusion; that keeps the store finite on cyclic rule sets while
preserving every non-redundant argument (anything pruned has a shorter
argument with the same conclusion, obtained by grafting the deeper
duplicate's subtree in place of the shallower one).

Arguments are interned: within one store, structural equality (same top
rule, pointwise-equal subs) coincides with object identity.  Canonical ids
A1, A2, ... are assigned breadth-first by derivation depth, then
lexicographically by rule id and sub ids, so two runs over the same system
label every argument identically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import ArgumentationSystem, DefeasibleRule, Formula, Rule, StrictRule, complement
from .errors import LimitExceededError
from .frameworks import AF, JSBAF, NodeId, base


@dataclass(frozen=True)
class EnumerationLimits:
    """Caps applied during argument enumeration."""

    max_arguments: int = 5000


class Argument:
    """A rule application over sub-arguments; immutable after creation."""

    __slots__ = (
        "rule",
        "subs",
        "ordinal",
        "canonical_id",
        "conclusion",
        "def_rule_ids",
        "depth",
        "branch_conclusions",
        "sub_arguments",
    )

    def __init__(self, rule: Rule, subs: tuple["Argument", ...], ordinal: int):
        self.rule = rule
        self.subs = subs
        self.ordinal = ordinal
        self.canonical_id = f"A{ordinal + 1}"
        self.conclusion: Formula = rule.head
        def_ids: set[str] = set()
        for sub in subs:
            def_ids |= sub.def_rule_ids
        if isinstance(rule, DefeasibleRule):
            def_ids.add(rule.id)
        self.def_rule_ids = frozenset(def_ids)
        self.depth = 1 + max((sub.depth for sub in subs), default=0)
        concs: set[Formula] = {rule.head}
        sub_args: set[Argument] = {self}
        for sub in subs:
            concs |= sub.branch_conclusions
            sub_args |= sub.sub_arguments
        self.branch_conclusions = frozenset(concs)
        self.sub_arguments = frozenset(sub_args)

    @property
    def defeasible(self) -> bool:
        return bool(self.def_rule_ids)

    @property
    def top_rule_strict(self) -> bool:
        return isinstance(self.rule, StrictRule)

    @property
    def arrow(self) -> str:
        return "->" if self.top_rule_strict else "=>"

    @property
    def compact(self) -> str:
        """E.g. ``r5(A5,A6)``."""
        return f"{self.rule.id}({','.join(s.canonical_id for s in self.subs)})"

    @property
    def form(self) -> str:
        """E.g. ``A7: A5,A6 -> ~ht``; empty body renders as ``A1: -> hw``."""
        body = ",".join(s.canonical_id for s in self.subs)
        lhs = f"{body} " if body else ""
        return f"{self.canonical_id}: {lhs}{self.arrow} {self.conclusion}"

    @property
    def structure(self) -> str:
        """Fully expanded tree, e.g. ``((-> hw) => ht)``."""
        body = ",".join(s.structure for s in self.subs)
        lhs = f"{body} " if body else ""
        return f"({lhs}{self.arrow} {self.conclusion})"

    def __repr__(self) -> str:
        return f"<{self.form}>"


@dataclass(frozen=True)
class ArgumentStore:
    """Every argument constructible on the basis of a system, deduplicated
    and closed under sub-arguments."""

    system: ArgumentationSystem
    arguments: tuple[Argument, ...]
    limits: EnumerationLimits
    acyclicity_pruned: bool

    def by_id(self, canonical_id: str) -> Argument:
        return self.arguments[int(canonical_id[1:]) - 1]

    def __len__(self) -> int:
        return len(self.arguments)


def construct_arguments(
    system: ArgumentationSystem, limits: EnumerationLimits = EnumerationLimits()
) -> ArgumentStore:
    """Enumerate the argument store of ``system``.

    Raises LimitExceededError when the store would exceed
    ``limits.max_arguments``, which signals a combinatorially explosive
    system rather than a recoverable condition.
    """
    rules: list[Rule] = sorted(
        system.strict_rules + system.defeasible_rules, key=lambda r: r.id
    )
    arguments: list[Argument] = []
    by_conclusion: dict[Formula, list[Argument]] = {}
    seen: set[tuple[str, tuple[int, ...]]] = set()
    pruned = False

    def create(rule: Rule, subs: tuple[Argument, ...]):
        if len(arguments) >= limits.max_arguments:
            raise LimitExceededError(limits.max_arguments)
        arg = Argument(rule, subs, len(arguments))
        arguments.append(arg)
        by_conclusion.setdefault(arg.conclusion, []).append(arg)
        seen.add((rule.id, tuple(s.ordinal for s in subs)))

    for rule in rules:
        if not rule.body:
            create(rule, ())

    depth = 2
    while True:
        candidates: list[tuple[str, tuple[int, ...], Rule, tuple[Argument, ...]]] = []
        for rule in rules:
            if not rule.body:
                continue
            pools = [by_conclusion.get(b, []) for b in rule.body]
            if any(not pool for pool in pools):
                continue
            for subs in itertools.product(*pools):
                if max(s.depth for s in subs) != depth - 1:
                    continue
                key = (rule.id, tuple(s.ordinal for s in subs))
                if key in seen:
                    continue
                if any(rule.head in s.branch_conclusions for s in subs):
                    pruned = True
                    continue
                candidates.append((rule.id, key[1], rule, subs))
        if not candidates:
            break
        for _, _, rule, subs in sorted(candidates, key=lambda c: (c[0], c[1])):
            create(rule, subs)
        depth += 1

    return ArgumentStore(system, tuple(arguments), limits, pruned)


def undercuts(a: Argument, b: Argument, system: ArgumentationSystem) -> tuple[Argument, ...]:
    """Sub-arguments of ``b`` whose defeasible top rule is named, where the
    name's complement is concluded by ``a``.  Empty when no undercut holds."""
    names = system.undercut_names
    hits = [
        sub
        for sub in b.sub_arguments
        if isinstance(sub.rule, DefeasibleRule)
        and sub.rule.id in names
        and complement(a.conclusion, names[sub.rule.id])
    ]
    return tuple(sorted(hits, key=lambda s: s.ordinal))


def rebuts_unrestricted(a: Argument, b: Argument) -> tuple[Argument, ...]:
    """Defeasible sub-arguments of ``b`` whose conclusion is the complement
    of ``a``'s conclusion.

    The attacked sub-argument's *own* top rule may be strict: it only needs
    some defeasible rule in its tree.  Strict arguments are never rebutted.
    """
    hits = [
        sub
        for sub in b.sub_arguments
        if sub.def_rule_ids and complement(a.conclusion, sub.conclusion)
    ]
    return tuple(sorted(hits, key=lambda s: s.ordinal))


@dataclass(frozen=True)
class AttackWitness:
    """One attack occurrence: attacker, target, kind, and the sub-argument
    of the target it lands on."""

    attacker: str
    target: str
    kind: str  # "undercut" | "rebut"
    on: str


def attack_witnesses(store: ArgumentStore) -> list[AttackWitness]:
    """All undercut and rebuttal occurrences between stored arguments,
    ordered deterministically.  Several witnesses may share an
    (attacker, target) pair; the attack edge counts once."""
    out: list[AttackWitness] = []
    for a in store.arguments:
        for b in store.arguments:
            for sub in undercuts(a, b, store.system):
                out.append(AttackWitness(a.canonical_id, b.canonical_id, "undercut", sub.canonical_id))
            for sub in rebuts_unrestricted(a, b):
                out.append(AttackWitness(a.canonical_id, b.canonical_id, "rebut", sub.canonical_id))
    return out


def _attack_edges(store: ArgumentStore) -> frozenset[tuple[NodeId, NodeId]]:
    return frozenset(
        (base(w.attacker), base(w.target)) for w in attack_witnesses(store)
    )


def build_aspic_minus_af(
    system: ArgumentationSystem,
    limits: EnumerationLimits = EnumerationLimits(),
    store: ArgumentStore | None = None,
) -> AF:
    """The AF whose nodes are all arguments of ``system`` and whose edges
    are exactly the undercut and unrestricted-rebuttal pairs."""
    if store is None:
        store = construct_arguments(system, limits)
    nodes = frozenset(base(arg.canonical_id) for arg in store.arguments)
    return AF(nodes, _attack_edges(store))


def support_pairs(store: ArgumentStore) -> frozenset[tuple[frozenset[NodeId], NodeId]]:
    """One support per strict-top argument: its set of immediate
    sub-arguments (possibly empty) supports it."""
    return frozenset(
        (frozenset(base(s.canonical_id) for s in arg.subs), base(arg.canonical_id))
        for arg in store.arguments
        if arg.top_rule_strict
    )


def build_da_jsbaf(
    system: ArgumentationSystem,
    limits: EnumerationLimits = EnumerationLimits(),
    store: ArgumentStore | None = None,
) -> JSBAF:
    """Same nodes and attacks as ``build_aspic_minus_af``, plus the joint
    support of every strict-top argument by its immediate sub-arguments."""
    if store is None:
        store = construct_arguments(system, limits)
    nodes = frozenset(base(arg.canonical_id) for arg in store.arguments)
    return JSBAF(nodes, _attack_edges(store), support_pairs(store))


def strict_argument_nodes(store: ArgumentStore) -> frozenset[NodeId]:
    """Nodes of the arguments with no defeasible rule anywhere in their
    tree.  Nothing can attack them, so the flattening shields them from
    contrapositive support arms (see ``flatten_one_step``); that keeps the
    projected extensions deductive for every support, including the
    empty-source supports of axiom arguments."""
    return frozenset(
        base(arg.canonical_id) for arg in store.arguments if not arg.defeasible
    )
