"""Framework tiers and the flattening pipeline.

Three tiers are connected by flattening:

* ``JSBAF``         — attacks plus a joint support relation (sets of nodes
                      supporting a node),
* ``HigherLevelAF`` — joint attacks (sets of nodes attacking a node),
* ``AF``            — a plain directed attack graph.

``flatten_one_step`` turns joint supports into joint attacks by introducing
one "bar" meta-argument per supported node; ``flatten_joint_attacks`` turns
joint attacks into plain attacks by introducing bars for every participant
and one "e" meta-argument per attacker set.  ``flatten_simplified`` composes
the two and then removes bar pairs that merely relay the supported node's
status through a double negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union


@dataclass(frozen=True)
class BaseNode:
    """An original argument, identified by its label."""

    label_text: str

    def key(self):
        return (0, self.label_text)

    @property
    def label(self) -> str:
        return self.label_text

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class BarNode:
    """Meta-argument standing for the rejection of ``base``.

    Generated during flattening, never parsed from user input.  Bars nest:
    the bar of a bar arises when a bar participates in a joint attack.
    """

    base: "NodeId"

    def key(self):
        return (1, self.base.key())

    @property
    def label(self) -> str:
        return f"bar({self.base.label})"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ENode:
    """Meta-argument carrying a joint attack; identified by the attacker set
    alone, so two joint attacks with the same source share one e-node."""

    members: tuple["NodeId", ...]

    def key(self):
        return (2, tuple(m.key() for m in self.members))

    @property
    def label(self) -> str:
        return "e(" + ",".join(m.label for m in self.members) + ")"

    def __str__(self) -> str:
        return self.label


NodeId = Union[BaseNode, BarNode, ENode]


def base(label: str) -> BaseNode:
    return BaseNode(label)


def bar(node: NodeId) -> BarNode:
    return BarNode(node)


def e_node(members: Iterable[NodeId]) -> ENode:
    return ENode(tuple(sorted(set(members), key=lambda n: n.key())))


def is_meta(node: NodeId) -> bool:
    return not isinstance(node, BaseNode)


def sort_nodes(nodes: Iterable[NodeId]) -> list[NodeId]:
    return sorted(nodes, key=lambda n: n.key())


def _check_endpoints(nodes: frozenset, pairs, what: str):
    for src, dst in pairs:
        if src not in nodes or dst not in nodes:
            raise ValueError(f"{what} ({src}, {dst}) has an endpoint outside the node set")


@dataclass(frozen=True)
class AF:
    """A plain argumentation framework: nodes and a directed attack relation."""

    nodes: frozenset[NodeId]
    attacks: frozenset[tuple[NodeId, NodeId]]

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        _check_endpoints(self.nodes, self.attacks, "attack")

    @cached_property
    def attackers(self) -> dict[NodeId, frozenset[NodeId]]:
        out: dict[NodeId, set[NodeId]] = {n: set() for n in self.nodes}
        for src, dst in self.attacks:
            out[dst].add(src)
        return {n: frozenset(s) for n, s in out.items()}

    @cached_property
    def targets(self) -> dict[NodeId, frozenset[NodeId]]:
        out: dict[NodeId, set[NodeId]] = {n: set() for n in self.nodes}
        for src, dst in self.attacks:
            out[src].add(dst)
        return {n: frozenset(s) for n, s in out.items()}


@dataclass(frozen=True)
class HigherLevelAF:
    """Nodes and a joint attack relation from nonempty node sets to nodes."""

    nodes: frozenset[NodeId]
    joint_attacks: frozenset[tuple[frozenset[NodeId], NodeId]]

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(
            self, "joint_attacks", frozenset((frozenset(x), b) for x, b in self.joint_attacks)
        )
        for attackers, target in self.joint_attacks:
            if not attackers:
                raise ValueError("joint attacks must have a nonempty attacker set")
            if not attackers <= self.nodes or target not in self.nodes:
                raise ValueError("joint attack has an endpoint outside the node set")


@dataclass(frozen=True)
class JSBAF:
    """An attack relation plus a joint support relation.

    Support sources range over *all* subsets of the nodes, including the
    empty set; an empty-source support just asserts its target outright.
    """

    nodes: frozenset[NodeId]
    attacks: frozenset[tuple[NodeId, NodeId]]
    supports: frozenset[tuple[frozenset[NodeId], NodeId]]

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        object.__setattr__(
            self, "supports", frozenset((frozenset(x), b) for x, b in self.supports)
        )
        _check_endpoints(self.nodes, self.attacks, "attack")
        for source, target in self.supports:
            if not source <= self.nodes or target not in self.nodes:
                raise ValueError("support has an endpoint outside the node set")


def flatten_one_step(j: JSBAF, shielded: frozenset[NodeId] = frozenset()) -> HigherLevelAF:
    """Replace joint supports by joint attacks through bar meta-arguments.

    For every support (X, b): a fresh node bar(b) attacked by b, and, for
    each supporter a in X, the joint attack (X minus {a}) plus {bar(b)}
    against a.  Existing attacks become singleton joint attacks.

    ``shielded`` names nodes that can never be rejected (strict arguments,
    in the structured pipeline); the per-supporter attack against such a
    node is omitted, since its contrapositive reading "reject this
    supporter" is not an option for them.  Flattening a plain framework
    leaves the set empty.
    """
    supported = {b for _, b in j.supports}
    nodes = set(j.nodes) | {bar(b) for b in supported}
    joint: set[tuple[frozenset[NodeId], NodeId]] = set()
    for src, dst in j.attacks:
        joint.add((frozenset({src}), dst))
    for source, target in j.supports:
        joint.add((frozenset({target}), bar(target)))
        for a in source:
            if a not in shielded:
                joint.add(((source - {a}) | {bar(target)}, a))
    return HigherLevelAF(frozenset(nodes), frozenset(joint))


def flatten_joint_attacks(h: HigherLevelAF) -> AF:
    """Replace joint attacks by plain attacks through bar and e meta-arguments.

    A singleton joint attack becomes a direct edge.  A joint attack (X, b)
    with |X| > 1 is carried by e(X) -> b, with a -> bar(a) -> e(X) for every
    participant a in X; e(X) is shared by all joint attacks from the same X.
    """
    nodes = set(h.nodes)
    attacks: set[tuple[NodeId, NodeId]] = set()
    for attackers, target in h.joint_attacks:
        if len(attackers) == 1:
            (a,) = attackers
            attacks.add((a, target))
        else:
            carrier = e_node(attackers)
            nodes.add(carrier)
            attacks.add((carrier, target))
            for a in attackers:
                nodes.add(bar(a))
                attacks.add((a, bar(a)))
                attacks.add((bar(a), carrier))
    return AF(frozenset(nodes), frozenset(attacks))


def flatten_simplified(j: JSBAF, shielded: frozenset[NodeId] = frozenset()) -> AF:
    """Two-step flattening with the redundant double-negation bars removed.

    For a node b supported by a set of size > 1, the two-step flattening
    chains b -> bar(b) -> bar(bar(b)), and bar(bar(b)) tracks b's status
    exactly.  So bar(bar(b)) is dropped and its outgoing attacks re-sourced
    to b.  bar(b) itself is dropped only when relaying that chain was its
    sole role; it is kept whenever it also attacks directly (b has a
    singleton support) or feeds other e-nodes (b co-supports another node),
    since removing it there would change the projected extensions.

    E-node identities are then re-canonicalised over the surviving nodes:
    a member bar(b) whose bar was removed is displayed as b.  If two
    distinct e-nodes would collapse under that renaming (possible only in
    handcrafted frameworks with mutual supports), both keep their original
    identity.
    """
    flat = flatten_joint_attacks(flatten_one_step(j, shielded))
    multi_supported = sort_nodes({b for src, b in j.supports if len(src) > 1})

    removed: set[NodeId] = set()
    rewired: set[tuple[NodeId, NodeId]] = set()
    for b in multi_supported:
        b_bar = bar(b)
        b_dbar = bar(b_bar)
        for dst in flat.targets.get(b_dbar, ()):
            rewired.add((b, dst))
        removed.add(b_dbar)
        if flat.targets[b_bar] <= {b_dbar}:
            removed.add(b_bar)

    nodes = flat.nodes - removed
    attacks = {
        (src, dst)
        for src, dst in flat.attacks
        if src not in removed and dst not in removed
    }
    attacks |= {(src, dst) for src, dst in rewired if dst not in removed}

    rename = {bar(b): b for b in multi_supported if bar(b) in removed}
    relabelled: dict[ENode, ENode] = {}
    for node in nodes:
        if isinstance(node, ENode) and any(m in rename for m in node.members):
            relabelled[node] = e_node(rename.get(m, m) for m in node.members)
    counts: dict[ENode, int] = {}
    for new in relabelled.values():
        counts[new] = counts.get(new, 0) + 1
    mapping = {old: new for old, new in relabelled.items() if counts[new] == 1}

    def final(node: NodeId) -> NodeId:
        return mapping.get(node, node)

    return AF(
        frozenset(final(n) for n in nodes),
        frozenset((final(s), final(d)) for s, d in attacks),
    )


def prune_inert(af: AF) -> AF:
    """Drop meta-arguments with no outgoing attacks, to a fixpoint.

    Such nodes (typically bars introduced for empty-source supports) cannot
    join or influence any admissible set, so every semantics yields the same
    extension sets before and after pruning.
    """
    nodes = set(af.nodes)
    attacks = set(af.attacks)
    while True:
        out_degree = {n: 0 for n in nodes}
        for src, _ in attacks:
            out_degree[src] += 1
        inert = {n for n in nodes if is_meta(n) and out_degree[n] == 0}
        if not inert:
            return AF(frozenset(nodes), frozenset(attacks))
        nodes -= inert
        attacks = {(s, d) for s, d in attacks if s not in inert and d not in inert}


def project(extension: Iterable[NodeId], original_nodes: Iterable[NodeId]) -> frozenset[NodeId]:
    """Restrict an extension of a flattened framework to the original nodes,
    discarding every meta-argument."""
    return frozenset(extension) & frozenset(original_nodes)
