"""Extension computation for AFs and, through flattening, for JSBAFs.

The engine enumerates complete labellings (in / out / undecided) with unit
propagation and branch-and-prune, then derives the four admissibility-based
semantics from them:

* grounded  — least fixpoint of the characteristic function (computed
              directly, no search needed),
* complete  — in-sets of all complete labellings,
* stable    — complete extensions that attack every outside node,
* preferred — subset-maximal complete extensions.

A node-count bound guards the exponential searches; ``oracle.py`` provides
the independent brute-force cross-check used by the test suite.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import SearchLimitExceededError
from .frameworks import AF, JSBAF, NodeId, flatten_simplified, project, prune_inert, sort_nodes

SEMANTICS = ("grounded", "complete", "stable", "preferred")
FLATTEN_MODES = ("literal", "prune-inert")
DEFAULT_NODE_BOUND = 24

_UNKNOWN, _IN, _OUT, _UNDEC = 0, 1, 2, 3


def is_conflict_free(af: AF, s: Iterable[NodeId]) -> bool:
    """True iff no member of ``s`` attacks another member (or itself)."""
    members = frozenset(s)
    return not any(src in members and dst in members for src, dst in af.attacks)


def defends(af: AF, s: Iterable[NodeId], a: NodeId) -> bool:
    """True iff every attacker of ``a`` is attacked by some member of ``s``."""
    members = frozenset(s)
    attacked = set()
    for m in members:
        attacked |= af.targets[m]
    return af.attackers[a] <= attacked


def grounded_extension(af: AF) -> frozenset[NodeId]:
    """Least fixpoint of S -> {nodes defended by S}, starting from the
    unattacked nodes."""
    current: frozenset[NodeId] = frozenset()
    while True:
        attacked = set()
        for m in current:
            attacked |= af.targets[m]
        nxt = frozenset(x for x in af.nodes if af.attackers[x] <= attacked)
        if nxt == current:
            return current
        current = nxt


class _LabellingSearch:
    """Enumerates all complete labellings of a finite AF.

    Branches over unknown nodes in canonical order, trying in, out,
    undecided; propagation assigns forced labels and prunes contradictory
    branches.  Every full assignment is re-verified against the labelling
    conditions, so propagation only needs to be sound, not complete.
    """

    def __init__(self, af: AF):
        self.order = sort_nodes(af.nodes)
        index = {n: i for i, n in enumerate(self.order)}
        self.n = len(self.order)
        self.attackers = [sorted(index[a] for a in af.attackers[n]) for n in self.order]
        self.targets = [sorted(index[t] for t in af.targets[n]) for n in self.order]

    def run(self) -> list[frozenset[NodeId]]:
        results: list[tuple[int, ...]] = []
        self._search([_UNKNOWN] * self.n, set(range(self.n)), results)
        extensions = [
            frozenset(self.order[i] for i in range(self.n) if labels[i] == _IN)
            for labels in results
        ]
        return canonical_extension_order(extensions)

    def _search(self, labels: list[int], dirty: set[int], results: list):
        if not self._propagate(labels, dirty):
            return
        try:
            pivot = labels.index(_UNKNOWN)
        except ValueError:
            if self._verify(labels):
                results.append(tuple(labels))
            return
        for value in (_IN, _OUT, _UNDEC):
            branch = labels.copy()
            branch[pivot] = value
            self._search(branch, {pivot, *self.targets[pivot]}, results)

    def _propagate(self, labels: list[int], dirty: set[int]) -> bool:
        """Apply forced assignments until quiescent; False on contradiction."""

        def assign(x: int, value: int) -> bool:
            if labels[x] == value:
                return True
            if labels[x] != _UNKNOWN:
                return False
            labels[x] = value
            dirty.add(x)
            dirty.update(self.targets[x])
            return True

        while dirty:
            y = dirty.pop()
            n_in = n_out = n_undec = 0
            unknown = -1
            n_unknown = 0
            for a in self.attackers[y]:
                la = labels[a]
                if la == _IN:
                    n_in += 1
                elif la == _OUT:
                    n_out += 1
                elif la == _UNDEC:
                    n_undec += 1
                else:
                    n_unknown += 1
                    unknown = a
            if n_in > 0 and not assign(y, _OUT):
                return False
            if n_in == 0 and n_undec == 0 and n_unknown == 0 and not assign(y, _IN):
                return False
            ly = labels[y]
            if ly == _IN:
                for a in self.attackers[y]:
                    if not assign(a, _OUT):
                        return False
            elif ly == _OUT:
                if n_in == 0:
                    if n_unknown == 0:
                        return False
                    if n_unknown == 1 and not assign(unknown, _IN):
                        return False
            elif ly == _UNDEC:
                if n_undec == 0:
                    if n_unknown == 0:
                        return False
                    if n_unknown == 1 and not assign(unknown, _UNDEC):
                        return False
        return True

    def _verify(self, labels: list[int]) -> bool:
        for y in range(self.n):
            atk = [labels[a] for a in self.attackers[y]]
            ly = labels[y]
            if ly == _IN and not all(la == _OUT for la in atk):
                return False
            if ly == _OUT and not any(la == _IN for la in atk):
                return False
            if ly == _UNDEC and (any(la == _IN for la in atk) or _UNDEC not in atk):
                return False
        return True


def canonical_extension_order(extensions: Iterable[frozenset[NodeId]]) -> list[frozenset[NodeId]]:
    """Deterministic ordering of a collection of extensions."""
    return sorted(
        set(extensions), key=lambda ext: tuple(n.key() for n in sort_nodes(ext))
    )


def _check_bound(af: AF, max_nodes: int):
    if len(af.nodes) > max_nodes:
        raise SearchLimitExceededError(len(af.nodes), max_nodes)


def complete_extensions(af: AF, max_nodes: int = DEFAULT_NODE_BOUND) -> list[frozenset[NodeId]]:
    """All admissible sets that contain exactly the nodes they defend."""
    _check_bound(af, max_nodes)
    return _LabellingSearch(af).run()


def stable_extensions(af: AF, max_nodes: int = DEFAULT_NODE_BOUND) -> list[frozenset[NodeId]]:
    """Complete extensions that attack every node outside themselves."""
    out = []
    for ext in complete_extensions(af, max_nodes):
        attacked = set()
        for m in ext:
            attacked |= af.targets[m]
        if af.nodes - ext <= attacked:
            out.append(ext)
    return out


def preferred_extensions(af: AF, max_nodes: int = DEFAULT_NODE_BOUND) -> list[frozenset[NodeId]]:
    """Subset-maximal complete extensions."""
    complete = complete_extensions(af, max_nodes)
    return canonical_extension_order(
        ext for ext in complete if not any(ext < other for other in complete)
    )


def extensions(af: AF, semantics: str, max_nodes: int = DEFAULT_NODE_BOUND) -> list[frozenset[NodeId]]:
    """Dispatch on the semantics name; grounded yields a one-element list."""
    if semantics == "grounded":
        _check_bound(af, max_nodes)
        return [grounded_extension(af)]
    if semantics == "complete":
        return complete_extensions(af, max_nodes)
    if semantics == "stable":
        return stable_extensions(af, max_nodes)
    if semantics == "preferred":
        return preferred_extensions(af, max_nodes)
    raise ValueError(f"unknown semantics {semantics!r}; expected one of {SEMANTICS}")


def flattened_af(
    j: JSBAF, flatten_mode: str = "literal", shielded: frozenset[NodeId] = frozenset()
) -> AF:
    """The simplified flattening of ``j``, optionally with inert
    meta-arguments pruned away."""
    if flatten_mode not in FLATTEN_MODES:
        raise ValueError(f"unknown flatten mode {flatten_mode!r}; expected one of {FLATTEN_MODES}")
    af = flatten_simplified(j, shielded)
    if flatten_mode == "prune-inert":
        af = prune_inert(af)
    return af


def jsbaf_extensions(
    j: JSBAF,
    semantics: str,
    flatten_mode: str = "literal",
    max_nodes: int = DEFAULT_NODE_BOUND,
    shielded: frozenset[NodeId] = frozenset(),
) -> list[frozenset[NodeId]]:
    """Extensions of a JSBAF: flatten, run the semantics, project each
    extension onto the original nodes, deduplicate."""
    af = flattened_af(j, flatten_mode, shielded)
    projected = [project(ext, j.nodes) for ext in extensions(af, semantics, max_nodes)]
    return canonical_extension_order(projected)


def is_deductive_extension(
    j: JSBAF, extension: Iterable[NodeId]
) -> tuple[bool, Optional[tuple[frozenset[NodeId], NodeId]]]:
    """Check that every support whose whole source lies inside the extension
    has its target inside as well; on failure, return the violating support."""
    members = frozenset(extension)
    for source, target in sorted(
        j.supports, key=lambda s: (tuple(n.key() for n in sort_nodes(s[0])), s[1].key())
    ):
        if source <= members and target not in members:
            return False, (source, target)
    return True, None


def is_conflict_free_jsbaf(
    j: JSBAF, extension: Iterable[NodeId]
) -> tuple[bool, Optional[tuple[NodeId, NodeId]]]:
    """Check that no attack holds inside the extension; on failure, return
    the violating attack."""
    members = frozenset(extension)
    for src, dst in sorted(j.attacks, key=lambda p: (p[0].key(), p[1].key())):
        if src in members and dst in members:
            return False, (src, dst)
    return True, None
