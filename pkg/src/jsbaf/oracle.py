"""Brute-force semantics oracle.

Checks every one of the 2^n subsets of a small AF directly against the
textbook definitions (conflict-freeness, defence, admissibility), with no
shared machinery with the labelling engine in ``semantics.py``.  Subsets are
bitmasks, so the oracle stays usable up to ~20 nodes; it exists to
cross-validate the engine, not to scale.
"""

from __future__ import annotations

from .frameworks import AF, NodeId, sort_nodes
from .semantics import SEMANTICS, canonical_extension_order

ORACLE_NODE_CAP = 20


def brute_force_extensions(af: AF, semantics: str) -> list[frozenset[NodeId]]:
    """All extensions under ``semantics``, by exhaustive subset enumeration."""
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    n = len(af.nodes)
    if n > ORACLE_NODE_CAP:
        raise ValueError(f"oracle is capped at {ORACLE_NODE_CAP} nodes, got {n}")
    order = sort_nodes(af.nodes)
    pos = {node: i for i, node in enumerate(order)}
    attack_mask = [0] * n
    attacker_mask = [0] * n
    for src, dst in af.attacks:
        attack_mask[pos[src]] |= 1 << pos[dst]
        attacker_mask[pos[dst]] |= 1 << pos[src]
    full = (1 << n) - 1

    admissible: list[int] = []
    complete: list[int] = []
    stable: list[int] = []
    for subset in range(1 << n):
        attacked = 0
        conflict = False
        for i in range(n):
            if subset >> i & 1:
                if attack_mask[i] & subset:
                    conflict = True
                    break
                attacked |= attack_mask[i]
        if conflict:
            continue
        defended = 0
        for i in range(n):
            if attacker_mask[i] & ~attacked == 0:
                defended |= 1 << i
        if subset & ~defended:
            continue
        admissible.append(subset)
        if defended == subset:
            complete.append(subset)
        if (full & ~subset) & ~attacked == 0:
            stable.append(subset)

    if semantics == "complete":
        chosen = complete
    elif semantics == "grounded":
        chosen = [s for s in complete if not any(o != s and o & s == o for o in complete)]
        assert len(chosen) == 1, "grounded extension must be unique"
    elif semantics == "preferred":
        chosen = [s for s in complete if not any(o != s and o & s == s for o in complete)]
    else:
        chosen = stable

    return canonical_extension_order(
        frozenset(order[i] for i in range(n) if s >> i & 1) for s in chosen
    )
