"""Extension engine: textbook cases, worked frameworks, oracle agreement."""

import pytest

from jsbaf import (
    AF,
    SEMANTICS,
    SearchLimitExceededError,
    base,
    brute_force_extensions,
    build_aspic_minus_af,
    build_da_jsbaf,
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
from conftest import labelled_extensions, node_labels, random_af


def chain(*labels):
    """a -> b -> c ... attack chain."""
    nodes = [base(l) for l in labels]
    return AF(frozenset(nodes), frozenset(zip(nodes, nodes[1:])))


def two_cycle():
    a, b = base("a"), base("b")
    return AF(frozenset({a, b}), frozenset({(a, b), (b, a)}))


@pytest.fixture
def tandem_flat(tandem_system):
    return flattened_af(build_da_jsbaf(tandem_system), "prune-inert")


E1 = ["A1", "A2", "A3", "A4", "A5", "A9", "bar(A6)", "e(A4,A8)", "e(A5,A7)"]
E2 = ["A1", "A2", "A3", "A4", "A6", "A8", "bar(A5)", "e(A4,A9)", "e(A6,A7)"]
E3 = ["A1", "A2", "A3", "A5", "A6", "A7", "bar(A4)", "e(A5,A9)", "e(A6,A8)"]


class TestConflictFreeAndDefence:
    def test_internal_attack(self):
        af = chain("a", "b")
        assert not is_conflict_free(af, {base("a"), base("b")})

    def test_empty_set_is_conflict_free(self):
        assert is_conflict_free(chain("a", "b"), set())

    def test_preferred_extension_of_the_flattened_tandem(self, tandem_flat):
        assert is_conflict_free(tandem_flat, _nodes(E1))

    def test_reinstatement(self):
        af = chain("a", "b", "c")
        assert defends(af, {base("a")}, base("c"))

    def test_empty_set_defends_nothing_attacked(self):
        assert not defends(chain("a", "b"), set(), base("b"))

    def test_e_node_defended_inside_extension(self, tandem_flat):
        members = _nodes(E1)
        target = next(n for n in members if n.label == "e(A5,A7)")
        assert defends(tandem_flat, members, target)


def _nodes(labels):
    """Rebuild NodeIds from their printed labels (tandem vocabulary only)."""
    from jsbaf import bar, e_node

    out = []
    for text in labels:
        if text.startswith("bar("):
            out.append(bar(base(text[4:-1])))
        elif text.startswith("e("):
            out.append(e_node(base(m) for m in text[2:-1].split(",")))
        else:
            out.append(base(text))
    return frozenset(out)


class TestGrounded:
    def test_chain_reinstates(self):
        assert node_labels(grounded_extension(chain("a", "b", "c"))) == ["a", "c"]

    def test_two_cycle_grounds_to_nothing(self):
        assert grounded_extension(two_cycle()) == frozenset()

    def test_tandem_attack_framework(self, tandem_system):
        af = build_aspic_minus_af(tandem_system)
        got = grounded_extension(af)
        assert node_labels(got) == ["A1", "A2", "A3"]
        assert [got] == brute_force_extensions(af, "grounded")


class TestComplete:
    def test_two_cycle(self):
        assert labelled_extensions(complete_extensions(two_cycle())) == [[], ["a"], ["b"]]

    def test_empty_framework(self):
        assert complete_extensions(AF(frozenset(), frozenset())) == [frozenset()]

    def test_chain_has_a_single_complete_extension(self):
        af = chain("a", "b", "c")
        got = complete_extensions(af)
        assert labelled_extensions(got) == [["a", "c"]]
        assert got == brute_force_extensions(af, "complete")


class TestStable:
    def test_odd_cycle_has_no_stable_extension(self):
        a, b, c = base("a"), base("b"), base("c")
        af = AF(frozenset({a, b, c}), frozenset({(a, b), (b, c), (c, a)}))
        assert stable_extensions(af) == []

    def test_two_cycle(self):
        assert labelled_extensions(stable_extensions(two_cycle())) == [["a"], ["b"]]

    def test_flattened_tandem(self, tandem_flat):
        assert labelled_extensions(stable_extensions(tandem_flat)) == [E1, E2, E3]


class TestPreferred:
    def test_flattened_tandem(self, tandem_flat):
        assert labelled_extensions(preferred_extensions(tandem_flat)) == [E1, E2, E3]

    def test_two_cycle(self):
        assert labelled_extensions(preferred_extensions(two_cycle())) == [["a"], ["b"]]

    def test_tandem_attack_framework_accepts_all_defeasibles(self, tandem_system):
        af = build_aspic_minus_af(tandem_system)
        got = preferred_extensions(af)
        assert ["A1", "A2", "A3", "A4", "A5", "A6"] in labelled_extensions(got)
        assert got == brute_force_extensions(af, "preferred")


class TestSearchLimit:
    def test_node_bound_is_enforced(self):
        af = random_af(5, 12, 0.2)
        with pytest.raises(SearchLimitExceededError):
            complete_extensions(af, max_nodes=3)
        with pytest.raises(SearchLimitExceededError):
            extensions(af, "grounded", max_nodes=3)

    def test_unknown_semantics_rejected(self):
        with pytest.raises(ValueError):
            extensions(AF(frozenset(), frozenset()), "semi-stable")


class TestJsbafExtensions:
    def test_tandem_preferred_projections(self, tandem_system):
        j = build_da_jsbaf(tandem_system)
        assert labelled_extensions(jsbaf_extensions(j, "preferred")) == [
            ["A1", "A2", "A3", "A4", "A5", "A9"],
            ["A1", "A2", "A3", "A4", "A6", "A8"],
            ["A1", "A2", "A3", "A5", "A6", "A7"],
        ]

    def test_supported_node_joins_its_supporter(self, j2):
        assert labelled_extensions(jsbaf_extensions(j2, "grounded")) == [["a", "b"]]

    def test_attacked_support_target_drags_its_supporters(self, j1):
        # by hand: d is unattacked; c falls to d; a and b fall to the e-nodes,
        # which stay undecided because the co-supporter bars are undecided
        assert labelled_extensions(jsbaf_extensions(j1, "grounded")) == [["d"]]

    def test_flatten_modes_agree_on_extensions(self, tandem_system):
        j = build_da_jsbaf(tandem_system)
        for sem in SEMANTICS:
            assert jsbaf_extensions(j, sem, "literal") == jsbaf_extensions(
                j, sem, "prune-inert"
            )


class TestJsbafProperties:
    def test_deductiveness_violation_is_witnessed(self, j2):
        ok, witness = is_deductive_extension(j2, {base("a")})
        assert not ok
        assert witness == (frozenset({base("a")}), base("b"))

    def test_deductiveness_holds_with_target(self, j2):
        assert is_deductive_extension(j2, {base("a"), base("b")}) == (True, None)

    def test_tandem_preferred_projection_is_deductive(self, tandem_system):
        j = build_da_jsbaf(tandem_system)
        ext = _nodes(["A1", "A2", "A3", "A9", "A4", "A5"])
        assert is_deductive_extension(j, ext) == (True, None)

    def test_conflict_free_check_mirrors_attacks(self, j1):
        ok, witness = is_conflict_free_jsbaf(j1, {base("d"), base("c")})
        assert not ok and witness == (base("d"), base("c"))
        assert is_conflict_free_jsbaf(j1, {base("a"), base("b")}) == (True, None)
        assert is_conflict_free_jsbaf(j1, set()) == (True, None)


class TestOracleAgreementAndInclusions:
    @pytest.mark.parametrize("seed", range(120))
    def test_engine_matches_brute_force(self, seed):
        af = random_af(seed, 8, 0.25)
        for sem in SEMANTICS:
            assert extensions(af, sem) == brute_force_extensions(af, sem), sem

    @pytest.mark.parametrize("seed", range(40))
    def test_semantics_inclusions(self, seed):
        af = random_af(1000 + seed, 9, 0.25)
        complete = complete_extensions(af)
        grounded = grounded_extension(af)
        preferred = preferred_extensions(af)
        stable = stable_extensions(af)
        assert all(grounded <= ext for ext in complete)
        assert grounded in complete
        assert set(preferred) <= set(complete)
        assert set(stable) <= set(preferred)
