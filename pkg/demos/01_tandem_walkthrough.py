#!/usr/bin/env python3
"""Walk the tandem scenario through the whole pipeline.

Three riders each want a seat on a two-seat tandem.  Wanting a seat
defeasibly yields getting one, and strict rules encode that any two riders
exclude the third.  Classic unrestricted rebuttal then lets every pair of
riders argue the third off the tandem.

The walkthrough shows why the plain attack framework accepts the impossible
"all three ride" outcome under preferred semantics, and how tracking the
joint support carried by strict rule applications removes it.
"""

from pathlib import Path

from jsbaf import (
    build_aspic_minus_af,
    build_da_jsbaf,
    compare_modes,
    conclusion_sets,
    construct_arguments,
    evaluate_postulates,
    extensions,
    flattened_af,
    parse_system,
    strict_argument_nodes,
)

RULES = Path(__file__).with_name("tandem.rules")


def show_extensions(title, exts):
    print(f"\n{title}")
    for ext in exts:
        print("   {" + ", ".join(sorted(n.label for n in ext)) + "}")


def main():
    system = parse_system(RULES.read_text())
    store = construct_arguments(system)

    print("Arguments on the basis of the tandem system:")
    for arg in store.arguments:
        kind = "defeasible" if arg.defeasible else "strict"
        print(f"   {arg.form:<22} ({kind})")

    af = build_aspic_minus_af(system, store=store)
    print(f"\nAttack framework: {len(af.nodes)} arguments, {len(af.attacks)} attacks")
    print("Every ~x argument trades blows with the rides it excludes.")

    show_extensions("Preferred extensions, attacks only:", extensions(af, "preferred"))
    print("The first one accepts A4, A5 and A6 together: everyone rides.")
    for cs in conclusion_sets(system, "preferred", "aspic-minus"):
        report = evaluate_postulates(system, cs.formulas)
        conclusions = "{" + ", ".join(sorted(map(str, cs.formulas))) + "}"
        verdict = "closed" if report.closure.satisfied else "NOT closed under the strict rules"
        print(f"   {conclusions:<42} {verdict}")

    j = build_da_jsbaf(system, store=store)
    print(f"\nWith joint support tracked: {len(j.supports)} supports, e.g.")
    for src, dst in sorted(j.supports, key=lambda p: p[1].key()):
        names = ",".join(sorted(n.label for n in src)) or "(none)"
        print(f"   {{{names}}} => {dst.label}")

    flat = flattened_af(j, "prune-inert", shielded=strict_argument_nodes(store))
    print(f"\nFlattened to a plain framework: {len(flat.nodes)} nodes, {len(flat.attacks)} attacks")
    show_extensions(
        "Preferred extensions after flattening, projected onto the arguments:",
        [ext for ext in extensions(flat, "preferred")],
    )

    print("\nConclusion sets with deductive joint support (preferred):")
    for cs in conclusion_sets(system, "preferred", "deductive"):
        report = evaluate_postulates(system, cs.formulas)
        conclusions = "{" + ", ".join(sorted(map(str, cs.formulas))) + "}"
        assert report.all_satisfied
        print(f"   {conclusions:<42} all postulates satisfied")

    comparison = compare_modes(system, "preferred")
    print("\nPostulates that differ between the modes:", ", ".join(comparison.differing))


if __name__ == "__main__":
    main()
