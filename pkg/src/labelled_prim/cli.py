"""Command-line entry point.

Exit status: 0 success, 1 assumption violated (or an oracle divergence),
2 input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .family import (
    DEFAULT_MAX_FAMILY_SIZE,
    AssumptionViolated,
    FamilyTooLarge,
    SpaceUnverified,
    generate_family,
    make_space,
    verify_space,
)
from .graph import InputError, UltimatelyPeriodicWord, load_graph, validate_graph
from .lattice import enumerate_hs, quotient
from .oracle import check_oracle
from .serialize import (
    closed_sets_json,
    dumps,
    family_json,
    lattice_dot,
    lattice_json,
    quotient_json,
    report_json,
    specialization_dot,
    tail_json,
    validation_json,
    verdict_json,
)
from .tails import NotRealizable, tail_from_word
from .topology import closed_sets, specialization_order, tail_space, verify_homeomorphism, verify_kuratowski

EXIT_OK, EXIT_ASSUMPTION, EXIT_INPUT = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="labelled-prim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_graph(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="graph JSON file")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        sp.add_argument("--max-family-size", type=int, default=DEFAULT_MAX_FAMILY_SIZE)
        sp.add_argument("--allow-unverified", action="store_true")
        return sp

    with_graph("validate", "graph checks and the labelled-space report")
    with_graph("family", "the generated family B as a list of vertex lists")
    with_graph("ideals", "lattice of hereditary saturated families")
    with_graph("tails", "maximal tails")
    prim = with_graph("prim", "topology on the maximal tails")
    prim.add_argument("--dot", action="store_true", help="emit the specialization order as DOT")
    q = with_graph("quotient", "quotient of B by a hereditary saturated family")
    q.add_argument("--ideal", type=int, help="lattice id (default: every member)")
    tw = with_graph("tail-from-word", "grow and verify a tail from a set and an infinite word")
    tw.add_argument("--set", required=True, help="comma-separated vertex ids")
    tw.add_argument("--prefix", default="", help="letters before the cycle")
    tw.add_argument("--cycle", required=True, help="repeated letters")

    co = sub.add_parser("check-oracle", help="compare against brute force on a random corpus")
    co.add_argument("--seed", type=int, default=0)
    co.add_argument("--instances", type=int, default=200)
    co.add_argument("-o", "--output")
    return p


def _letters(g, text: str) -> tuple[str, ...]:
    """Comma-separated labels; a token that is not a label but spells labels
    character by character is split (``bc`` -> ``b, c``)."""
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if tok in g.alphabet:
            out.append(tok)
        elif all(ch in g.alphabet for ch in tok):
            out.extend(tok)
        else:
            raise InputError(f"letter {tok!r} not in alphabet {list(g.alphabet)}")
    return tuple(out)


def _space(args, g):
    return make_space(g, allow_unverified=args.allow_unverified, max_family_size=args.max_family_size)


def _execute(args) -> tuple[int, str]:
    if args.command == "check-oracle":
        res = check_oracle(args.seed, args.instances)
        body = {
            "seed": res.seed,
            "instances": res.instances,
            "compared": res.compared,
            "passed": res.passed,
            "divergence": res.divergence,
        }
        return (EXIT_OK if res.passed else EXIT_ASSUMPTION), dumps(body)

    g = load_graph(args.graph)

    if args.command == "validate":
        F = generate_family(g, args.max_family_size)
        report = verify_space(g, F)
        body = {
            "graph": validation_json(validate_graph(g)),
            "family_size": len(F),
            "space": report_json(report),
        }
        status = EXIT_OK if report.ok or args.allow_unverified else EXIT_ASSUMPTION
        return status, dumps(body)

    if args.command == "family":
        return EXIT_OK, dumps(family_json(g, generate_family(g, args.max_family_size)))

    space = _space(args, g)

    if args.command == "ideals":
        lattice = enumerate_hs(space)
        body = lattice_json(lattice)
        body["dot"] = lattice_dot(lattice)
        return EXIT_OK, dumps(body)

    if args.command == "tails":
        chi = tail_space(space)
        return EXIT_OK, dumps([tail_json(g, t, i) for i, t in enumerate(chi.tails)])

    if args.command == "prim":
        chi = tail_space(space)
        if args.dot:
            return EXIT_OK, specialization_dot(chi)
        order = specialization_order(chi)
        body = {
            "tails": [tail_json(g, t, i) for i, t in enumerate(chi.tails)],
            "closed_sets": closed_sets_json(closed_sets(chi)),
            "specialization_edges": [list(e) for e in order.edges if e[0] != e[1]],
            "is_t0": order.is_t0,
            "kuratowski_verified": verify_kuratowski(chi).passed,
            "homeomorphism_verified": verify_homeomorphism(chi).passed,
        }
        return EXIT_OK, dumps(body)

    if args.command == "quotient":
        lattice = enumerate_hs(space)
        ids = range(len(lattice.members)) if args.ideal is None else [args.ideal]
        body = []
        for i in ids:
            if not 0 <= i < len(lattice.members):
                raise InputError(f"no lattice member with id {i}")
            entry = {"ideal": i}
            entry.update(quotient_json(g, quotient(space, lattice.members[i])))
            body.append(entry)
        return EXIT_OK, dumps(body)

    if args.command == "tail-from-word":
        space.require_verified()
        A = g.vset(filter(None, (v.strip() for v in args.set.split(","))))
        word = UltimatelyPeriodicWord(_letters(g, args.prefix), _letters(g, args.cycle))
        tail, log = tail_from_word(space, A, word)
        chi = tail_space(space)
        match = next((i for i, t in enumerate(chi.tails) if t.sets == tail.sets), None)
        body = {
            "start": g.names(A),
            "word": {"prefix": list(word.prefix), "cycle": list(word.cycle)},
            "initial": family_json(g, log["initial"]),
            "rounds": [family_json(g, r) for r in log["rounds"]],
            "tail": tail_json(g, tail),
            "complement": {
                "hereditary": verdict_json(g, log["complement_hereditary"]),
                "saturated": verdict_json(g, log["complement_saturated"]),
            },
            "matches_tail_id": match,
        }
        return EXIT_OK, dumps(body)

    raise AssertionError(args.command)


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        status, text = _execute(args)
    except (InputError, NotRealizable, FamilyTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssumptionViolated, SpaceUnverified) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ASSUMPTION
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
