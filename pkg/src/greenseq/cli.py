"""Command-line interface.

All reports are canonical JSON (sorted keys, two-space indent) so that
identical inputs produce byte-identical output; Hasse diagrams can also
be emitted as DOT.  Exit codes: 0 success, 1 a verification check failed,
2 usage, parse, or gate errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraSpec
from .errors import GateError, InvariantViolation, SpecError, TheoremViolation, UsageError
from .green import DEFAULT_BRICK_GATE, GreenEngine
from .modcat import DEFAULT_SUBSET_GATE, ModuleCategory
from . import orders as orders_mod
from . import verify as verify_mod


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_algebra(path: str) -> AlgebraSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    return AlgebraSpec.from_dict(data)


def _context(args) -> tuple[ModuleCategory, GreenEngine]:
    spec = load_algebra(args.algebra)
    cat = ModuleCategory(spec, exact=args.exact)
    engine = GreenEngine(cat, brick_gate=args.brick_gate, workers=args.parallel)
    return cat, engine


def _summand_token(cat: ModuleCategory, summand) -> str:
    if summand.shifted:
        return cat.display(cat.projectives[summand.value]) + "[1]"
    return cat.display(summand.value)


def cmd_catalog(args) -> int:
    cat, _ = _context(args)
    modules = [{
        "id": m.ident,
        "descriptor": cat.descriptor_str(m.ident),
        "display": m.display,
        "dimvec": list(m.dimvec),
        "brick": cat.is_brick(m.ident),
        "projective": cat.is_projective(m.ident),
        "simple": cat.is_simple(m.ident),
    } for m in cat.indecomposables()]
    print(canonical_json({"algebra": cat.spec.to_dict(), "modules": modules}),
          end="")
    return 0


def cmd_bricks(args) -> int:
    cat, _ = _context(args)
    bricks = [{"id": b, "descriptor": cat.descriptor_str(b),
               "display": cat.display(b)} for b in cat.bricks]
    print(canonical_json({"algebra": cat.spec.to_dict(), "bricks": bricks,
                          "count": len(bricks)}), end="")
    return 0


def cmd_mgs(args) -> int:
    cat, engine = _context(args)
    seqs = [{"index": k, "ids": list(g.bricks),
             "bricks": [cat.display(b) for b in g.bricks],
             "descriptors": [cat.descriptor_str(b) for b in g.bricks],
             "length": len(g.bricks)}
            for k, g in enumerate(engine.enumerate_mgs())]
    print(canonical_json({"algebra": cat.spec.to_dict(), "count": len(seqs),
                          "sequences": seqs}), end="")
    return 0


def cmd_classes(args) -> int:
    cat, engine = _context(args)
    classes = engine.equivalence_classes()
    out = [{"index": i,
            "members": list(c.members),
            "representative": [cat.display(b) for b in c.representative.bricks],
            "brick_set": sorted(cat.display(b) for b in c.representative.bricks),
            "summand_key": [_summand_token(cat, s) for s in c.key],
            "summand_count": len(c.key)}
           for i, c in enumerate(classes)]
    print(canonical_json({"algebra": cat.spec.to_dict(), "count": len(out),
                          "classes": out}), end="")
    return 0


def cmd_poset(args) -> int:
    cat, engine = _context(args)
    poset = orders_mod.build_order(args.order, engine)
    if args.format == "dot":
        text = orders_mod.hasse_dot(poset, engine)
    else:
        classes = engine.equivalence_classes()
        text = canonical_json({
            "algebra": cat.spec.to_dict(),
            "order": poset.tag,
            "classes": [[_summand_token(cat, s) for s in c.key] for c in classes],
            "leq": [[bool(x) for x in row] for row in poset.leq],
            "covers": [[up, lo] for up, lo in poset.covers],
        })
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _resolve_mgs(cat: ModuleCategory, engine: GreenEngine, token: str):
    token = token.strip()
    if token.isdigit():
        all_mgs = engine.enumerate_mgs()
        k = int(token)
        if not 0 <= k < len(all_mgs):
            raise UsageError(
                f"green sequence index {k} out of range 0..{len(all_mgs) - 1}")
        return all_mgs[k]
    ids = tuple(cat.resolve_token(t) for t in token.split(",") if t.strip())
    reason = engine.explain_invalid(ids)
    if reason is not None:
        raise UsageError(f"brick list is not a maximal green sequence: {reason}")
    from .green import MGS

    return MGS(ids)


def cmd_hn(args) -> int:
    cat, engine = _context(args)
    g = _resolve_mgs(cat, engine, args.mgs)
    module = cat.resolve_module_expr(args.module)
    result = engine.hn_filtration(module, g)
    stable = engine.stable_factors(module, g)
    print(canonical_json({
        "algebra": cat.spec.to_dict(),
        "mgs": [cat.display(b) for b in g.bricks],
        "module": cat.display_sum(module),
        "layers": [{
            "position": layer.position,
            "brick": cat.display(layer.brick),
            "factor": cat.display_sum(layer.factor),
            "multiplicity": layer.multiplicity,
        } for layer in result.layers],
        "stable_factors": [[cat.display(b), m] for b, m in sorted(stable.items())],
    }), end="")
    return 0


def cmd_verify(args) -> int:
    cat, engine = _context(args)
    checks = verify_mod.run_suite(args.suite, cat, engine,
                                  subset_gate=args.subset_gate)
    passed = all(c.passed for c in checks)
    print(canonical_json({
        "algebra": cat.spec.to_dict(),
        "suite": args.suite,
        "checks": [c.to_dict() for c in checks],
        "passed": passed,
    }), end="")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenseq",
        description="Maximal green sequences of Nakayama and type-A path "
                    "algebras: catalogs, torsion lattices, equivalence "
                    "classes, partial orders, and verification suites.")
    parser.add_argument("--exact", action="store_true",
                        help="use exact rational elimination instead of the "
                             "default prime-field arithmetic")
    parser.add_argument("--brick-gate", type=int, default=DEFAULT_BRICK_GATE,
                        help="refuse enumeration beyond this many bricks")
    parser.add_argument("--subset-gate", type=int, default=DEFAULT_SUBSET_GATE,
                        help="refuse torsion-lattice enumeration beyond this "
                             "many subsets")
    parser.add_argument("--parallel", type=int, default=None, metavar="N",
                        help="fan enumeration out over N workers (same output)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("algebra", help="path to the algebra file (JSON)")
        p.set_defaults(func=func)
        return p

    add("catalog", cmd_catalog, "list the indecomposable modules")
    add("bricks", cmd_bricks, "list the bricks")
    add("mgs", cmd_mgs, "enumerate the maximal green sequences")
    add("classes", cmd_classes, "equivalence classes with summand keys")

    p = add("poset", cmd_poset, "emit a partial order on equivalence classes")
    p.add_argument("--order", required=True, choices=orders_mod.ORDER_TAGS)
    p.add_argument("--format", default="dot", choices=("dot", "json"))
    p.add_argument("--output", "-o", default=None, help="write to a file")

    p = add("hn", cmd_hn, "Harder-Narasimhan filtration of a module")
    p.add_argument("--mgs", required=True,
                   help="enumeration index or comma-separated brick list")
    p.add_argument("--module", required=True,
                   help="module expression, e.g. 'U(1,2)+U(2,1)', 'I[1,3]' or '#4'")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", required=True, choices=verify_mod.SUITES)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, UsageError, GateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TheoremViolation, InvariantViolation) as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
