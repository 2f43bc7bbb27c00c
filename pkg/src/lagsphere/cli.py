"""Command line front end: ``lagsphere <subcommand>`` or ``python -m lagsphere``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import certificates as cert_mod
from .congruence import coset_label, coset_transversal, cusp_classes, psl_index
from .monodromy import DEFAULT_ENTRY_BOUND, MIN_ENTRY_BOUND, beauville_search
from .report import emit_json, verify_paper
from .schoen_calculus import (
    SchoenError, build_fiber_product, conifold_count, hodge_of_fiber_product,
    schoen_smoothing_invariants, transition_solve_r,
)
from .surfaces import ADMISSIBLE_PHIS, BEAUVILLE_X16, named_moebius

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(obj, path: str | None):
    text = json.dumps(obj, indent=2) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def schoen_payload(phi_name: str) -> dict:
    fp = build_fiber_product(BEAUVILLE_X16, named_moebius(phi_name))
    hodge = hodge_of_fiber_product(fp)
    y = schoen_smoothing_invariants(BEAUVILLE_X16)
    td = transition_solve_r(y.betti, hodge.betti, hodge.n)
    return {
        "phi": phi_name,
        "moebius": [list(r) for r in fp.phi.rows()],
        "matched": [{"t": str(m.t), "b": m.b, "b_prime": m.b_prime} for m in fp.matched],
        "unmatched_critical": [str(t) for t in fp.unmatched_critical],
        "conifold_count": conifold_count(fp),
        "hodge": hodge.as_dict(),
        "transition": td.as_dict(),
    }


def cmd_verify_paper(args) -> int:
    report = verify_paper(seed=args.seed, samples=args.samples,
                          with_beauville=args.with_beauville, bound=args.bound,
                          workers=args.workers, catalog=args.catalog, timings=args.timings)
    blob = emit_json(report)
    if args.json:
        Path(args.json).write_bytes(blob)
        print(report.table())
    elif args.table:
        print(report.table())
    else:
        sys.stdout.write(blob.decode())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_cosets(args) -> int:
    table = coset_transversal(args.N)
    _dump({"level": args.N, "index": psl_index(args.N),
           "representatives": [
               {"matrix": [list(r) for r in g.rows()], "label": list(coset_label(args.N, g))}
               for g in table.representatives]}, args.json)
    return EXIT_OK


def cmd_cusps(args) -> int:
    classes = cusp_classes(args.N)
    _dump({"level": args.N, "index": psl_index(args.N),
           "cusps": [{"cusp": str(c), "width": w} for c, w in classes]}, args.json)
    return EXIT_OK


def cmd_schoen(args) -> int:
    try:
        _dump(schoen_payload(args.phi), args.json)
    except SchoenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_intersect(args) -> int:
    if args.b == args.bprime:
        print("error: --b and --bprime must differ", file=sys.stderr)
        return EXIT_USAGE
    cert = cert_mod.essentiality_certificate(args.b, args.bprime, args.samples, args.seed)
    _dump(cert.as_dict(), args.json)
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_obstruction(args) -> int:
    cert = cert_mod.essentiality_certificate(args.b, args.bprime, args.samples, args.seed)
    rep = cert_mod.nodal_obstruction(cert)
    _dump(rep.as_dict(), args.json)
    return EXIT_OK if rep.verdict is cert_mod.Verdict.NODAL_DEGENERATION_IMPOSSIBLE else EXIT_FAIL


def cmd_beauville(args) -> int:
    res = beauville_search(args.bound, workers=args.workers)
    _dump({"entry_bound": res.entry_bound, "note": res.note,
           "multisets": [list(m) for m in res.sorted()]}, args.json)
    return EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _bound(text):
    v = int(text)
    if v < MIN_ENTRY_BOUND:
        raise argparse.ArgumentTypeError(f"must be >= {MIN_ENTRY_BOUND}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lagsphere", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, sampling=False):
        sp.add_argument("--json", metavar="PATH", help="write JSON here instead of stdout")
        if sampling:
            sp.add_argument("--seed", type=int, default=cert_mod.DEFAULT_SEED)
            sp.add_argument("--samples", type=_positive, default=cert_mod.DEFAULT_SAMPLES)

    sp = sub.add_parser("verify-paper", help="run every check")
    common(sp, sampling=True)
    sp.add_argument("--with-beauville", action="store_true", help="include the slow search")
    sp.add_argument("--bound", type=_bound, default=DEFAULT_ENTRY_BOUND)
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--catalog", metavar="PATH", help="alternative surface catalog")
    sp.add_argument("--table", action="store_true", help="print a table instead of JSON")
    sp.add_argument("--timings", action="store_true",
                    help="record elapsed times (makes output nondeterministic)")
    sp.set_defaults(func=cmd_verify_paper)

    sp = sub.add_parser("cosets", help="coset transversal of Gamma_1(N)")
    sp.add_argument("N", type=_positive)
    common(sp)
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("cusps", help="cusp classes and widths of Gamma_1(N)")
    sp.add_argument("N", type=_positive)
    common(sp)
    sp.set_defaults(func=cmd_cusps)

    sp = sub.add_parser("schoen", help="Hodge and transition data for one phi")
    sp.add_argument("--phi", required=True, choices=ADMISSIBLE_PHIS)
    common(sp)
    sp.set_defaults(func=cmd_schoen)

    for name, func, help_ in (("intersect", cmd_intersect, "essentiality certificate"),
                              ("obstruction", cmd_obstruction, "nodal degeneration obstruction")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--b", type=int, choices=cert_mod.ADMISSIBLE_WIDTHS,
                        default=2 if name == "obstruction" else None,
                        required=name == "intersect")
        sp.add_argument("--bprime", type=int, choices=cert_mod.ADMISSIBLE_WIDTHS,
                        default=6 if name == "obstruction" else None,
                        required=name == "intersect")
        common(sp, sampling=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("beauville-search", help="four-fiber factorizations of the identity")
    sp.add_argument("--bound", type=_bound, default=DEFAULT_ENTRY_BOUND)
    sp.add_argument("--workers", type=_positive, default=1)
    common(sp)
    sp.set_defaults(func=cmd_beauville)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
