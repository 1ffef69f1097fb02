"""Command-line front end.

Every subcommand validates its type argument up front, prints tab-delimited
text by default, and exits 0 on success, 1 on a domain error, 2 on a usage
error.  JSON output is sorted and stable; --figure writes a rendering next
to the normal output rather than replacing it.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import DomainError, LieType, height
from . import gkseries, lusztig, segments, symfunc, tableaux


def _lie(arg):
    return LieType.parse(arg)


def _coords(text, what="coordinates"):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise DomainError(f"cannot parse {what} {text!r}; expected comma-separated integers") from None


def _read_tableau(lie, args):
    if args.tableau == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.tableau, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {args.tableau}: {exc}") from None
    body = raw.strip()
    if "/" in body and "\n" not in body:
        # single-line form with rows separated by '/'
        raw = body.replace("/", "\n")
    return tableaux.from_text(lie, raw, reduced=args.reduced)


def _add_tableau_arg(sub):
    sub.add_argument("--tableau", required=True, metavar="FILE",
                     help="tableau file, or - for stdin; rows are comma-separated letters")
    sub.add_argument("--reduced", action="store_true",
                     help="input rows are in reduced form (forced prefixes omitted)")


def _cmd_roots(args):
    lie = _lie(args.type)
    from .cartan import positive_roots

    for root in positive_roots(lie):
        vec = ",".join(str(c) for c in root.vector)
        print(f"{root.label}\t{vec}\t{height(root.vector)}")
    return 0


def _cmd_graph(args):
    lie = _lie(args.type)
    if args.dot:
        print(tableaux.crystal_dot(lie, args.depth))
    else:
        nodes, edges = tableaux.crystal_graph(lie, args.depth)
        if args.json:
            ids = {tab: k for k, tab in enumerate(nodes)}
            payload = {
                "type": str(lie),
                "depth": args.depth,
                "nodes": [
                    {
                        "id": ids[tab],
                        "reduced": tableaux.reduced_text(tab),
                        "rows": [list(row) for row in tab.rows],
                        "depth": d,
                        "weight": list(tableaux.weight(tab)),
                        "seg": segments.seg(tab),
                    }
                    for tab, d in nodes.items()
                ],
                "edges": [
                    {"from": ids[a], "label": i, "to": ids[b]} for a, i, b in edges
                ],
            }
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            for tab, d in nodes.items():
                wt = ",".join(str(c) for c in tableaux.weight(tab))
                print(f"node\t{tableaux.reduced_text(tab)}\t{d}\t{wt}\t{segments.seg(tab)}")
            for a, i, b in edges:
                print(f"edge\t{tableaux.reduced_text(a)}\t{i}\t{tableaux.reduced_text(b)}")
    if args.figure:
        from . import figures

        figures.crystal_figure(lie, args.depth, args.figure)
        print(f"figure\t{args.figure}", file=sys.stderr)
    return 0


def _cmd_seg(args):
    lie = _lie(args.type)
    tab = _read_tableau(lie, args)
    print(f"seg_prime\t{segments.seg_prime(tab)}")
    fam = lie.family
    if fam == "B":
        print(f"e_B\t{segments.e_correction_b(tab)}")
    elif fam == "D":
        print(f"e_D\t{segments.e_correction_d(tab)}")
    elif fam == "G":
        print(f"correction\t{segments.g2_correction(tab)}")
    print(f"seg\t{segments.seg(tab)}")
    return 0


def _cmd_xi(args):
    lie = _lie(args.type)
    tab = _read_tableau(lie, args)
    kp = segments.xi(tab)
    from .cartan import root_by_label

    table = root_by_label(lie)
    for label, mult in segments.sorted_items(lie, kp):
        vec = ",".join(str(c) for c in table[label].vector)
        print(f"{label}\t{mult}\t{vec}")
    return 0


def _cmd_theta(args):
    lie = _lie(args.type)
    word = _coords(args.word, "word")
    tab = _read_tableau(lie, args)
    datum = lusztig.theta(tab, word)
    if args.json:
        print(json.dumps(datum.to_json_dict(), sort_keys=True))
    else:
        print("coords\t" + ",".join(str(c) for c in datum.coords))
        print(f"nz\t{lusztig.nz(datum)}")
    return 0


def _cmd_wt(args):
    lie = _lie(args.type)
    tab = _read_tableau(lie, args)
    print(",".join(str(c) for c in tableaux.weight(tab)))
    return 0


def _cmd_content(args):
    lie = _lie(args.type)
    tab = _read_tableau(lie, args)
    print(segments.content(tab))
    return 0


def _cmd_eps_phi(args):
    lie = _lie(args.type)
    tab = _read_tableau(lie, args)
    for i in lie.index_set:
        print(f"{i}\t{tableaux.eps(tab, i)}\t{tableaux.phi(tab, i)}")
    return 0


def _cmd_verify_gk(args):
    lie = _lie(args.type)
    word = _coords(args.word, "word") if args.word else None
    report = gkseries.verify_gk(lie, args.height, word=word, threads=args.threads)
    if args.json:
        print(report.to_json())
    else:
        print(f"# type\t{report.lie}")
        print(f"# bound\t{report.bound}")
        print("# word\t" + ",".join(str(i) for i in report.word))
        for e in report.entries:
            mu = ",".join(str(c) for c in e.mu)
            counts = ",".join(str(c) for c in e.seg_counts)
            flag = "ok" if e.ok else "MISMATCH"
            print(f"{mu}\t{e.height}\t{e.coeff.to_str('u')}\t{counts}\t{flag}")
        print(f"equal\t{'true' if report.equal else 'false'}")
    if args.figure:
        from . import figures

        figures.gk_figure(report, args.figure)
        print(f"figure\t{args.figure}", file=sys.stderr)
    # a completed comparison is a successful run; the equal line carries the verdict
    return 0


def _cmd_qkostant(args):
    lie = _lie(args.type)
    mu = _coords(args.mu, "--mu")
    print(symfunc.q_kostant(lie, mu, via=args.via).to_str("q"))
    return 0


def _cmd_kostka(args):
    lie = _lie(args.type)
    lam = _coords(args.lam, "--lambda")
    mu = _coords(args.mu, "--mu")
    print(symfunc.kostka_foulkes(lie, lam, mu).to_str("q"))
    return 0


def _cmd_hall_littlewood(args):
    lie = _lie(args.type)
    mu = _coords(args.mu, "--mu")
    poly = symfunc.hall_littlewood(lie, mu)
    if args.json:
        print(poly.to_json())
    else:
        for w in poly.support():
            coeff = poly.coefficient(w).to_str("q")
            print(",".join(str(c) for c in w) + "\t" + coeff)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mltab",
        description="Crystal combinatorics of marginally large tableaux: "
        "segments, Kostant partitions, Lusztig data, identity checks, and "
        "q-weight polynomials.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("roots", help="positive roots with labels and heights")
    p.add_argument("type", help="Lie type, e.g. A3, B2, C3, D4, G2")
    p.set_defaults(fn=_cmd_roots)

    p = subs.add_parser("graph", help="crystal graph down to a depth")
    p.add_argument("type")
    p.add_argument("--depth", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT output")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH", help="also render the graph to an image file")
    p.set_defaults(fn=_cmd_graph)

    p = subs.add_parser("seg", help="segment statistics of a tableau")
    p.add_argument("type")
    _add_tableau_arg(p)
    p.set_defaults(fn=_cmd_seg)

    p = subs.add_parser("xi", help="Kostant partition attached to a tableau")
    p.add_argument("type")
    _add_tableau_arg(p)
    p.set_defaults(fn=_cmd_xi)

    p = subs.add_parser("theta", help="Lusztig datum of a tableau for a long word")
    p.add_argument("type")
    p.add_argument("--word", required=True, help="comma-separated reduced word for the longest element")
    p.add_argument("--json", action="store_true")
    _add_tableau_arg(p)
    p.set_defaults(fn=_cmd_theta)

    p = subs.add_parser("wt", help="weight of a tableau in root coordinates")
    p.add_argument("type")
    _add_tableau_arg(p)
    p.set_defaults(fn=_cmd_wt)

    p = subs.add_parser("content", help="content statistic of a tableau")
    p.add_argument("type")
    _add_tableau_arg(p)
    p.set_defaults(fn=_cmd_content)

    p = subs.add_parser("eps-phi", help="epsilon_i and phi_i for every index i")
    p.add_argument("type")
    _add_tableau_arg(p)
    p.set_defaults(fn=_cmd_eps_phi)

    p = subs.add_parser("verify-gk", help="check the product identity up to a height")
    p.add_argument("type")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--word", help="long word for the Lusztig-sum route (default: canonical)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--figure", metavar="PATH", help="also render the count chart to an image file")
    p.set_defaults(fn=_cmd_verify_gk)

    p = subs.add_parser("qkostant", help="q-analogue of the Kostant partition count")
    p.add_argument("type")
    p.add_argument("--mu", required=True, help="root coordinates, comma-separated")
    p.add_argument("--via", choices=("tableau", "bruteforce"), default="tableau")
    p.set_defaults(fn=_cmd_qkostant)

    p = subs.add_parser("kostka", help="Kostka-Foulkes polynomial")
    p.add_argument("type")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight, fundamental-weight coordinates")
    p.add_argument("--mu", required=True,
                   help="dominant weight, fundamental-weight coordinates")
    p.set_defaults(fn=_cmd_kostka)

    p = subs.add_parser("hall-littlewood", help="Hall-Littlewood polynomial P_mu(z; q)")
    p.add_argument("type")
    p.add_argument("--mu", required=True,
                   help="dominant weight, fundamental-weight coordinates")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_hall_littlewood)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
