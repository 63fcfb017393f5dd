"""groupsum command line.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import corpus
from .abelian import GroupError, GroupSpec, enumerate_abelian_groups
from .colouring import ColouringError, TooLarge, graph_chromatic_number
from .constructions import (DomainError, Impossible, ImpossibleLabelling, certify, chi_sum_g,
                            chi_sum_g_explained, k_minus_two_exception, label)
from .graph import FAMILIES, GraphError, generate, parse_graph, write_graph
from .labelling import LabellingError, certificate_from_json, verify
from .oracle import DEFAULT_BUDGET, BudgetExceeded, brute_chi_sum, brute_exists_labelling

EXIT_DOMAIN, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


class UsageError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _group(text: str) -> GroupSpec:
    try:
        return GroupSpec.parse(text)
    except GroupError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family_params(tokens: list[str]):
    params = []
    for tok in tokens:
        if ":" in tok:
            fam, _, rest = tok.partition(":")
            params.append((fam, *[x for x in rest.split(",") if x]))
        else:
            params.append(tok)
    return params


def cmd_gen(args) -> int:
    params = _family_params(args.params) if args.family == "disjoint_union" else args.params
    try:
        g = generate(args.family, params, seed=args.seed)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(write_graph(g))
    return 0


def cmd_chi(args) -> int:
    g = _read_graph(args.graph)
    print(graph_chromatic_number(g))
    return 0


def cmd_chisum(args) -> int:
    g = _read_graph(args.graph)
    value, reason = chi_sum_g_explained(g)
    print(f"{value} ({reason})")
    return 0


def _impossible_json(item: Impossible) -> dict:
    return {"group": str(item.spec), "possible": False, "reason": item.reason}


def cmd_label(args) -> int:
    g = _read_graph(args.graph)
    spec = args.group
    try:
        cert = label(g, spec)
    except ImpossibleLabelling as exc:
        report = {"group": str(spec), "possible": False, "reason": str(exc)}
        if k_minus_two_exception(g, spec):
            report["exception"] = f"(Z2)^q with a component K_{spec.order - 2}"
        print(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_DOMAIN
    text = cert.dumps()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_certify(args) -> int:
    g = _read_graph(args.graph)
    results = certify(g, args.order)
    bundle = {
        "order": args.order,
        "chi_sum_g": chi_sum_g(g),
        "results": [_impossible_json(r) if isinstance(r, Impossible) else r.to_json() for r in results],
    }
    print(json.dumps(bundle, indent=2, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    try:
        data = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
        f, claimed = certificate_from_json(g, data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    except (GroupError, LabellingError) as exc:
        print(f"INVALID: {exc}")
        return EXIT_DOMAIN
    cert = verify(g, f)
    ok = cert.valid
    stale = sorted(v for v, w in claimed.items() if cert.weighted_degrees.get(v) != w)
    if stale:
        ok = False
        print(f"INVALID: stored degrees disagree with the labels at vertices {stale}")
    for u, v in cert.violations:
        print(f"INVALID: edge ({u}, {v}) has equal weighted degrees {list(cert.weighted_degrees[u])}")
    if data.get("valid") is not None and bool(data["valid"]) != cert.valid:
        print(f"note: certificate claims valid={data['valid']}, recomputed {cert.valid}")
    if ok:
        print(f"VALID: {g.m} edges over group {cert.spec}")
        return 0
    return EXIT_DOMAIN


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    budget = args.budget
    first_full = None
    for s in range(2, args.max_order + 1):
        verdicts = []
        for spec in enumerate_abelian_groups(s):
            f = brute_exists_labelling(g, spec, budget)
            verdicts.append(f is not None)
            print(f"{s}\t{spec}\t{'exists' if f is not None else 'none'}")
        if first_full is None and all(verdicts):
            first_full = s
    if first_full is not None:
        print(f"minimal order\t{first_full}")
    else:
        print(f"minimal order\t> {args.max_order}")
    return 0


def _run_corpus(budget: int) -> tuple[list[str], bool]:
    rows = ["graph\texpected\tchi_sum_g\toracle\tstatus"]
    all_ok = True
    for name, (make, expected) in corpus.DICHOTOMY.items():
        g = make()
        got = chi_sum_g(g)
        try:
            brute = str(brute_chi_sum(g, budget))
        except BudgetExceeded:
            brute = "-"
        ok = got == expected and brute in ("-", str(expected))
        all_ok &= ok
        rows.append(f"{name}\t{expected}\t{got}\t{brute}\t{'ok' if ok else 'FAIL'}")
    return rows, all_ok


def cmd_corpus(args) -> int:
    start = time.perf_counter()
    rows, ok = _run_corpus(args.budget)
    print("\n".join(rows))
    print(f"# {time.perf_counter() - start:.2f}s")
    return 0 if ok else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groupsum", description="Group sum chromatic number and labelling certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a generated graph in edge-list format")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("params", nargs="*",
                   help="family parameters; disjoint_union takes items like complete:8 cycle:6")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("chi", help="chromatic number")
    s.add_argument("graph")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("chisum", help="group sum chromatic number with its reason")
    s.add_argument("graph")
    s.set_defaults(func=cmd_chisum)

    s = sub.add_parser("label", help="certificate for one group, or an impossibility report")
    s.add_argument("graph")
    s.add_argument("--group", type=_group, required=True, help='factor moduli, e.g. "4,2"')
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_label)

    s = sub.add_parser("certify", help="certificates for every Abelian group of an order")
    s.add_argument("graph")
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify", help="recheck a certificate; exit 0 iff valid")
    s.add_argument("graph")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="exhaustive labelling search per group")
    s.add_argument("graph")
    s.add_argument("--max-order", type=int, default=4)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("corpus", help="dichotomy table: expected vs computed vs oracle")
    s.add_argument("--budget", type=int, default=10**6)
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, ColouringError, ImpossibleLabelling) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
