"""Command-line front end (``arcalg`` / ``python -m arcalg``).

Exit codes: 0 success, 1 argument error, 2 a mathematical check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from math import comb
from typing import Sequence

from .algebra import AlgElem, frac_str
from .arc_algebra import arc_algebra
from .colored import colored_algebra
from .diagrams import (CupDiagram, SignSeq, enumerate_sequences, extend, is_cup_sequence,
                       seq_young_bijection)
from .gluing import glue, glue_extended

MAX_N = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# label parsing for ``mult``


def _resolve_label(text: str, n: int, letters: bool) -> str:
    seqs = enumerate_sequences(n)
    if letters:
        idx = ord(text) - ord("a")
        if not 0 <= idx < len(seqs):
            raise UsageError(f"no sequence named {text!r} for n={n}")
        return seqs[idx]
    try:
        s = SignSeq(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if s.n != n:
        raise UsageError(f"sequence {text!r} does not have length {2 * n}")
    return s


def _label_name(s: str, n: int, letters: bool) -> str:
    return chr(ord("a") + enumerate_sequences(n).index(s)) if letters else str(s)


def parse_k_key(text: str, n: int) -> tuple[tuple[str, str, int], bool]:
    parts = text.split("|")
    if len(parts) != 3:
        raise UsageError(f"basis vector {text!r} must look like 'left|right|labels'")
    left, right, labels = (p.strip() for p in parts)
    letters = bool(re.fullmatch(r"[a-z]", left)) and bool(re.fullmatch(r"[a-z]", right))
    b = _resolve_label(left, n, letters)
    a = _resolve_label(right, n, letters)
    K = colored_algebra(n)
    g = glue_extended(b, a)
    if g.red:
        raise UsageError(f"the space {left}|{right} is zero (red circle)")
    factors = [f for f in re.split(r"[⊗*,]", labels) if f]
    if any(f not in ("1", "X") for f in factors):
        raise UsageError(f"labels {labels!r} must be 1/X factors")
    if len(factors) not in (g.black, g.black + g.green):
        raise UsageError(f"{left}|{right} has {g.black} black and {g.green} green circles")
    if any(f == "X" for f in factors[g.black:]):
        raise UsageError("green circles carry the unit only")
    mask = sum(1 << k for k, f in enumerate(factors[:g.black]) if f == "X")
    assert mask in K.space(b, a)
    return (b, a, mask), letters


def format_elem(elem: AlgElem, n: int, letters: bool) -> str:
    if elem.is_zero():
        return "0"
    K = elem.algebra
    parts = []
    for (b, a, m), c in sorted(elem.terms.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]), kv[0][2])):
        head = "" if c == 1 else f"{frac_str(c)}*"
        parts.append(f"{head}{_label_name(b, n, letters)}|{_label_name(a, n, letters)}|{K.mask_str((b, a, m))}")
    return " + ".join(parts)


def elem_json(elem: AlgElem, n: int, letters: bool) -> dict[str, str]:
    K = elem.algebra
    return {f"{_label_name(b, n, letters)}|{_label_name(a, n, letters)}|{K.mask_str((b, a, m))}": frac_str(c)
            for (b, a, m), c in elem.terms.items()}


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, payload for json, text for ascii)


def cmd_enum(args):
    rows = []
    for s in enumerate_sequences(args.n):
        rows.append({"sequence": str(s), "young": list(seq_young_bijection(s).parts),
                     "cup_sequence": is_cup_sequence(s), "extended": str(extend(s))})
    text = [f"{'sequence':<{2 * args.n + 2}} {'young':<14} cup"]
    for r in rows:
        text.append(f"{r['sequence']:<{2 * args.n + 2}} {str(tuple(r['young'])):<14} {'yes' if r['cup_sequence'] else 'no'}")
    return 0, {"n": args.n, "sequences": rows}, "\n".join(text)


def cmd_render(args):
    from .render import render

    if args.cups is not None:
        try:
            d = CupDiagram.from_json(json.loads(args.cups))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad cup diagram: {exc}") from None
        if args.bottom is not None:
            try:
                other = CupDiagram.from_json(json.loads(args.bottom))
                g = glue(d, other)
            except (ValueError, TypeError) as exc:
                raise UsageError(str(exc)) from None
            pic = render(g)
            payload = {"circles": [list(c) for c in g.circles]}
        else:
            pic = render(d)
            payload = {"arcs": d.to_json()}
        return 0, {**payload, "picture": pic}, pic
    if args.top is None or args.bottom is None:
        raise UsageError("render needs --top and --bottom sequences (or --cups)")
    try:
        top, bottom = SignSeq(args.top), SignSeq(args.bottom)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if top.n != args.n or bottom.n != args.n:
        raise UsageError(f"sequences must have length {2 * args.n}")
    g = glue_extended(top, bottom)
    pic = render(g)
    payload = {"top": str(top), "bottom": str(bottom), "circles": [list(c) for c in g.circles],
               "colors": list(g.colors), "picture": pic}
    return 0, payload, pic


def cmd_mult(args):
    n = args.n
    f, letters_f = parse_k_key(args.left, n)
    g, letters_g = parse_k_key(args.right, n)
    letters = letters_f and letters_g
    K = colored_algebra(n)
    prod = K.vector(f) * K.vector(g)
    return 0, {"left": args.left, "right": args.right, "product": elem_json(prod, n, letters)}, \
        format_elem(prod, n, letters)


def cmd_dims(args):
    from .invariants import dim_table, graded_dims

    n = args.n
    seqs = [str(s) for s in enumerate_sequences(n)]
    table = dim_table(n)
    K = colored_algebra(n)
    graded = graded_dims(K)
    symmetric = all(table[i][j] == table[j][i] for i in range(len(seqs)) for j in range(len(seqs)))
    w = max(len(s) for s in seqs) + 1
    lines = [" " * w + " ".join(f"{s:>{w}}" for s in seqs)]
    for s, row in zip(seqs, table):
        lines.append(f"{s:<{w}}" + " ".join(f"{v:>{w}}" for v in row))
    lines.append(f"total {sum(map(sum, table))}  graded {graded}")
    payload = {"n": n, "labels": seqs, "table": table, "total": sum(map(sum, table)),
               "graded": {str(k): v for k, v in graded.items()}, "symmetric": symmetric}
    return (0 if symmetric else 2), payload, "\n".join(lines)


def cmd_center(args):
    from .invariants import center, commutator_quotient_dim, top_degree

    n = args.n
    alg = colored_algebra(n) if args.algebra == "K" else arc_algebra(n)
    c = center(alg, cross_check=True)
    deg, dim = top_degree(c)
    payload = {"algebra": args.algebra, "n": n, "dim": c.dim,
               "graded": {str(k): v for k, v in c.graded.items()},
               "top": {"degree": deg, "dim": dim}, "expected_dim": comb(2 * n, n),
               "basis": [z.to_json() for z in c.basis]}
    ok = c.dim == comb(2 * n, n)
    if args.algebra == "K":
        ok = ok and (deg, dim) == (2 * n, _catalan(n))
    else:
        cq = commutator_quotient_dim(alg)
        payload["commutator_quotient_dim"] = cq
        ok = ok and cq == c.dim
    lines = [f"center of {args.algebra}^{n}: dim {c.dim} (expected {comb(2 * n, n)})"]
    lines += [f"  degree {d:>2}: {v}" for d, v in sorted(c.graded.items())]
    lines.append(f"top degree {deg} with dim {dim}")
    if "commutator_quotient_dim" in payload:
        lines.append(f"commutator quotient dim {payload['commutator_quotient_dim']}")
    return (0 if ok else 2), payload, "\n".join(lines)


def cmd_check_relations(args):
    from .braden import check_relations, relations_ok

    report = check_relations(args.n, workers=args.threads)
    ok = relations_ok(report)
    lines = [f"{'family':<8} {'instances':>10} {'failures':>9}"]
    for fam, res in report.items():
        if fam == "notes":
            continue
        lines.append(f"{fam:<8} {res['instances']:>10} {len(res['failures']):>9}")
    for name, info in report["notes"].get("zero_case_compositions", {}).items():
        lines.append(f"  out-of-box diamonds: {name} vanishes {info['vanishing']}/{info['instances']}")
    return (0 if ok else 2), report, "\n".join(lines)


def cmd_tanisaki(args):
    from .tanisaki import (allowed_l, expected_total, f_property_one, f_property_two,
                           graded_quotient_dims, tanisaki_generators)

    try:
        mu = tuple(int(p) for p in args.mu.split(","))
    except ValueError:
        raise UsageError(f"bad composition {args.mu!r}") from None
    if not mu or any(p <= 0 for p in mu):
        raise UsageError("composition needs positive parts")
    I = tanisaki_generators(mu)
    cutoff = args.cutoff if args.cutoff is not None else sum(mu) + 1
    try:
        q = graded_quotient_dims(I, cutoff)
    except ValueError as exc:
        return 2, {"error": str(exc)}, str(exc)
    props = {}
    ok = q.total == expected_total(mu)
    if args.points > 0:
        for k in range(1, I.N + 1):
            for l in allowed_l(k, mu, I.N):
                good = f_property_one(k, l, mu) and f_property_two(k, l, mu, args.points, args.seed)
                props[f"{k},{l}"] = good
                ok = ok and good
    gens = [{"k": g.k, "l": g.l, "subset": [i + 1 for i in g.subset]} for g in I.generators]
    payload = {"mu": list(mu), "dual": list(I.dual), "generators": gens, "hilbert": q.hilbert,
               "total": q.total, "top": q.top, "expected_total": expected_total(mu),
               "f_properties": props}
    lines = [f"mu={mu} dual={I.dual} generators={len(gens)}",
             f"hilbert {q.hilbert} total {q.total} (expected {expected_total(mu)}) top {q.top}"]
    if props:
        lines.append(f"f_(k,l) properties hold for {sum(props.values())}/{len(props)} pairs")
    return (0 if ok else 2), payload, "\n".join(lines)


def cmd_corner_check(args):
    from .invariants import corner_isomorphism_check

    r = corner_isomorphism_check(args.n)
    payload = {"n": args.n, "ok": r.ok, "dims_match": r.dims_match, "circles_match": r.circles_match,
               "structure_match": r.structure_match, "degrees_match": r.degrees_match,
               "corner_dim": r.corner_dim, "h_dim": r.h_dim,
               "end_dims": {str(k): v for k, v in r.end_dims.items()},
               "mismatches": [list(map(str, m)) for m in r.mismatches]}
    text = (f"corner dim {r.corner_dim} vs H^{args.n} dim {r.h_dim}; structure constants "
            f"{'checked' if r.structure_match is not None else 'skipped'}; ok={r.ok}")
    return (0 if r.ok else 2), payload, text


COMMANDS = {
    "enum": cmd_enum,
    "render": cmd_render,
    "mult": cmd_mult,
    "dims": cmd_dims,
    "center": cmd_center,
    "check-relations": cmd_check_relations,
    "tanisaki": cmd_tanisaki,
    "corner-check": cmd_corner_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of ASCII")
    common.add_argument("--force", action="store_true", help=f"allow n > {MAX_N}")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: ARCALG_THREADS or 1)")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="arcalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_n(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int, required=True)
        return p

    with_n("enum", "list sequences with Young diagrams and cup closability")
    p = with_n("render", "draw a glued pair of extended diagrams")
    p.add_argument("--top")
    p.add_argument("--bottom")
    p.add_argument("--cups", help="JSON list of [left,right] arcs (bottom diagram if --bottom is JSON)")
    p = with_n("mult", "multiply two basis vectors of K^n")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    with_n("dims", "dimension table of K^n")
    p = with_n("center", "center of K^n or H^n")
    p.add_argument("--algebra", choices=["K", "H"], default="K")
    with_n("check-relations", "verify Braden's relations inside K^n")
    with_n("corner-check", "compare the cup-sequence corner of K^n with H^n")
    p = sub.add_parser("tanisaki", parents=[common], help="quotient by a Tanisaki ideal")
    p.add_argument("--mu", required=True, help="composition, e.g. 2,2")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--points", type=int, default=100, help="random points per f_(k,l) check")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        env = os.environ.get("ARCALG_THREADS", "1")
        try:
            args.threads = int(env)
        except ValueError:
            parser.error(f"ARCALG_THREADS={env!r} is not an integer")
    if args.threads < 1:
        parser.error("--threads must be positive")
    n = getattr(args, "n", None)
    if n is not None:
        if n < 1:
            parser.error("--n must be positive")
        if n > MAX_N and not args.force:
            parser.error(f"--n {n} exceeds the default cap {MAX_N}; pass --force to override")
    try:
        code, payload, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"arcalg: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
