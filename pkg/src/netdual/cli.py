"""Command-line front end: ``netdual <verb> [source] [options]``.

Exit status: 0 success, 1 usage or parse error, 2 computation refused by a
size cap, 3 two independent computations disagreed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .catalog import available, catalog as load_catalog
from .arrangements import LineArrangement, NetCandidate, l2_from_coordinates
from .core import MonomialIdeal, one_based, sr_complex
from .duality import alexander_dual, primary_decomposition
from .errors import CrossCheckError, NetdualError, ParseError, SizeLimitError
from .homology import FieldChoice
from .io import read_arrangement, read_coordinates, read_graph, read_ideal, read_net
from .monomial_os import (
    FlatFamily,
    build_J,
    flat_family,
    graph_family,
    j_pi,
    j_x,
    kn_family,
    quadratic_part,
    split_JY,
)
from .nets import (
    blocks_normal_crossing,
    extra_fibers_required,
    fy_slack,
    net_check,
    within_block_mu_sum,
)
from .oracle import koszul_tor_oracle
from .resolutions import IDEAL, QUOTIENT, betti_table
from .series import cut_polynomial, f_polynomial, f_vector, hilbert_series

VERBS = (
    "ideal", "dual", "primary", "betti", "hilbert", "fvector",
    "cutpoly", "net-check", "blocks-check", "fy-slack", "catalog",
)
IDEAL_CHOICES = ("J", "J2", "JX", "JY", "JPi")


class UsageError(NetdualError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="netdual", description="Monomial Orlik-Solomon ideals, Alexander duality and nets.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("name", nargs="?", help="catalog entry (same as --catalog)")
    src = p.add_argument_group("input (exactly one)")
    src.add_argument("--catalog", metavar="NAME")
    src.add_argument("--arrangement", metavar="FILE", help="JSON multiple-point data")
    src.add_argument("--coords", metavar="FILE", help="one 'a b c' line per line")
    src.add_argument("--graph", metavar="FILE", help="graphic arrangement of a graph")
    src.add_argument("--kn", type=int, metavar="N", help="graphic arrangement of K_N")
    src.add_argument("--ideal-file", metavar="FILE", help="JSON squarefree monomial ideal")
    p.add_argument("--net", metavar="FILE", help="net candidate JSON (overrides a catalog net)")
    p.add_argument("--ideal", choices=IDEAL_CHOICES, help="which ideal to use (default J)")
    p.add_argument("--dual", action="store_true", help="replace the ideal by its Alexander dual")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--field", default="q", help="q or gf:p (default q)")
    p.add_argument("--subject", choices=(IDEAL, QUOTIENT), default=QUOTIENT)
    p.add_argument("--exhaustive", action="store_true", help="sweep every squarefree multidegree")
    p.add_argument("--oracle", action="store_true", help="also run the Koszul oracle and compare")
    p.add_argument("--multigraded", action="store_true", help="list multidegrees in JSON Betti output")
    p.add_argument("--threads", type=int, help="worker threads (default $NETDUAL_THREADS or 1)")
    p.add_argument("--kpoly", action="store_true", help="hilbert: print over (1-t)^(number of variables)")
    p.add_argument("--k", type=int, help="fy-slack without an arrangement: block count")
    p.add_argument("--d", type=int, help="fy-slack without an arrangement: block size")
    p.add_argument("--x-size", type=int, help="fy-slack: |X| (default d^2)")
    p.add_argument("--mu-sum", type=int, help="fy-slack: sum of mu over points outside X")
    return p


@dataclass
class Source:
    label: str
    arrangement: LineArrangement | None = None
    candidate: NetCandidate | None = None
    family: FlatFamily | None = None
    ideal: MonomialIdeal | None = None

    def J(self) -> MonomialIdeal:
        if self.ideal is not None:
            return self.ideal
        return build_J(self.family)

    def need_candidate(self, what: str) -> NetCandidate:
        if self.candidate is None:
            raise UsageError(f"{what} needs a net candidate: use a catalog net or --net FILE")
        return self.candidate

    def need_arrangement(self, what: str) -> LineArrangement:
        if self.arrangement is None:
            raise UsageError(f"{what} needs a line arrangement (--catalog, --arrangement or --coords)")
        return self.arrangement


def load_source(args) -> Source:
    given = {
        "catalog": args.catalog or args.name,
        "arrangement": args.arrangement,
        "coords": args.coords,
        "graph": args.graph,
        "kn": args.kn,
        "ideal-file": args.ideal_file,
    }
    if args.catalog and args.name:
        raise UsageError("give the catalog name once")
    chosen = [k for k, v in given.items() if v is not None]
    if len(chosen) != 1:
        raise UsageError(
            "exactly one input source is required" if not chosen else f"conflicting inputs: {', '.join(chosen)}"
        )
    kind = chosen[0]
    value = given[kind]
    src = Source(label=f"{kind} {value}")
    if kind == "catalog":
        try:
            src.arrangement, src.candidate = load_catalog(value)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    elif kind == "arrangement":
        src.arrangement = read_arrangement(value)
    elif kind == "coords":
        try:
            src.arrangement = l2_from_coordinates(read_coordinates(value))
        except ValueError as exc:
            raise ParseError(str(exc), source=value) from None
    elif kind == "graph":
        try:
            src.family = graph_family(read_graph(value))
        except ValueError as exc:
            raise ParseError(str(exc), source=value) from None
    elif kind == "kn":
        try:
            src.family = kn_family(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        src.ideal = read_ideal(value)
    if src.arrangement is not None:
        src.family = flat_family(src.arrangement)
    if args.net:
        src.candidate = read_net(args.net)
    if src.candidate is not None and src.arrangement is not None and src.candidate.n != src.arrangement.n:
        raise UsageError(f"net candidate has {src.candidate.n} lines, arrangement {src.arrangement.n}")
    return src


def select_ideal(src: Source, which: str, dual: bool) -> MonomialIdeal:
    if which == "J":
        ideal = src.J()
    elif which == "J2":
        ideal = quadratic_part(src.J())
    elif which == "JX":
        ideal = j_x(src.need_candidate("JX"))
    elif which == "JPi":
        ideal = j_pi(src.need_candidate("JPi"))
    else:
        ideal = split_JY(src.need_arrangement("JY"), src.need_candidate("JY"))
    if dual:
        if ideal.is_zero:
            raise UsageError(f"{which} is the zero ideal; it has no Alexander dual")
        ideal = alexander_dual(ideal)
    return ideal


def _threads(args) -> int:
    if args.threads is not None:
        t = args.threads
    else:
        raw = os.environ.get("NETDUAL_THREADS", "1")
        try:
            t = int(raw)
        except ValueError:
            raise UsageError(f"NETDUAL_THREADS={raw!r} is not an integer") from None
    if t < 1:
        raise UsageError("thread count must be at least 1")
    return t


def _emit(out, args, text: str, payload) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _ideal_payload(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "generators": ideal.as_lists()}


def cmd_ideal(args, src, out, dual=False):
    ideal = select_ideal(src, args.ideal or "J", args.dual or dual)
    _emit(out, args, str(ideal), _ideal_payload(ideal))


def cmd_primary(args, src, out):
    ideal = select_ideal(src, args.ideal or "J", args.dual)
    if ideal.is_zero:
        raise UsageError("the zero ideal has no primary components")
    pd = primary_decomposition(ideal)
    _emit(out, args, str(pd), {"n": ideal.n, "components": pd.as_lists()})


def cmd_betti(args, src, out):
    ideal = select_ideal(src, args.ideal or "J", args.dual)
    field = FieldChoice.parse(args.field)
    table = betti_table(ideal, args.subject, field, args.exhaustive, _threads(args))
    if args.oracle:
        check = koszul_tor_oracle(ideal, field).as_subject(args.subject)
        if check.multigraded != table.multigraded:
            raise CrossCheckError("Hochster sweep and Koszul oracle disagree")
    if args.format == "json":
        out.write(table.to_json(args.multigraded) + "\n")
    else:
        out.write(table.text() + "\n")


def cmd_hilbert(args, src, out):
    ideal = select_ideal(src, args.ideal or "J", args.dual)
    series = hilbert_series(ideal)
    if args.kpoly:
        series = series.with_denominator(ideal.n)
    _emit(
        out, args, str(series),
        {"numerator": list(series.numerator.coeffs), "denominator_power": series.denominator_power},
    )


def cmd_fvector(args, src, out):
    ideal = select_ideal(src, args.ideal or "J", args.dual)
    cx = sr_complex(ideal)
    f = f_vector(cx)
    text = f"f = ({', '.join(map(str, f))})\nf(x) = {f_polynomial(cx).format('x', descending=True)}"
    _emit(out, args, text, {"f_vector": f, "dim": cx.dim})


def cmd_cutpoly(args, src, out):
    ideal = select_ideal(src, args.ideal or "J2", args.dual)
    try:
        c = cut_polynomial(ideal)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [f"c_{j} = {c[j]}" for j in range(2, c.degree + 1)]
    text = f"c(t) = {c.format('t', descending=True)}\n" + "\n".join(rows)
    _emit(out, args, text, {"coefficients": list(c.coeffs)})


def _verdict_text(v) -> str:
    return "PASS" if v.is_net else f"FAIL ({v.reason()})"


def cmd_net_check(args, src, out):
    arr = src.need_arrangement("net-check")
    c = src.need_candidate("net-check")
    dual, direct = net_check(arr, c)
    size = len(c.X)
    if direct.is_net:
        head = f"NET (k={c.k}, d={c.d}); |X|={size}=d²"
    else:
        head = f"NOT A NET (k={c.k}, d={c.d}); |X|={size}"
    text = f"{head}; dual criterion {_verdict_text(dual)}; direct criterion {_verdict_text(direct)}"
    payload = {
        "k": c.k, "d": c.d, "X_size": size, "is_net": direct.is_net,
        "dual": {"is_net": dual.is_net, "certificate": dual.certificate},
        "direct": {"is_net": direct.is_net, "certificate": direct.certificate},
    }
    _emit(out, args, text, payload)


def cmd_blocks_check(args, src, out):
    arr = src.need_arrangement("blocks-check")
    c = src.need_candidate("blocks-check")
    try:
        ok = blocks_normal_crossing(arr, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = "blocks cross normally" if ok else "some block has a multiple point"
    _emit(out, args, text, {"normal_crossing": ok})


def cmd_fy_slack(args, src, out):
    if src is not None:
        arr = src.need_arrangement("fy-slack")
        c = src.need_candidate("fy-slack")
        k, d, xs, mu = c.k, c.d, len(c.X), within_block_mu_sum(arr, c)
    else:
        if args.k is None or args.d is None:
            raise UsageError("fy-slack needs an arrangement with a net, or --k and --d")
        k, d = args.k, args.d
        xs = args.x_size if args.x_size is not None else d * d
        mu = args.mu_sum if args.mu_sum is not None else k * d * (d - 1) // 2
    try:
        slack = fy_slack(k, d, xs, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"slack = {slack} (k={k}, d={d}, |X|={xs}, mu sum={mu})"]
    payload = {"k": k, "d": d, "X_size": xs, "mu_sum": mu, "slack": slack}
    if mu == k * d * (d - 1) // 2 and xs == d * d and slack >= 0:
        extra = extra_fibers_required(NetCandidate(k, d, _trivial_blocks(k, d), ()))
        lines.append("extra singular fibers required" if extra else "blocks are the only singular fibers")
        payload["extra_fibers_required"] = extra
    _emit(out, args, "\n".join(lines), payload)


def _trivial_blocks(k: int, d: int) -> tuple[int, ...]:
    return tuple(((1 << d) - 1) << (b * d) for b in range(k))


def cmd_catalog(args, src, out):
    if src is None:
        names = available()
        _emit(out, args, "\n".join(names), {"entries": names})
        return
    arr = src.need_arrangement("catalog")
    c = src.candidate
    sep = "" if arr.n < 10 else "."
    points = " ".join(sep.join(map(str, p)) for p in arr.point_lists())
    lines = [f"{arr.n} lines; multiple points: {points or 'none'}"]
    lines.append(f"double points: {len(arr.double_points())}")
    if c is not None:
        lines.append(c.describe())
    payload = {"n": arr.n, "multiple_points": arr.point_lists()}
    if c is not None:
        payload["net"] = {"blocks": [one_based(b) for b in c.blocks], "X": [one_based(x) for x in c.X]}
    _emit(out, args, "\n".join(lines), payload)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb in ("catalog", "fy-slack") and not any(
            (args.catalog, args.name, args.arrangement, args.coords, args.graph, args.kn, args.ideal_file)
        ):
            src = None
        else:
            src = load_source(args)
        handler = {
            "ideal": cmd_ideal,
            "dual": lambda a, s, o: cmd_ideal(a, s, o, dual=True),
            "primary": cmd_primary,
            "betti": cmd_betti,
            "hilbert": cmd_hilbert,
            "fvector": cmd_fvector,
            "cutpoly": cmd_cutpoly,
            "net-check": cmd_net_check,
            "blocks-check": cmd_blocks_check,
            "fy-slack": cmd_fy_slack,
            "catalog": cmd_catalog,
        }[args.verb]
        handler(args, src, out)
        return 0
    except (UsageError, ParseError) as exc:
        err.write(f"netdual: error: {exc}\n")
        return 1
    except SizeLimitError as exc:
        err.write(f"netdual: refused: {exc}\n")
        return 2
    except CrossCheckError as exc:
        err.write(f"netdual: cross-check failed: {exc}\n")
        return 3
    except ValueError as exc:
        err.write(f"netdual: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
