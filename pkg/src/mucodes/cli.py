"""Command-line interface: construct / verify / bounds / oracle / encode /
decode / summary.

Exit codes: 0 success, 1 property check failed, 2 bad parameters,
3 input/output failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import algebra, blockcoding, bounds, constructions, verify
from .seqcore import (
    Alphabet,
    AlphabetError,
    Seq,
    from_str,
    read_sequences,
    write_sequences,
)

EXIT_PROPERTY_FAILED = 1
EXIT_BAD_PARAMS = 2
EXIT_IO = 3


class PropertyFailure(Exception):
    pass


def _fmt(value) -> str:
    """Deterministic cell formatting: 12 significant digits for reals."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.12g}"


def _read_lines(path: str) -> List[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read().splitlines()


def _write_text(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_poly(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ValueError(f"bad polynomial coefficient list {text!r}")


# --- construct ---

def _build_code(args) -> constructions.Code:
    name = args.name
    budget = args.budget
    if name == "dyck-mu":
        return constructions.dyck_mu(args.n, args.height_cap, budget=budget)
    if name == "levenshtein-mu":
        return constructions.levenshtein_mu(args.q, args.n, args.ell, budget=budget)
    if name == "wmu-concat":
        return constructions.default_wmu_component(args.n, args.kappa, budget=budget)
    if name == "balanced-wmu4":
        return constructions.balanced_wmu4(args.n, args.kappa, budget=budget)
    if name == "prefix-balanced-wmu":
        if args.height_cap is None:
            raise ValueError("prefix-balanced-wmu needs --height-cap")
        return constructions.prefix_balanced_wmu(
            args.n, args.kappa, args.height_cap, budget=budget
        )
    if name == "apd-mu2":
        return constructions.apd_mu2(args.f, args.p, args.ell, budget=budget)
    if name == "cyclic-coset-wmu":
        base = _cyclic_from_args(args)
        return constructions.cyclic_coset_wmu(base, budget=budget)
    if name == "parsing-ecc-mu":
        base = _cyclic_from_args(args)
        return constructions.parsing_ecc_mu(base, args.ell, args.t, budget=budget)
    if name == "v1-bal-ecc-wmu4":
        base = _cyclic_from_args(args, default_q=4)
        return constructions.v1_bal_ecc_wmu4(base, budget=budget)
    raise ValueError(f"unknown construction {name!r}")


def _cyclic_from_args(args, default_q: Optional[int] = None) -> algebra.CyclicCode:
    if args.gen_poly is None or args.n is None:
        raise ValueError("this construction needs --gen-poly and --n (component length)")
    q = default_q or args.q
    field = algebra.F2 if q == 2 else algebra.F4
    return algebra.CyclicCode(field, args.n, _parse_poly(args.gen_poly))


def cmd_construct(args) -> int:
    code = _build_code(args)
    header_lines = [
        f"# profile: {code.profile.describe()} provenance={code.provenance}"
    ]
    body = "\n".join(header_lines + [str(m) for m in code.members]) + "\n"
    _write_text(args.out, body)
    return 0


# --- verify ---

def _parse_prop(text: str):
    parts = text.split(":")
    name = parts[0]
    if name in ("mu", "bal") and len(parts) == 1:
        return (name, None)
    if name in ("wmu", "dist", "apd") and len(parts) == 2:
        return (name, int(parts[1]))
    raise ValueError(f"bad property spec {text!r} (expected mu|wmu:K|bal|dist:D|apd:F)")


def cmd_verify(args) -> int:
    members = read_sequences(_read_lines(args.file))
    if not members:
        raise ValueError("no sequences in input")
    for spec in args.prop:
        name, param = _parse_prop(spec)
        if name == "mu":
            report = verify.is_mu_code(members)
        elif name == "wmu":
            report = verify.is_kappa_wmu(members, param)
        elif name == "bal":
            report = verify.is_balanced_code(members)
        elif name == "dist":
            d = verify.min_hamming_distance(members)
            ok = d >= param
            report = verify.PropertyReport(
                f"min-distance>={param}", ok,
                None if ok else f"minimum distance is {d}",
            )
        else:
            report = verify.is_f_apd(members, param)
        if not report:
            print(
                f"FAIL {report.property_name}: {report.counterexample}",
                file=sys.stderr,
            )
            raise PropertyFailure(report.property_name)
        print(f"ok {report.property_name}")
    return 0


# --- bounds ---

def _parse_sweep(text: str) -> Tuple[str, range]:
    try:
        key, spans = text.split("=")
        lo, hi = spans.split("..")
        return key, range(int(lo), int(hi) + 1)
    except ValueError:
        raise ValueError(f"bad sweep spec {text!r} (expected e.g. d=1..25)")


def _bound_report(which: str, args) -> bounds.BoundReport:
    if which == "mu":
        return bounds.mu_bounds(args.q, args.n)
    if which == "wmu":
        return bounds.wmu_bounds(args.q, args.n, args.kappa)
    if which == "constrained-gv":
        return bounds.constrained_gv_wmu(args.q, args.n, args.kappa, args.d)
    if which == "gv-rate":
        rate = bounds.gv_rate(args.n, args.d)
        return bounds.BoundReport(
            "gv-rate", (("n", args.n), ("d", args.d)), lower=rate, upper=None
        )
    if which == "gyorfi":
        return bounds.gyorfi_lb(args.n, args.d, args.w)
    if which == "balanced-wmu":
        return bounds.balanced_wmu_bounds(args.q, args.n, args.kappa)
    if which == "apd-mu":
        return bounds.apd_mu_bounds(args.n)
    if which == "dyck-asymptotic":
        value = bounds.dyck_asymptotic(args.n, args.height_cap)
        return bounds.BoundReport(
            "dyck-asymptotic",
            (("n", args.n), ("D", args.height_cap)),
            lower=None,
            upper=value,
            note="asymptotic count, not a bound pair",
        )
    if which == "avoid-string":
        value = bounds.avoid_string_lb(args.q, args.n, args.ns, args.t)
        return bounds.BoundReport(
            "avoid-string",
            (("q", args.q), ("n", args.n), ("ns", args.ns), ("t", args.t)),
            lower=value,
        )
    if which == "bch-rates":
        rate, optimal = bounds.bch_wmu_rates(args.m, args.t)
        return bounds.BoundReport(
            "bch-rates", (("m", args.m), ("t", args.t)), lower=rate, upper=optimal,
            note="lower = construction rate, upper = optimal-order rate bound",
        )
    raise ValueError(f"unknown bound {which!r}")


def _report_row(report: bounds.BoundReport) -> dict:
    row = dict(report.params)
    row["lower"] = report.lower
    row["upper"] = report.upper
    row["log2_rate_lower"] = report.log2_rate_lower
    row["log2_rate_upper"] = report.log2_rate_upper
    return row


def cmd_bounds(args) -> int:
    reports = []
    sweep_key = None
    if args.sweep:
        sweep_key, values = _parse_sweep(args.sweep)
        for v in values:
            setattr(args, sweep_key.replace("-", "_"), v)
            reports.append(_bound_report(args.which, args))
    else:
        reports.append(_bound_report(args.which, args))
    rows = [_report_row(r) for r in reports]
    param_keys = [k for k, _ in reports[0].params]
    columns = param_keys + ["lower", "upper", "log2_rate_lower", "log2_rate_upper"]
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(row.get(c)) for c in columns))
    csv_text = "\n".join(lines) + "\n"
    if args.csv:
        _write_text(args.csv, csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.fig:
        from . import plots

        key = sweep_key or param_keys[-1]
        plots.render_bound_figure(
            rows, key, args.fig, title=reports[0].name, log2_rate=True
        )
    return 0


# --- oracle ---

def cmd_oracle(args) -> int:
    size, witness = verify.oracle_max_code_size(
        args.q,
        args.n,
        kappa=args.kappa,
        balanced=args.balanced,
        min_distance=args.min_distance,
        apd=args.apd,
    )
    print(f"maximum size: {size}")
    for w in witness:
        print(str(w))
    return 0


# --- encode / decode ---

def _book_from_args(args) -> blockcoding.AddressBook:
    if args.gen_poly is not None:
        field = algebra.F2 if args.q == 2 else algebra.F4
        base = algebra.CyclicCode(field, args.n, _parse_poly(args.gen_poly))
        rows = tuple(base.parity_check_rows())
        if args.syndrome is None:
            raise ValueError("syndrome mode needs --syndrome")
        target = tuple(int(c) for c in args.syndrome.split(","))
        members = None
        if args.addresses:
            members = tuple(read_sequences(_read_lines(args.addresses)))
        return blockcoding.AddressBook(
            n=args.n,
            alphabet=Alphabet(args.q),
            members=members,
            field=field,
            parity_rows=rows,
            target_syndrome=target,
        )
    if not args.addresses:
        raise ValueError("need --addresses or --gen-poly/--syndrome")
    members = read_sequences(_read_lines(args.addresses))
    return blockcoding.AddressBook(
        n=len(members[0]), alphabet=members[0].alphabet, members=tuple(members)
    )


def _code_from_file(path: str, kappa: int) -> constructions.Code:
    members = read_sequences(_read_lines(path))
    report = verify.is_kappa_wmu(members, kappa)
    if not report:
        raise PropertyFailure(
            f"code file fails {report.property_name}: {report.counterexample}"
        )
    profile = constructions.ConstraintProfile(
        mu=(kappa == 1), wmu=kappa, sources=(("wmu", "verify:cli"),)
    )
    return constructions.make_code(members, profile, f"file:{path}")


def cmd_encode(args) -> int:
    if args.scheme == "a":
        code = _code_from_file(args.code, args.kappa)
        book = _book_from_args(args)
        blocks = read_sequences(_read_lines(args.infile))
        block = blockcoding.scheme_a_encode(code, book, blocks)
    elif args.scheme == "b":
        code = _code_from_file(args.code, args.kappa)
        book = _book_from_args(args)
        message = read_sequences(_read_lines(args.infile))
        block = blockcoding.scheme_b_encode(code, book, args.t, args.r, message)
    elif args.scheme == "c":
        c1_members = read_sequences(_read_lines(args.addresses))
        c2_members = read_sequences(_read_lines(args.code))
        trivial = constructions.ConstraintProfile()
        c1 = constructions.make_code(c1_members, trivial, "file:addresses")
        c2 = constructions.make_code(c2_members, trivial, "file:code")
        _, generator = blockcoding.scheme_c_build(c1, c2)
        lines = read_sequences(_read_lines(args.infile))
        if len(lines) % 2 != 0:
            raise ValueError("scheme c input alternates free/payload component lines")
        frees = lines[0::2]
        payloads = lines[1::2]
        block = generator.build(frees, payloads)
    elif args.scheme == "d":
        book = _book_from_args(args)
        digits = _read_digit_string(args.infile)
        head_digits, tail_digits = digits[: args.n - 1], digits[args.n - 1 :]
        head = Seq(book.alphabet, tuple(head_digits))
        block = blockcoding.scheme_d_encode(book, head, tail_digits)
    else:
        raise ValueError(f"unknown scheme {args.scheme!r}")
    _write_text(args.out, write_sequences([block.payload], header=f"scheme {args.scheme}"))
    return 0


def _read_digit_string(path: str) -> List[int]:
    for line in _read_lines(path):
        line = line.strip()
        if line and not line.startswith("#"):
            return [int(c) for c in line]
    raise ValueError("no digit string in input")


def cmd_decode(args) -> int:
    if args.scheme == "b":
        code = _code_from_file(args.code, args.kappa)
        book = _book_from_args(args)
        received = read_sequences(_read_lines(args.infile))
        if len(received) != 1:
            raise ValueError("scheme b decode expects one payload sequence")
        message = blockcoding.scheme_b_decode(
            code, book, args.t, args.r, args.s, received[0]
        )
        _write_text(args.out, write_sequences(message, header="scheme b message"))
        return 0
    if args.scheme == "d":
        book = _book_from_args(args)
        received = read_sequences(_read_lines(args.infile))
        if len(received) != 1:
            raise ValueError("scheme d decode expects one payload sequence")
        head, digits = blockcoding.scheme_d_decode(book, received[0])
        text = "".join(str(s) for s in head.symbols) + "".join(str(d) for d in digits)
        _write_text(args.out, text + "\n")
        return 0
    raise ValueError(f"decode supports schemes b and d, not {args.scheme!r}")


# --- summary ---

SUMMARY_ROWS = [
    ("dyck-mu", "binom(n,n/2)/(2(n-1))", "MU, balanced"),
    ("levenshtein-mu", "~ c_q q^n / n", "MU"),
    ("parsing-ecc-mu", "|component code|", "MU, distance d"),
    ("wmu-concat", "|MU core| * q^(kappa-1)", "kappa-WMU"),
    ("cyclic-coset-wmu", "q^(kappa-1)", "kappa-WMU, distance d"),
    ("interleaved-ecc-mu", "run-limited 2^kappa", "MU, distance 2t+1"),
    ("balanced-wmu4", "binom(n,n/2) |C2|", "balanced, kappa-WMU"),
    ("prefix-balanced-wmu", "A(kappa-1) Dyck(...,D) 2^n", "balanced, kappa-WMU, prefix-D"),
    ("apd-mu2", "|C1| |C2|^(2p-1)", "MU, f-APD"),
    ("v1-bal-ecc-wmu4", "4^(kappa-1)", "balanced, kappa-WMU, distance 2d"),
    ("v2-bal-ecc-wmu4", "|C1| |C2|", "balanced, kappa-WMU, distance d"),
    ("apd-bal-mu4", "|C1| |C2|", "balanced, MU, f-APD"),
    ("concat-seed", "prod |C_i|", "inherits seed properties, 2f-APD"),
]


def cmd_summary(args) -> int:
    name_w = max(len(r[0]) for r in SUMMARY_ROWS)
    size_w = max(len(r[1]) for r in SUMMARY_ROWS)
    print(f"{'construction':<{name_w}}  {'size':<{size_w}}  properties")
    print("-" * (name_w + size_w + 14))
    for name, size, props in SUMMARY_ROWS:
        print(f"{name:<{name_w}}  {size:<{size_w}}  {props}")
    return 0


# --- parser plumbing ---

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mucodes",
        description="Constrained address codes for DNA data storage: "
        "construct, verify, bound, and encode with them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and print/write it")
    c.add_argument("name", choices=[
        "dyck-mu", "levenshtein-mu", "wmu-concat", "balanced-wmu4",
        "prefix-balanced-wmu", "apd-mu2", "cyclic-coset-wmu",
        "parsing-ecc-mu", "v1-bal-ecc-wmu4",
    ])
    c.add_argument("--n", type=int)
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--kappa", type=int, default=1)
    c.add_argument("--ell", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--f", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--height-cap", type=int)
    c.add_argument("--gen-poly", help="comma-separated coefficients, ascending degree")
    c.add_argument("--budget", type=int, default=constructions.DEFAULT_MEMBER_BUDGET)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check properties of a sequence file")
    v.add_argument("file")
    v.add_argument("--prop", action="append", required=True,
                   help="mu | wmu:K | bal | dist:D | apd:F (repeatable)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="evaluate closed-form bounds, CSV/figure export")
    b.add_argument("--which", required=True, choices=[
        "mu", "wmu", "constrained-gv", "gv-rate", "gyorfi", "balanced-wmu",
        "apd-mu", "dyck-asymptotic", "avoid-string", "bch-rates",
    ])
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--n", type=int)
    b.add_argument("--kappa", type=int, default=1)
    b.add_argument("--d", type=int)
    b.add_argument("--w", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("--ns", type=int)
    b.add_argument("--height-cap", type=int)
    b.add_argument("--sweep", help="e.g. d=1..25")
    b.add_argument("--csv")
    b.add_argument("--fig", help="write a figure of the same rows (PNG/PDF by extension)")
    b.set_defaults(func=cmd_bounds)

    o = sub.add_parser("oracle", help="exact maximum code size by exhaustive search")
    o.add_argument("--q", type=int, default=2)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--kappa", type=int, default=1)
    o.add_argument("--balanced", action="store_true")
    o.add_argument("--min-distance", type=int)
    o.add_argument("--apd", type=int)
    o.set_defaults(func=cmd_oracle)

    for cmd_name, func in (("encode", cmd_encode), ("decode", cmd_decode)):
        e = sub.add_parser(cmd_name, help=f"{cmd_name} information blocks")
        e.add_argument("--scheme", required=True, choices=["a", "b", "c", "d"])
        e.add_argument("--addresses", help="address sequence file")
        e.add_argument("--code", help="code sequence file (schemes a/b: the WMU code)")
        e.add_argument("--kappa", type=int, default=1)
        e.add_argument("--gen-poly", help="cyclic code for syndrome-mode addresses")
        e.add_argument("--syndrome", help="target syndrome, comma-separated")
        e.add_argument("--n", type=int, help="address length (syndrome mode)")
        e.add_argument("--q", type=int, default=2)
        e.add_argument("--t", type=int)
        e.add_argument("--r", type=int)
        e.add_argument("--s", type=int)
        e.add_argument("--in", dest="infile", required=True)
        e.add_argument("--out")
        e.set_defaults(func=func)

    s = sub.add_parser("summary", help="table of constructions, sizes, and features")
    s.set_defaults(func=cmd_summary)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PropertyFailure as exc:
        print(f"property check failed: {exc}", file=sys.stderr)
        return EXIT_PROPERTY_FAILED
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, algebra.BudgetExceededError,
            constructions.MemberBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
