"""Command-line interface: one subcommand per library surface.

Output is deterministic JSON (or CSV for gradient series) so scripts and
the acceptance harness can compare bytes.  Rationals are rendered "p/q".
Exit codes: 0 success, 1 usage errors, 2 domain errors such as a missing
conjecture flag or an enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import autos, charspace, complexes, gradients, lattices, plrep, words
from .errors import DomainError, ParseError

ENV_MAX_INDEX = "THOMPSON_SIGMA_MAX_INDEX"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this artifact reserves 2 for
    # domain errors, so remap through an exception.
    def error(self, message):
        raise _UsageError(message)


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_lattice(n: int, text: str) -> list[list[int]]:
    try:
        flat = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad lattice entry: {exc}") from exc
    if not flat or len(flat) % n:
        raise ParseError(
            f"lattice needs row-major entries in multiples of n = {n}, got {len(flat)}"
        )
    return [flat[i : i + n] for i in range(0, len(flat), n)]


def _emit(payload) -> None:
    print(json.dumps(payload))


def _cmd_normalize(args) -> int:
    w = words.parse_word(args.n, args.word)
    print(words.format_word(words.normal_form(w).to_word()))
    return 0


def _cmd_mul(args) -> int:
    u = words.rewrite_to_seminormal(words.parse_word(args.n, args.u))
    v = words.rewrite_to_seminormal(words.parse_word(args.n, args.v))
    print(words.format_word(words.multiply(u, v).to_word()))
    return 0


def _cmd_eq(args) -> int:
    u = words.parse_word(args.n, args.u)
    v = words.parse_word(args.n, args.v)
    _emit({"equal": words.are_equal(u, v)})
    return 0


def _cmd_eval_pl(args) -> int:
    w = words.parse_word(args.n, args.word)
    _emit(plrep.evaluate_word(w).to_quadruples())
    return 0


def _cmd_sigma(args) -> int:
    chi = charspace.parse_character(args.n, args.chi)
    result = charspace.in_sigma_m(chi, args.m, assume_conjecture=args.assume_sigma_m)
    _emit({"inSigma": result})
    return 0


def _cmd_classify_kernel(args) -> int:
    rows = _parse_lattice(args.n, args.lattice)
    report = charspace.kernel_finiteness(
        rows, m_max=args.m_max, assume_conjecture=args.assume_sigma_m
    )
    _emit(
        {
            "isFinitelyGenerated": report.is_finitely_generated,
            "maxCertifiedFType": report.max_certified_f_type,
            "witness": None
            if report.witness is None
            else [_frac(v) for v in report.witness.values],
            "assumedConjecture": report.assumed_conjecture,
        }
    )
    return 0


def _cmd_auto_matrix(args) -> int:
    mat = autos.matrix_A(args.n) if args.which == "A" else autos.matrix_C(args.n)
    _emit([list(row) for row in mat.entries])
    return 0


def _cmd_orbit(args) -> int:
    chi = charspace.parse_character(args.n, args.chi)
    orbit = autos.d_orbit(charspace.sphere_point(chi), cap=args.cap)
    points = sorted(p.values for p in orbit)
    _emit([[_frac(v) for v in values] for values in points])
    return 0


def _cmd_subgroups(args) -> int:
    cap_text = os.environ.get(ENV_MAX_INDEX)
    if cap_text is not None and args.max_index > int(cap_text):
        raise DomainError(
            f"--max-index {args.max_index} exceeds {ENV_MAX_INDEX}={cap_text}"
        )
    found = lattices.enumerate_subgroups(args.n, args.max_index)
    _emit([[entry for row in lat.basis for entry in row] for lat in found])
    return 0


def _tail_payload(vec: complexes.CellVector):
    if vec.tail is None:
        return None
    return {"slope": vec.tail.slope, "offset": vec.tail.offset, "start": vec.tail.start}


def _cmd_cells(args) -> int:
    lat = lattices.hnf(_parse_lattice(args.n, args.lattice), arity=args.n)
    vec, case = complexes.cells_for_subgroup_F(lat)
    _emit(
        {
            "counts": list(vec.prefix(args.m)),
            "tail": _tail_payload(vec),
            "case": case,
        }
    )
    return 0


def _cmd_bounds(args) -> int:
    lat = lattices.hnf(_parse_lattice(args.n, args.lattice), arity=args.n)
    report = complexes.d_bound(
        lat, d0_override=args.d0_override, chi_upto=args.m
    )
    _emit(
        {
            "dUpper": report.d_upper
            if report.d_upper is not None
            else report.d_upper_symbolic,
            "caseTag": report.case_tag,
            "defLower": report.def_lower,
            "defUpper": report.def_upper,
            "chiValues": None
            if report.chi_values is None
            else list(report.chi_values),
        }
    )
    return 0


def _parse_chain(text: str) -> lattices.ChainSpec:
    kind, _, param = text.partition(":")
    if kind in ("scaling", "coordinate"):
        try:
            p = int(param)
        except ValueError as exc:
            raise ParseError(f"bad chain parameter {param!r}") from exc
        return lattices.ChainSpec(kind, p=p)
    raise ParseError(f"unknown chain kind {kind!r} (use scaling:p or coordinate:p)")


def _cmd_gradient(args) -> int:
    spec = _parse_chain(args.chain)
    if args.kind == "rg":
        series = gradients.rank_gradient_series(
            spec, args.n, args.steps, d0_override=args.d0_override
        )
    elif args.kind == "dg":
        series = gradients.deficiency_gradient_series(spec, args.n, args.steps)
    else:
        series = gradients.chi_m_gradient_series(spec, args.m, args.n, args.steps)

    def upper_text(row):
        return _frac(row.upper) if row.upper is not None else row.upper_symbolic

    if args.format == "csv":
        print("s,index,lower,upper")
        for row in series.rows:
            print(f"{row.s},{row.index},{_frac(row.lower)},{upper_text(row)}")
    else:
        _emit(
            {
                "kind": series.kind,
                "m": series.m,
                "rows": [
                    {
                        "s": row.s,
                        "index": row.index,
                        "lower": _frac(row.lower),
                        "upper": upper_text(row),
                    }
                    for row in series.rows
                ],
            }
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thompson-sigma", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--n", type=int, required=True, help="family parameter n >= 2")
        return p

    p = add("normalize", _cmd_normalize, help="canonical normal form of a word")
    p.add_argument("--word", required=True)

    p = add("mul", _cmd_mul, help="product of two words, in seminormal form")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add("eq", _cmd_eq, help="decide whether two words are equal in the group")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add("eval-pl", _cmd_eval_pl, help="breakpoints of the PL map of a word")
    p.add_argument("--word", required=True)

    p = add("sigma", _cmd_sigma, help="Sigma^m membership of a character")
    p.add_argument("--chi", required=True, help="comma-separated rationals")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--assume-sigma-m", action="store_true")

    p = add("classify-kernel", _cmd_classify_kernel, help="finiteness type of a kernel subgroup")
    p.add_argument("--lattice", required=True, help="row-major integer entries")
    p.add_argument("--m-max", type=int, default=16)
    p.add_argument("--assume-sigma-m", action="store_true")

    p = add("auto-matrix", _cmd_auto_matrix, help="shift or flip matrix on characters")
    p.add_argument("--which", choices=("A", "C"), required=True)

    p = add("orbit", _cmd_orbit, help="orbit of a sphere point under shift and flip")
    p.add_argument("--chi", required=True)
    p.add_argument("--cap", type=int, default=1024)

    p = add("subgroups", _cmd_subgroups, help="all subgroup lattices up to an index")
    p.add_argument("--max-index", type=int, required=True)

    p = add("cells", _cmd_cells, help="exact cell counts for an n = 2 subgroup")
    p.add_argument("--lattice", required=True)
    p.add_argument("--m", type=int, default=complexes.DEFAULT_DIM_CAP)

    p = add("bounds", _cmd_bounds, help="generator and deficiency bounds")
    p.add_argument("--lattice", required=True)
    p.add_argument("--m", type=int, default=complexes.DEFAULT_DIM_CAP)
    p.add_argument("--d0-override", type=int)

    p = add("gradient", _cmd_gradient, help="gradient series along a chain")
    p.add_argument("--kind", choices=("rg", "dg", "chi"), required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--chain", required=True, help="scaling:p or coordinate:p")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--d0-override", type=int)

    return parser


_VALUE_FLAGS = {"--word", "--u", "--v", "--chi", "--lattice", "--chain"}


def _fuse_value_flags(argv: list[str]) -> list[str]:
    # let option values start with "-" (e.g. --chi -1,0) without tripping
    # argparse's option detection
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fuse_value_flags(list(argv)))
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
