"""Command line interface.

Commands::

    crjets analyze FILE [--at POINT] [--json PATH]
    crjets normalize FILE
    crjets profile FILE --max-order K
    crjets sweep FILE --direction FILE2 --t-grid LIST --points LIST
    crjets tables (--m M --N N | --codim N D K R)
    crjets verify-paper

Input files are TOML; see the README for the exact grammar.  Exit codes:
0 success, 1 input or parse error, 2 precondition failure (for example a
failed graph condition), 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

try:
    import tomllib as tomli
except ImportError:
    import tomli

from . import checks
from .genericity import DeformationFamily, deform_sweep
from .invariants import (K_double_prime, bound_constants, codim_A_r,
                         codim_B_r, minuses, pluses, profile)
from .jets import DefiningJet, Dimensions, Jet
from .normalform import ChartError, eliminate_harmonic, recentre, \
    substitution_residual
from .parser import ParseError, parse_constant, parse_polynomial
from .report import AnalysisReport, format_gq
from .scalars import GQ, ZERO
from .vforacle import degeneracy_oracle, finite_type_oracle, \
    strong_type_oracle


class InputError(ValueError):
    """Bad input file or expression (exit code 1)."""


class Manifold:
    """Parsed input: dimensions, exact polynomial components, basepoint."""

    def __init__(self, dims, components, basepoint):
        self.dims = dims
        self.components = components  # untruncated Jets
        self.basepoint = basepoint    # (z0 tuple of GQ, s0 tuple of Fraction)

    def defining_jet(self):
        comps = [c.truncate(self.dims.k) for c in self.components]
        return DefiningJet(self.dims, comps)

    def polynomial_jet(self):
        return DefiningJet(self.dims, self.components)


def load_manifold(path, order=None):
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    except tomli.TOMLDecodeError as exc:
        raise InputError("%s: %s" % (path, exc))
    try:
        section = data["manifold"]
        n = int(section["n"])
        d = int(section["d"])
        k = int(order if order is not None else section["k"])
        exprs = section["phi"]
    except KeyError as exc:
        raise InputError("%s: missing key %s" % (path, exc))
    if n < 1 or d < 1 or k < 1:
        raise InputError("%s: n, d, k must be positive" % path)
    if not isinstance(exprs, list) or len(exprs) != d:
        raise InputError("%s: phi must list exactly d = %d expressions"
                         % (path, d))
    dims = Dimensions(n, d, k)
    comps = []
    for c, text in enumerate(exprs):
        try:
            series = parse_polynomial(text, n, d)
        except ParseError as exc:
            raise InputError("%s: phi[%d]: %s" % (path, c, exc))
        jet = Jet(dims, series)
        if not jet.is_real():
            raise InputError("%s: phi[%d]: component not formally real"
                             % (path, c))
        comps.append(jet)
    basepoint = _parse_point(section.get("basepoint"), dims, path)
    return Manifold(dims, comps, basepoint)


def _parse_point(raw, dims, where):
    n, d = dims.n, dims.d
    if raw is None:
        return (tuple(ZERO for _ in range(n)),
                tuple(Fraction(0) for _ in range(d)))
    if isinstance(raw, str):
        raw = [part.strip() for part in raw.replace(";", ",").split(",")]
    if len(raw) != n + d:
        raise InputError("%s: basepoint needs %d entries (z block then s "
                         "block), got %d" % (where, n + d, len(raw)))
    try:
        vals = [parse_constant(str(entry)) for entry in raw]
    except ParseError as exc:
        raise InputError("%s: basepoint: %s" % (where, exc))
    z0 = tuple(vals[:n])
    s_part = vals[n:]
    for v in s_part:
        if not v.is_real():
            raise InputError("%s: basepoint s entries must be real" % where)
    return z0, tuple(v.re for v in s_part)


def _point_is_origin(point):
    z0, s0 = point
    return not any(z0) and not any(s0)


def _analyze(manifold, seed=None):
    dims = manifold.dims
    timings = {}
    start = time.perf_counter()
    if _point_is_origin(manifold.basepoint):
        phi = manifold.defining_jet()
    else:
        phi = recentre(manifold.polynomial_jet(), manifold.basepoint)
    h, psi = eliminate_harmonic(phi)
    timings["normalize"] = _ms(start)

    start = time.perf_counter()
    residual = substitution_residual(phi, h, psi)
    residual_zero = all(r.is_zero() for r in residual)
    timings["residual"] = _ms(start)

    start = time.perf_counter()
    p = profile(psi)
    timings["profile"] = _ms(start)

    start = time.perf_counter()
    oracle_r1 = degeneracy_oracle(psi)
    oracle_r2 = strong_type_oracle(psi)
    finite = finite_type_oracle(psi)
    timings["oracle"] = _ms(start)

    z0, s0 = manifold.basepoint
    basepoint = [format_gq(c) for c in z0] + [format_gq(GQ(s)) for s in s0]
    return AnalysisReport(
        dims={"n": dims.n, "d": dims.d, "N": dims.N, "m": dims.m,
              "k": dims.k},
        basepoint=basepoint,
        r1=list(p.r1),
        r2=list(p.r2),
        nondeg_order=p.nondeg_order,
        strong_type=p.strong_type,
        finite_type=finite,
        certificates={
            "normal_form_residual_zero": residual_zero,
            "oracle_agreement": p.r1 == oracle_r1 and p.r2 == oracle_r2,
        },
        seed=seed,
        timings_ms=timings,
    )


def _ms(start):
    return int((time.perf_counter() - start) * 1000)


# -- commands ------------------------------------------------------------


def cmd_analyze(args):
    manifold = load_manifold(args.file)
    if args.at is not None:
        manifold.basepoint = _parse_point(args.at, manifold.dims, "--at")
    report = _analyze(manifold)
    print(report.render_human())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    return 0


def cmd_normalize(args):
    manifold = load_manifold(args.file)
    phi = manifold.defining_jet()
    h, psi = eliminate_harmonic(phi)
    dims = manifold.dims
    print("coordinate change w = h(z', w'):")
    for c in range(dims.d):
        print("  h_%d = %s" % (c + 1, _render_series(h[c], dims, "zw")))
    print("normalized defining jet:")
    for c in range(dims.d):
        print("  psi_%d = %s"
              % (c + 1, _render_series(psi.components[c].series, dims, "m")))
    return 0


def _render_series(series, dims, space):
    if space == "zw":
        names = ["z%d" % (j + 1) for j in range(dims.n)] \
            + ["w%d" % (c + 1) for c in range(dims.d)]
    else:
        names = ["z%d" % (j + 1) for j in range(dims.n)] \
            + ["zb%d" % (j + 1) for j in range(dims.n)] \
            + ["s%d" % (c + 1) for c in range(dims.d)]
    if not series.coeffs:
        return "0"
    parts = []
    for key in sorted(series.coeffs, key=lambda key: (sum(key), key)):
        mono = "*".join(names[i] if e == 1 else "%s^%d" % (names[i], e)
                        for i, e in enumerate(key) if e)
        c = format_gq(series.coeffs[key])
        if "+" in c or ("-" in c[1:]):
            c = "(%s)" % c
        parts.append(c if not mono else "%s*%s" % (c, mono))
    return " + ".join(parts)


def cmd_profile(args):
    manifold = load_manifold(args.file, order=args.max_order)
    phi = manifold.defining_jet()
    _, psi = eliminate_harmonic(phi)
    p = profile(psi)
    print("r1 (j=1..%d): %s" % (p.k - 1, list(p.r1)))
    print("r2 (j=1..%d): %s" % (p.k, list(p.r2)))
    print("nondegeneracy order: %s"
          % ("none" if p.nondeg_order is None else p.nondeg_order))
    print("strong type: %s"
          % ("none" if p.strong_type is None else p.strong_type))
    return 0


def _parse_fraction_list(text, what):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise InputError("bad %s entry %r" % (what, part))
    if not out:
        raise InputError("empty %s" % what)
    return out


def _parse_points(text, dims):
    points = []
    for chunk in text.split(":"):
        chunk = chunk.strip()
        if not chunk:
            continue
        raw = [p.strip() for p in chunk.replace(";", ",").split(",")]
        points.append(_parse_point(raw, dims, "--points"))
    if not points:
        raise InputError("empty --points")
    return tuple(points)


def cmd_sweep(args):
    manifold = load_manifold(args.file)
    direction_m = load_manifold(args.direction)
    if (direction_m.dims.n, direction_m.dims.d) != (manifold.dims.n,
                                                    manifold.dims.d):
        raise InputError("direction dimensions do not match the base")
    grid = tuple(_parse_fraction_list(args.t_grid, "--t-grid"))
    points = _parse_points(args.points, manifold.dims)
    family = DeformationFamily(manifold.polynomial_jet(),
                               tuple(direction_m.components), grid, points)
    report = deform_sweep(family)
    for e in report.entries:
        z0, s0 = e.basepoint
        bp = ", ".join([format_gq(c) for c in z0]
                       + [format_gq(GQ(s)) for s in s0])
        if not e.chart_ok:
            print("t=%s at (%s): chart failure" % (e.t, bp))
            continue
        p = e.profile
        print("t=%s at (%s): r1=%s r2=%s nondeg=%s strong=%s"
              % (e.t, bp, list(p.r1), list(p.r2),
                 "none" if p.nondeg_order is None else p.nondeg_order,
                 "none" if p.strong_type is None else p.strong_type))
    print("entries=%d degenerate=%d non_strong_type=%d"
          % (len(report.entries), report.degenerate_count,
             report.non_strong_type_count))
    return 0


def cmd_tables(args):
    if args.codim is not None:
        n, d, k, r = args.codim
        if not (n >= 1 and d >= 1 and k >= 2 and 0 <= r):
            raise InputError("--codim needs n, d >= 1, k >= 2, r >= 0")
        print("codim_A_r(n=%d, d=%d, k=%d, r=%d) = %d"
              % (n, d, k, r, codim_A_r(n, d, k, r)))
        if r <= d:
            print("codim_B_r(n=%d, d=%d, k=%d, r=%d) = %d"
                  % (n, d, k, r, codim_B_r(n, d, k, r)))
        print("minuses(n=%d, d=%d, k=%d) = %d" % (n, d, k, minuses(n, d, k)))
        print("pluses(n=%d, d=%d, k=%d) = %d" % (n, d, k, pluses(n, d, k)))
        print("K''(n=%d, k=%d) = %d" % (n, k, K_double_prime(n, k)))
        return 0
    if args.m is None or args.N is None:
        raise InputError("tables needs either --m and --N, or --codim")
    try:
        k1, k2, k2p = bound_constants(args.m, args.N)
    except ValueError as exc:
        raise InputError(str(exc))
    print("k1(m=%d, N=%d) = %d" % (args.m, args.N, k1))
    print("k2(m=%d, N=%d) = %d" % (args.m, args.N, k2))
    print("k2'(m=%d, N=%d) = %d" % (args.m, args.N, k2p))
    return 0


def cmd_verify(args):
    results = checks.run_all()
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print("%s %s: %s" % (status, r.name, r.detail))
        if not r.passed:
            failed += 1
    print("%d/%d checks passed" % (len(results) - failed, len(results)))
    return 0 if failed == 0 else 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crjets",
        description="Exact invariants of generic submanifolds "
                    "Im w = phi(z, zbar, Re w)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one "
                                       "manifold file")
    p.add_argument("file")
    p.add_argument("--at", help="basepoint: n complex then d real entries, "
                                "comma separated")
    p.add_argument("--json", help="also write the JSON report here")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("normalize", help="print the harmonic-eliminating "
                                         "coordinate change")
    p.add_argument("file")
    p.set_defaults(fn=cmd_normalize)

    p = sub.add_parser("profile", help="r1/r2 sequences at a chosen order")
    p.add_argument("file")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(fn=cmd_profile)

    p = sub.add_parser("sweep", help="deformation sweep over a t-grid and "
                                     "basepoint list")
    p.add_argument("file")
    p.add_argument("--direction", required=True)
    p.add_argument("--t-grid", required=True,
                   help="comma separated exact rationals")
    p.add_argument("--points", required=True,
                   help="colon separated points; each point is n complex "
                        "then d real entries, comma separated")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("tables", help="bound constants and stratum "
                                      "codimensions")
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--codim", type=int, nargs=4,
                   metavar=("n", "d", "k", "r"))
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("verify-paper", help="run the built-in example "
                                            "suite")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, ParseError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except ChartError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # anything else is an internal failure
        print("internal error: %s: %s" % (type(exc).__name__, exc),
              file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
