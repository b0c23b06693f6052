# Copyright 2025, seifert-kappa contributors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Command line front end for the Seifert sphere invariants.

Every subcommand maps onto one operation of seifert_helpers, and the
verify subcommand runs named sweeps that recompute the closed forms and
identities the library is built around.
"""
import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import groupby
from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

from ovos_utils.log import LOG

from .seifert_helpers import (
    CATALOG_NAMES,
    EXCLUDED,
    N_FAMILY,
    OUTPUT_FORMATS,
    P_FAMILY,
    CosecantSumSpec,
    CyclotomicValue,
    DedekindDieterSpec,
    DedekindRademacherSpec,
    DedekindSpec,
    FixedPointData,
    LensSpaceData,
    LineBundleData,
    SeifertConfig,
    SeifertData,
    SeifertKappaError,
    alpha_invariant_lens,
    alpha_invariant_seifert,
    brieskorn_components,
    cobordism_list,
    cobordism_verdict,
    comparing_identity,
    correction_closed_form,
    correction_term,
    correction_vector,
    cosecant_closed_form,
    e8_cancellation,
    e8_expected_data,
    e8_fixed_point_data,
    eta_sign,
    eta_sign_brute,
    evaluate,
    family_sphere,
    h_cobordism_check,
    homology_sphere_fibration,
    kappa_set,
    min_free_stabilizations,
    numerically_equal,
    p_family_offset,
    rotation_number,
    rotation_closed_form,
    rotation_table,
    sigma0_via_cosecant,
    sigma_vector,
    verdict_report,
)
from .seifert_helpers.sums import BRUTE, COSECANT_TABLES, METHODS, RECIPROCITY, tabulated_residues
from .seifert_helpers.util import (
    parse_bundle,
    parse_family,
    parse_int_list,
    parse_rational,
    parse_seifert,
)

SUITES = ("correction-terms", "cosecant-tables", "alpha-equality", "rotation-table",
          "comparing", "e8", "reciprocity", "cobordisms")
ROTATION_COLUMNS = {"family", "n", "bundle", "rot"}


def _parse_pairs(text: str) -> List[tuple]:
    """"2,3;2,3;-2,3" -> [(2, 3), (2, 3), (-2, 3)]"""
    pairs = []
    for chunk in text.split(";"):
        if chunk.strip():
            values = parse_int_list(chunk)
            if len(values) != 2:
                raise ValueError(f"invalid pair: {chunk!r}")
            pairs.append(tuple(values))
    return pairs


def _lens_pair(text: str) -> Tuple[int, int]:
    values = parse_int_list(text)
    if len(values) != 2:
        raise ValueError(f"invalid lens data: {text!r}")
    return values[0], values[1]


def _thread_count(text: str) -> str:
    if text.lower() != "auto" and (not text.isdigit() or int(text) < 1):
        raise ValueError(f"invalid thread count: {text!r}")
    return text


def _argument(parse: Callable) -> Callable:
    """Wrap a text parser so argparse reports its message as a usage error."""
    def convert(text):
        try:
            return parse(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e)) from e
    convert.__name__ = parse.__name__
    return convert


class SeifertKappaCLI:
    """Main front end: one handler per subcommand, shared output emitters."""

    def __init__(self, config: SeifertConfig = None, out=None):
        self.config = config or SeifertConfig()
        self.out = out or sys.stdout

    # value rendering
    def _plain(self, value):
        if isinstance(value, bool) or value is None or isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, CyclotomicValue):
            if value.is_rational:
                return str(value.as_rational())
            return {"modulus": value.modulus,
                    "coefficients": {str(k): str(c) for k, c in value.coefficients.items()},
                    "approximation (non-authoritative)": value.approximate(self.config.digits)}
        if isinstance(value, dict):
            return {str(k): self._plain(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self._plain(v) for v in value]
        return str(value)

    def emit(self, rows: List[Dict]):
        """Write rows in the configured output format."""
        if self.config.output_format == "tex" and rows and \
                all(set(r) == ROTATION_COLUMNS for r in rows):
            self.out.write("\n".join(self._rotation_tex(rows)) + "\n")
            return
        rows = [self._plain(r) for r in rows]
        fmt = self.config.output_format
        if fmt == "json":
            payload = rows[0] if len(rows) == 1 else rows
            self.out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        elif fmt == "csv":
            columns = sorted({k for r in rows for k in r})
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
            writer.writeheader()
            for r in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v
                                 for k, v in r.items()})
            self.out.write(buf.getvalue())
        elif fmt == "tex":
            columns = sorted({k for r in rows for k in r})
            lines = ["\\begin{tabular}{|" + "c|" * len(columns) + "}", "\\hline",
                     " & ".join(columns) + " \\\\ \\hline\\hline"]
            for r in rows:
                lines.append(" & ".join(f"${r.get(k, '')}$" for k in columns) + " \\\\ \\hline")
            lines.append("\\end{tabular}")
            self.out.write("\n".join(lines) + "\n")
        else:
            for r in rows:
                self.out.write(" ".join(f"{k}={r[k]}" for k in sorted(r)) + "\n")

    @staticmethod
    def _tex_rational(x: Fraction) -> str:
        if x.denominator == 1:
            return str(x.numerator)
        sign = "-" if x < 0 else ""
        return f"{sign}\\tfrac{{{abs(x.numerator)}}}{{{x.denominator}}}"

    def _rotation_tex(self, rows: List[Dict]) -> List[str]:
        """One block per family: Y spans its rows, then n, E and rot(E)."""
        lines = ["\\begin{tabular}{|c|c|c|c|}", "\\hline",
                 "$Y$ & $n$ & $E$ & $\\mathrm{rot}(E)$ \\\\ \\hline\\hline"]
        for family, group in groupby(rows, key=lambda r: r["family"]):
            group = list(group)
            for i, r in enumerate(group):
                head = "" if i else \
                    f"\\multirow{{{len(group)}}}{{*}}{{$\\Sigma(2,3,{family})$}}"
                rule = "\\hline" if i == len(group) - 1 else "\\cline{2-4}"
                lines.append(f"{head} & ${r['n']}$ & ${r['bundle']}$ & "
                             f"${self._tex_rational(r['rot'])}$ \\\\ {rule}")
        lines.append("\\end{tabular}")
        return lines

    def _parallel(self, func: Callable, cells: list) -> list:
        with ThreadPoolExecutor(max_workers=self.config.threads) as pool:
            return list(pool.map(func, cells))

    # handlers
    def handle_sum(self, args) -> List[Dict]:
        x, y = args.x, args.y
        if args.family == "dedekind":
            spec = DedekindSpec(args.b, args.a)
        elif args.family == "rademacher":
            spec = DedekindRademacherSpec(args.b, args.a, x, y)
        elif args.family == "dieter":
            spec = DedekindDieterSpec(args.b, args.a, x, y)
        else:
            spec = CosecantSumSpec(args.q, args.r, args.p, args.eps)
        return [{"spec": str(spec), "method": args.method, "value": evaluate(spec, args.method)}]

    def handle_eta_sign(self, args) -> List[Dict]:
        Y = SeifertData(args.seifert)
        value = eta_sign_brute(Y, args.r, args.q) if args.brute else eta_sign(Y, args.r, args.q)
        return [{"seifert": Y, "r": args.r, "q": args.q, "value": value}]

    def handle_alpha(self, args) -> List[Dict]:
        if args.lens:
            L = LensSpaceData(args.p, *args.lens)
            return [{"lens": L, "value": alpha_invariant_lens(L)}]
        Y = SeifertData(args.seifert)
        return [{"seifert": Y, "p": args.p, "value": alpha_invariant_seifert(Y, args.p)}]

    def handle_correction(self, args) -> List[Dict]:
        Y = SeifertData(args.seifert)
        if args.L is not None:
            return [{"seifert": Y, "r": args.r, "L": args.L,
                     "value": correction_term(Y, args.r, args.L)}]
        v = correction_vector(Y, args.r, self.config.check_lifts)
        return [{"seifert": Y, "r": args.r, "L": L, "value": n} for L, n in v.entries]

    def handle_rotation(self, args) -> List[Dict]:
        if args.table:
            return [{"family": f, "n": n, "bundle": E, "rot": rot}
                    for f, n, E, rot in rotation_table(args.n_max)]
        if args.family:
            _, family = args.family
            return [{"family": family, "n": args.n, "bundle": E, "rot": rot}
                    for E, rot in brieskorn_components(family, args.n)]
        Y = SeifertData(args.seifert)
        e, eps = args.bundle
        E = LineBundleData(e, eps)
        return [{"seifert": Y, "bundle": E,
                 "rot": rotation_number(homology_sphere_fibration(Y), E)}]

    def handle_kappa(self, args) -> List[Dict]:
        sign, family = args.family
        if args.side:
            sign = 1 if args.side == "plus" else -1
        K = kappa_set(sign, family, args.n, args.p)
        return [{"family": family, "sign": sign, "n": args.n, "p": args.p,
                 "projected": [str(v) for v in K.projected],
                 "representatives": [str(v) for v in K.representatives],
                 "gradings": list(K.gradings)}]

    def handle_sigma(self, args) -> List[Dict]:
        d = FixedPointData(args.p, tuple(args.points), tuple(args.surfaces))
        row = {"p": args.p, "points": list(d.points), "surfaces": list(d.surfaces),
               "sigma": args.sigma, "S": list(sigma_vector(d, args.sigma))}
        if d.pseudofree:
            row["S0_via_cosecant"] = sigma0_via_cosecant(d, args.sigma)
        return [row]

    def handle_check_extension(self, args) -> List[Dict]:
        if args.inner is not None:
            return [cobordism_verdict(args.inner, args.outer, args.p)]
        return [verdict_report(args.manifold, args.n, args.p)]

    def handle_stab_bound(self, args) -> List[Dict]:
        certified, raw = min_free_stabilizations(args.kind, args.n, args.p)
        return [{"kind": args.kind, "n": args.n, "p": args.p,
                 "max_certified_free_stabilizations": certified, "threshold": raw}]

    def handle_h_cob(self, args) -> List[Dict]:
        Y = SeifertData(args.seifert)
        report = h_cobordism_check(Y, args.p, LensSpaceData(args.p, *args.lens))
        return [dict(report, seifert=Y, p=args.p)]

    def handle_e8_data(self, args) -> List[Dict]:
        pairs, _ = e8_cancellation(args.p)
        d = e8_fixed_point_data(args.p)
        return [{"p": args.p, "cancelled_pairs": len(pairs), "points": list(d.points)}]

    def handle_verify(self, args) -> List[Dict]:
        ps = args.p or [5, 7, 11, 13]
        ns = args.n or [1, 2]
        suite = getattr(self, "_suite_" + args.suite.replace("-", "_"))
        LOG.info(f"running verify suite {args.suite} for p={ps} n={ns}")
        rows = suite(ps, ns)
        for r in rows:
            if not r["pass"]:
                LOG.warning(f"fixture failed: {r}")
        return sorted(rows, key=lambda r: str(r["case"]))

    # verify suites
    def _suite_correction_terms(self, ps, ns) -> List[Dict]:
        def cell(c):
            family, p, n = c
            expected = correction_closed_form(family, p)
            actual = correction_term(family_sphere(family, n, p), p, Fraction(p, 2))
            return {"case": f"{family} p={p} n={n}", "expected": expected,
                    "actual": actual, "pass": actual == expected}
        return self._parallel(cell, [(f, p, n) for f in (N_FAMILY, P_FAMILY)
                                     for p in ps for n in ns])

    def _suite_cosecant_tables(self, ps, ns) -> List[Dict]:
        cells = []
        for (q, r) in sorted(COSECANT_TABLES):
            modulus, residues = tabulated_residues(q, r)
            for p in ps:
                if p > max(abs(q), r) and p % modulus in residues:
                    cells.append((q, r, p))

        def cell(c):
            q, r, p = c
            expected = cosecant_closed_form(q, r, p)
            actual = evaluate(CosecantSumSpec(q, r, p, -1), BRUTE)
            return {"case": f"S({q},{r},{p};-1)", "expected": expected,
                    "actual": actual, "pass": actual == expected}
        return self._parallel(cell, cells)

    def _suite_alpha_equality(self, ps, ns) -> List[Dict]:
        def cell(c):
            family, p, n = c
            Y = family_sphere(family, n, p)
            L = LensSpaceData(p, -2 if family == N_FAMILY else 2, 3)
            a, b = alpha_invariant_seifert(Y, p), alpha_invariant_lens(L)
            ok = a == b and numerically_equal(a, b, self.config.check_digits)
            return {"case": f"alpha(Q({p};{Y})) = alpha({L})", "pass": ok}
        return self._parallel(cell, [(f, p, n) for f in (N_FAMILY, P_FAMILY)
                                     for p in ps for n in ns])

    def _suite_rotation_table(self, ps, ns) -> List[Dict]:
        return self.check_rotation_rows(rotation_table(max(ns)))

    @staticmethod
    def check_rotation_rows(rows) -> List[Dict]:
        """Compare (family, n, bundle, rot) rows with the closed form of the family."""
        out = []
        for f, n, E, rot in rows:
            expected = rotation_closed_form(f, n, E.epsilons[-1])
            out.append({"case": f"{f} n={n} {E}", "expected": expected, "actual": rot,
                        "pass": rot == expected and (2 * rot).denominator == 1})
        return out

    def _suite_comparing(self, ps, ns) -> List[Dict]:
        def cell(c):
            kind, p, n = c
            lhs, rhs, offset = comparing_identity(kind, n, p)
            expected = 0 if kind == "N" else p_family_offset(p)
            return {"case": f"{kind} p={p} n={n}", "expected": expected,
                    "actual": offset, "pass": offset == expected}
        return self._parallel(cell, [(k, p, n) for k in ("N", "P") for p in ps for n in ns])

    def _suite_e8(self, ps, ns) -> List[Dict]:
        rows = []
        for p in ps:
            pairs, _ = e8_cancellation(p)
            ok = len(pairs) == 7 and e8_fixed_point_data(p) == e8_expected_data(p)
            rows.append({"case": f"E8 p={p}", "actual": len(pairs), "pass": ok})
        return rows

    def _suite_reciprocity(self, ps, ns) -> List[Dict]:
        specs = [DedekindSpec(b, a) for a in range(2, 40) for b in range(1, a) if gcd(a, b) == 1]
        specs += [DedekindRademacherSpec(b, a, Fraction(j, a), Fraction(0))
                  for a in (3, 5, 7, 9, 11) for b in (2, 4, 6, 8) for j in (1, 2)
                  if gcd(a, b) == 1]
        specs += [DedekindDieterSpec(b, a, Fraction(b, 5), Fraction(a, 5))
                  for a in (3, 4, 6, 7) for b in range(1, a) if gcd(a, b) == 1]
        specs += [CosecantSumSpec(q, 1, p, -1) for p in ps for q in range(1, p)
                  if (q - p) % 2 and gcd(q, p) == 1]

        def cell(spec):
            brute, fast = evaluate(spec, BRUTE), evaluate(spec, RECIPROCITY)
            return {"case": str(spec), "pass": brute == fast}
        return self._parallel(cell, specs)

    def _suite_cobordisms(self, ps, ns) -> List[Dict]:
        rows = []
        for p in ps:
            for m0, m1 in cobordism_list(p, max(ns)):
                v = cobordism_verdict(m0, m1, p)
                rows.append({"case": f"p={p} {m0}<{m1}", "actual": v["verdict"],
                             "pass": v["verdict"] == EXCLUDED})
        return rows


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seifert-kappa",
                                description="Equivariant invariants of Seifert homology spheres.")
    p.add_argument("--format", choices=OUTPUT_FORMATS, default=None, dest="output_format",
                   help="Output format (default from settings: json).")
    p.add_argument("--threads", type=_argument(_thread_count), default=None,
                   help="Worker threads for sweeps (SEIFERT_KAPPA_THREADS overrides).")
    p.add_argument("--check-lifts", action="store_true", default=None, dest="check_lifts",
                   help="Recompute correction vectors with the second alpha' lift.")
    p.add_argument("--verbose", action="store_true", help="Debug logging.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sum", help="Dedekind-type sums.")
    s.add_argument("--family", choices=("dedekind", "rademacher", "dieter", "cosecant"),
                   required=True)
    s.add_argument("--method", choices=METHODS, default=RECIPROCITY)
    for name in ("b", "a", "q", "r", "p"):
        s.add_argument(f"--{name}", type=int, default=0)
    s.add_argument("--x", type=_argument(parse_rational), default=Fraction(0))
    s.add_argument("--y", type=_argument(parse_rational), default=Fraction(0))
    s.add_argument("--eps", type=int, default=-1)

    s = sub.add_parser("eta-sign", help="Equivariant signature eta invariant.")
    s.add_argument("--seifert", type=_argument(parse_seifert), required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--q", type=int, default=1)
    s.add_argument("--brute", action="store_true", help="Sum over the cone points directly.")

    s = sub.add_parser("alpha", help="alpha-invariant of Q(p;Y) or of a lens space.")
    s.add_argument("--seifert", type=_argument(parse_seifert), default=None)
    s.add_argument("--lens", type=_argument(_lens_pair), default=None,
                   help="a,b of L(p;a,b), written --lens=-2,3 when a is negative")
    s.add_argument("--p", type=int, required=True)

    s = sub.add_parser("correction", help="Correction terms n_L.")
    s.add_argument("--seifert", type=_argument(parse_seifert), required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--L", type=_argument(parse_rational), default=None)

    s = sub.add_parser("rotation", help="Rotation numbers.")
    s.add_argument("--seifert", type=_argument(parse_seifert), default=None)
    s.add_argument("--bundle", type=_argument(parse_bundle), default=None,
                   help="(e;eps1,...,epsn)")
    s.add_argument("--family", type=_argument(parse_family), default=None)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--table", action="store_true")
    s.add_argument("--n-max", type=int, default=5, dest="n_max")

    s = sub.add_parser("kappa", help="Equivariant kappa sets.")
    s.add_argument("--family", type=_argument(parse_family), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--side", choices=("plus", "minus"), default=None)

    s = sub.add_parser("sigma", help="Signature defect vector of fixed-point data.")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--points", type=_argument(_parse_pairs), default=[], help="a,b;a,b;...")
    s.add_argument("--surfaces", type=_argument(_parse_pairs), default=[],
                   help="c,self_int;...")
    s.add_argument("--sigma", type=int, default=0)

    s = sub.add_parser("check-extension", help="Non-extension verdicts.")
    s.add_argument("--manifold", choices=CATALOG_NAMES, default="N")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--inner", type=int, default=None, help="m0 of Sigma(2,3,m0)")
    s.add_argument("--outer", type=int, default=None, help="m1 of Sigma(2,3,m1)")

    s = sub.add_parser("stab-bound", help="Certified free stabilization bound.")
    s.add_argument("--kind", choices=("N", "P"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)

    s = sub.add_parser("h-cob", help="h-cobordism criterion to a lens space.")
    s.add_argument("--seifert", type=_argument(parse_seifert), required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--lens", type=_argument(_lens_pair), required=True,
                   help="a,b of L(p;a,b), written --lens=-2,3 when a is negative")

    s = sub.add_parser("e8-data", help="Fixed-point data of E8 # S2xS2.")
    s.add_argument("--p", type=int, required=True)

    s = sub.add_parser("verify", help="Run a verification suite.")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--p", type=_argument(parse_int_list), default=None,
                   help="comma separated primes")
    s.add_argument("--n", type=_argument(parse_int_list), default=None,
                   help="comma separated n values")
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        LOG.set_level("DEBUG")
    try:
        config = SeifertConfig({"threads": args.threads,
                                "output_format": args.output_format,
                                "check_lifts": args.check_lifts})
        cli = SeifertKappaCLI(config, out)
        if args.command == "check-extension" and (args.inner is None) != (args.outer is None):
            parser.error("--inner and --outer go together")
        if args.command == "rotation" and not (args.table or args.family or
                                               (args.seifert and args.bundle)):
            parser.error("rotation needs --table, --family or --seifert with --bundle")
        if args.command == "alpha" and not (args.seifert or args.lens):
            parser.error("alpha needs --seifert or --lens")
        rows = getattr(cli, "handle_" + args.command.replace("-", "_"))(args)
        cli.emit(rows)
    except (SeifertKappaError, ValueError, KeyError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except Exception:
        LOG.exception("unexpected error")
        return 1
    if args.command == "verify" and not all(r["pass"] for r in rows):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
