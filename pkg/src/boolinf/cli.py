"""Command-line front end.

Usage::

    boolinf --tt 0001 --set 1,2 --measure all
    boolinf --anf "x1*x2 + x3*x4" --n 4 --t 1 --t 2 --characterize --format json
    boolinf --hex 8 --n 2 --spectrum walsh

Exactly one of ``--tt``, ``--hex``, ``--anf`` selects the function (``--n`` is
required for hex and ANF input).  Variable sets are 1-based.  Exact values are
reported as ``num / 2**log2_den``; when a subset average has a denominator that
is not a power of two the entry carries ``den`` instead and ``log2_den`` is
null.

JSON schema (key order is fixed)::

    {"n", "weight",
     "measures": [{"measure", "subset" | "t", "num", "log2_den", ["den",] "float"}],
     "characterization": {...} | null,
     ["geometry": {...}], ["entropy": {...}],
     ["spectrum": {"kind", "values": [{"index", "numerator", "log2_denominator", "float"}]}],
     "provenance": {"input", "value", "tool"}, "version"}

Exit status: 0 success, 2 usage error (bad or conflicting input text),
3 domain error (arguments outside an operation's range).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .characterizations import characterize, fei_ratio, fourier_entropy
from .core import (
    MAX_VARIABLES,
    BooleanFunction,
    DomainError,
    ParseError,
    VariableSubset,
    build_from_anf,
    build_from_bits,
    build_from_hex,
    weight,
)
from .geometry import edge_boundary, path_census, t_influence_by_paths
from .influence import measure, t_measure
from .spectra import AUTOCORR_DIRECT_MAX_N, autocorrelation_spectrum, walsh_spectrum

SCHEMA_VERSION = 1
CLI_MEASURES = ("ac", "pi", "bl", "gs", "fb")
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


@dataclass
class ReportOptions:
    subsets: list[tuple[int, ...]] = field(default_factory=list)
    sizes: list[int] = field(default_factory=list)
    measures: list[str] = field(default_factory=list)
    characterize: bool = False
    paths: bool = False
    entropy: bool = False
    spectrum: str | None = None


@dataclass
class AnalysisReport:
    n: int
    weight: int
    measures: list[dict]
    characterization: dict | None
    geometry: dict | None = None
    entropy: dict | None = None
    spectrum: dict | None = None
    provenance: dict = field(default_factory=dict)


def exact_fields(v: Fraction) -> dict:
    """``num``/``log2_den`` for dyadic values, plus ``den`` when not dyadic."""
    v = Fraction(v)
    d = v.denominator
    if d & (d - 1) == 0:
        return {"num": v.numerator, "log2_den": d.bit_length() - 1, "float": float(v)}
    return {"num": v.numerator, "log2_den": None, "den": d, "float": float(v)}


def _parse_set(text: str) -> tuple[int, ...]:
    try:
        items = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise UsageError(f"malformed variable set {text!r}") from None
    if not items:
        raise UsageError("empty variable set")
    return items


def _parse_measures(values: list[str]) -> list[str]:
    out: list[str] = []
    for v in values:
        for name in v.split(","):
            name = name.strip()
            if name == "all":
                names = list(CLI_MEASURES)
            elif name in CLI_MEASURES or name == "mu":
                names = [name]
            else:
                raise UsageError(f"unknown measure {name!r}")
            out.extend(m for m in names if m not in out)
    return out


def parse_function(args: argparse.Namespace) -> BooleanFunction:
    given = [k for k in ("tt", "hex", "anf") if getattr(args, k) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --tt, --hex, --anf")
    cap = args.max_n if args.max_n is not None else MAX_VARIABLES
    if args.tt is not None:
        s = args.tt.strip()
        size = len(s)
        if size < 2 or size & (size - 1):
            raise UsageError(f"truth table length {size} is not a power of two >= 2")
        n = size.bit_length() - 1
        if args.n is not None and args.n != n:
            raise UsageError(f"--n {args.n} does not match truth table length {size}")
        return build_from_bits(n, s, max_n=cap)
    if args.n is None:
        raise UsageError("--n is required with --hex and --anf")
    if args.hex is not None:
        return build_from_hex(args.n, args.hex, max_n=cap)
    return build_from_anf(args.anf, args.n, max_n=cap)


def run_report(f: BooleanFunction, options: ReportOptions) -> AnalysisReport:
    n = f.n
    for s in options.subsets:
        VariableSubset.of(n, s)
    for t in options.sizes:
        if not 1 <= t <= n:
            raise DomainError(f"--t {t} outside [1, {n}]")
    names = options.measures or (["ac"] if options.subsets or options.sizes else [])

    subsets = sorted({VariableSubset.of(n, s) for s in options.subsets}, key=lambda T: T.mask)
    entries = []
    for T in subsets:
        for name in names:
            v = measure(f, name, T).value
            entries.append({"measure": name, "subset": list(T.indices), **exact_fields(v)})
    for t in sorted(set(options.sizes)):
        for name in names:
            entries.append({"measure": name, "t": t, **exact_fields(t_measure(f, name, t))})

    char = None
    if options.characterize:
        r = characterize(f)
        char = {"is_bent": r.is_bent, "resiliency_order": r.resiliency_order,
                "pc_order": r.pc_order, "entropy": r.entropy, "notes": list(r.notes)}

    levels = sorted(set(options.sizes)) or list(range(1, n + 1))
    geometry = None
    if options.paths:
        census = path_census(f, "direct" if n <= AUTOCORR_DIRECT_MAX_N else "autocorr")
        geometry = {
            "edge_boundary": edge_boundary(f),
            "t_influence": [{"t": t, **exact_fields(t_influence_by_paths(f, t, census))}
                            for t in levels],
        }
        if n <= 8:
            geometry["path_counts"] = census.counts

    entropy = None
    if options.entropy:
        ratios = []
        for t in levels:
            try:
                ratios.append({"t": t, "rho": fei_ratio(f, t)})
            except DomainError:
                ratios.append({"t": t, "rho": None})
        entropy = {"entropy": fourier_entropy(f), "fei_ratio": ratios}

    spectrum = None
    if options.spectrum is not None:
        spec = walsh_spectrum(f) if options.spectrum == "walsh" else autocorrelation_spectrum(f)
        spectrum = {"kind": spec.kind, "values": spec.to_records()}

    return AnalysisReport(n, weight(f), entries, char, geometry, entropy, spectrum)


def report_dict(report: AnalysisReport) -> dict:
    d = {"n": report.n, "weight": report.weight, "measures": report.measures,
         "characterization": report.characterization}
    if report.geometry is not None:
        d["geometry"] = report.geometry
    if report.entropy is not None:
        d["entropy"] = report.entropy
    if report.spectrum is not None:
        d["spectrum"] = report.spectrum
    d["provenance"] = dict(report.provenance, tool=f"boolinf {__version__}")
    d["version"] = SCHEMA_VERSION
    return d


def emit_json(report: AnalysisReport) -> str:
    return json.dumps(report_dict(report), indent=2) + "\n"


def _fmt(entry: dict) -> str:
    if entry.get("den") is not None:
        return f"{entry['num']}/{entry['den']}"
    if entry["log2_den"] == 0:
        return str(entry["num"])
    return f"{entry['num']}/{1 << entry['log2_den']}"


def emit_text(report: AnalysisReport) -> str:
    """Tab-delimited rendering of the same content as :func:`emit_json`."""
    lines = [f"n\t{report.n}", f"weight\t{report.weight}"]
    if report.measures:
        lines.append("measure\tscope\texact\tfloat")
        for e in report.measures:
            scope = ("T=" + ",".join(map(str, e["subset"]))) if "subset" in e else f"t={e['t']}"
            lines.append(f"{e['measure']}\t{scope}\t{_fmt(e)}\t{e['float']:.17g}")
    if report.characterization is not None:
        c = report.characterization
        lines.append(f"is_bent\t{str(c['is_bent']).lower()}")
        lines.append(f"resiliency_order\t{'none' if c['resiliency_order'] is None else c['resiliency_order']}")
        lines.append(f"pc_order\t{c['pc_order']}")
        lines.append(f"entropy\t{c['entropy']:.12g}")
        lines.append("notes\t" + ",".join(c["notes"]))
    if report.geometry is not None:
        g = report.geometry
        lines.append(f"edge_boundary\t{g['edge_boundary']}")
        for e in g["t_influence"]:
            lines.append(f"paths\tt={e['t']}\t{_fmt(e)}\t{e['float']:.17g}")
    if report.entropy is not None:
        lines.append(f"fourier_entropy\t{report.entropy['entropy']:.12g}")
        for r in report.entropy["fei_ratio"]:
            rho = "undefined" if r["rho"] is None else f"{r['rho']:.12g}"
            lines.append(f"fei_ratio\tt={r['t']}\t{rho}")
    if report.spectrum is not None:
        lines.append(f"spectrum\t{report.spectrum['kind']}")
        for r in report.spectrum["values"]:
            lines.append(f"{r['index']}\t{r['numerator']}/{1 << r['log2_denominator']}\t{r['float']:.17g}")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="boolinf", description="Influence measures and spectra of Boolean functions.")
    src = p.add_argument_group("function input (exactly one)")
    src.add_argument("--tt", help="truth table over {0,1}, index 0 first (X1 = MSB of the index)")
    src.add_argument("--hex", help="truth table as big-endian hex (requires --n, n >= 2)")
    src.add_argument("--anf", help='ANF expression such as "x1*x2 + x3 + 1" (requires --n)')
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--max-n", type=int, default=None, help=f"variable cap (default {MAX_VARIABLES})")
    p.add_argument("--set", action="append", default=[], metavar="I,J,...",
                   help="variable set to report on (repeatable)")
    p.add_argument("--t", action="append", type=int, default=[], help="subset size for averages (repeatable)")
    p.add_argument("--measure", action="append", default=[],
                   help="ac, pi, bl, gs, fb, mu or all (repeatable or comma-separated; default ac)")
    p.add_argument("--characterize", action="store_true", help="bent/resilient/PC/entropy summary")
    p.add_argument("--paths", action="store_true", help="edge boundary and path-expansion t-influence")
    p.add_argument("--entropy", action="store_true", help="Fourier entropy and FEI ratios")
    p.add_argument("--spectrum", choices=("walsh", "autocorr"), help="export a full spectrum")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--version", action="version", version=f"boolinf {__version__}")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        f = parse_function(args)
        options = ReportOptions(
            subsets=[_parse_set(s) for s in args.set],
            sizes=list(args.t),
            measures=_parse_measures(args.measure),
            characterize=args.characterize,
            paths=args.paths,
            entropy=args.entropy,
            spectrum=args.spectrum,
        )
        report = run_report(f, options)
    except (UsageError, ParseError) as e:
        print(f"boolinf: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"boolinf: domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    form = next(k for k in ("tt", "hex", "anf") if getattr(args, k) is not None)
    report.provenance = {"input": form, "value": getattr(args, form)}
    sys.stdout.write(emit_json(report) if args.format == "json" else emit_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
