"""Command line front end: ``parind <command> --datum FILE ...``.

Exit status: 0 on success, 1 on input errors, 2 when a verification suite
finds a counterexample.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import serialize as ser
from .characters import CONCRETE, FORMAL
from .coinvariants import ps_coinvariants, steinberg_coinvariants
from .errors import InputError, ParindError
from .ext_predictor import ExtQuery, TorusAssumptions, predict_parabolic_ext, predict_ps_ext
from .geom_lemma import graded_pieces
from .root_datum import RootDatum, build
from .verify import SUITES, run_suites
from .weyl import d_w, dml, weyl_group

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for failed verification
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _add_datum(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--datum", help="JSON or TOML datum file")
    g.add_argument("--type", help="Cartan type such as A2, B3, G2 or A1xA1 (all weights 1)")
    p.add_argument("--format", choices=("json", "text"), default="json")


def _add_pair(p: argparse.ArgumentParser) -> None:
    p.add_argument("--I", default="", help='simple roots, e.g. "a1,a2"; empty for the Borel')
    p.add_argument("--K", default="", help="second parabolic subset")


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parind", description="Derived Geometrical Lemma calculator for p-adic reductive groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_datum(sub.add_parser("roots", help="positive roots with dimension weights"))
    _add_datum(sub.add_parser("weyl", help="Weyl group elements with lengths and d_w"))

    p = sub.add_parser("cosets", help="minimal double coset representatives D_I,K")
    _add_datum(p)
    _add_pair(p)

    for name, helptext in (
        ("filtration", "graded pieces of the orbit filtration"),
        ("steinberg", "derived coinvariants of a generalized Steinberg representation"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_datum(p)
        _add_pair(p)
        p.add_argument("--char-mode", choices=(FORMAL, CONCRETE), default=FORMAL)

    p = sub.add_parser("ps", help="derived coinvariants of a principal series")
    _add_datum(p)
    _add_pair(p)
    p.add_argument("--chi", default="trivial", help='"trivial" or JSON like {"cyclo": [1, 0], "sym": {"u": 1}}')
    p.add_argument("--char-mode", choices=(FORMAL, CONCRETE), default=FORMAL)

    p = sub.add_parser("ext", help="predict Ext groups between parabolic inductions")
    _add_datum(p)
    _add_pair(p)
    p.add_argument("--mode", choices=("ps", "parabolic"), required=True)
    p.add_argument("--r", type=int, required=True, help="degree")
    p.add_argument("--chi", default="trivial")
    p.add_argument("--chi-prime", default="trivial")
    p.add_argument("--char-mode", choices=(FORMAL, CONCRETE), default=FORMAL)
    p.add_argument("--split", action="store_true", help="the minimal Levi is a split torus")
    p.add_argument("--p-odd", action="store_true")
    p.add_argument("--no-pth-roots", action="store_true", help="F has no nontrivial p-th roots of unity")
    p.add_argument("--left-cuspidal", action="store_true")
    p.add_argument("--right-cuspidal", action="store_true")
    p.add_argument("--distinct-central", choices=("yes", "no"))
    p.add_argument("--central-v", help="central character of V (JSON)")
    p.add_argument("--central-w", help="central character of W (JSON)")

    p = sub.add_parser("verify", help="run property suites")
    _add_datum(p)
    p.add_argument("--suite", default="all", help=f"all, or a comma list of: {', '.join(SUITES)}")
    return parser


def _datum(args) -> RootDatum:
    if args.type:
        return build(args.type)
    return ser.load_datum(args.datum)


# --------------------------------------------------------------------------
# commands; each returns (result, exit code)


def _cmd_roots(rd, args):
    return ser.roots_report(rd), EXIT_OK


def _cmd_weyl(rd, args):
    rows = [
        {"w": ser.element_to_json(w), "name": repr(w), "length": w.length, "d_w": d_w(rd, w)}
        for w in weyl_group(rd)
    ]
    return {"order": len(rows), "elements": rows}, EXIT_OK


def _cmd_cosets(rd, args):
    I, K = ser.parse_subset(rd, args.I), ser.parse_subset(rd, args.K)
    return ser.cosets_report(rd, I, K, dml(rd, I, K)), EXIT_OK


def _cmd_filtration(rd, args):
    I, K = ser.parse_subset(rd, args.I), ser.parse_subset(rd, args.K)
    return ser.filtration_to_json(graded_pieces(rd, I, K, args.char_mode)), EXIT_OK


def _cmd_ps(rd, args):
    I, K = ser.parse_subset(rd, args.I), ser.parse_subset(rd, args.K)
    chi = ser.parse_character(rd, args.chi, args.char_mode)
    result = {"I": ser.subset_to_json(I), "K": ser.subset_to_json(K), "chi": ser.char_to_json(chi)}
    result["degrees"] = ser.coinvariants_to_json(ps_coinvariants(rd, I, K, chi))
    return result, EXIT_OK


def _cmd_steinberg(rd, args):
    I, K = ser.parse_subset(rd, args.I), ser.parse_subset(rd, args.K)
    result = {"I": ser.subset_to_json(I), "K": ser.subset_to_json(K)}
    result["degrees"] = ser.coinvariants_to_json(steinberg_coinvariants(rd, I, K, args.char_mode))
    return result, EXIT_OK


def _cmd_ext(rd, args):
    I, K = ser.parse_subset(rd, args.I), ser.parse_subset(rd, args.K)
    result = {"mode": args.mode, "I": ser.subset_to_json(I), "K": ser.subset_to_json(K), "r": args.r}
    if args.mode == "ps":
        if K:
            raise InputError("ps mode compares with a principal series, so K must be empty")
        chi = ser.parse_character(rd, args.chi, args.char_mode)
        chi_prime = ser.parse_character(rd, args.chi_prime, args.char_mode)
        assumptions = TorusAssumptions(args.split, args.p_odd, args.no_pth_roots)
        pred = predict_ps_ext(rd, I, chi, chi_prime, args.r, assumptions)
    else:
        flag = None if args.distinct_central is None else args.distinct_central == "yes"
        cv = None if args.central_v is None else ser.parse_character(rd, args.central_v, args.char_mode)
        cw = None if args.central_w is None else ser.parse_character(rd, args.central_w, args.char_mode)
        query = ExtQuery(I, K, args.r, args.left_cuspidal, args.right_cuspidal, flag, cv, cw)
        pred = predict_parabolic_ext(rd, query)
    result["prediction"] = ser.prediction_to_json(pred)
    return result, EXIT_OK


def _cmd_verify(rd, args):
    if args.suite == "all":
        names = list(SUITES)
    else:
        names = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [s for s in names if s not in SUITES]
        if unknown or not names:
            raise InputError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITES)}")
    results = run_suites(rd, names)
    rows = [
        {"suite": r.name, "checked": r.checked, "passed": r.passed, "counterexample": r.counterexample}
        for r in results
    ]
    ok = all(r.passed for r in results)
    return {"passed": ok, "suites": rows}, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "roots": _cmd_roots,
    "weyl": _cmd_weyl,
    "cosets": _cmd_cosets,
    "filtration": _cmd_filtration,
    "ps": _cmd_ps,
    "steinberg": _cmd_steinberg,
    "ext": _cmd_ext,
    "verify": _cmd_verify,
}


# --------------------------------------------------------------------------
# text rendering


def _use_color(stream) -> bool:
    setting = os.environ.get("PARIND_COLOR", "auto").lower()
    if setting == "never":
        return False
    return setting == "always" or (setting == "auto" and stream.isatty())


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"\x1b[{32 if ok else 31}m{text}\x1b[0m"


def _table(header: list[str], rows: list[list]) -> list[str]:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def _fmt_set(names: list[str]) -> str:
    return "{" + ",".join(names) + "}"


def _fmt_char(c: dict) -> str:
    parts = ["(" + ", ".join(str(x) for x in c["cyclo"]) + ")"]
    parts += [f"{k}^{v}" for k, v in sorted(c["sym"].items())]
    return " ".join(parts)


def render_text(command: str, result: dict, color: bool = False) -> str:
    lines: list[str] = []
    if command == "roots":
        lines += _table(["root", "d"], [[r["root"], r["d"]] for r in result["positive_roots"]])
        lines.append(f"dim G = {result['dim_G']}")
    elif command == "weyl":
        lines += _table(["w", "length", "d_w"], [[e["name"], e["length"], e["d_w"]] for e in result["elements"]])
    elif command == "cosets":
        lines += _table(["w", "d_w"], [[e["name"], e["d_w"]] for e in result["representatives"]])
    elif command == "filtration":
        rows = [
            [p["height"], p["name"], p["shift"], _fmt_char(p["delta"]), _fmt_set(p["coinv_levi"]), _fmt_set(p["ind_levi"])]
            for g in result["groups"]
            for p in g["pieces"]
        ]
        lines += _table(["height", "w", "shift", "delta", "I∩w(K)", "w⁻¹(I)∩K"], rows)
    elif command in ("ps", "steinberg"):
        rows = []
        for g in result["degrees"]:
            for s in g["summands"]:
                row = [g["degree"], s["name"], _fmt_set(s["ind_levi"]), _fmt_char(s["character"])]
                if command == "steinberg":
                    c = s["constituent"]
                    row.append(f"Sp {_fmt_set(c['base'])} in {_fmt_set(c['ambient'])}")
                rows.append(row)
        header = ["degree", "w", "inducing", "character"] + (["constituent"] if command == "steinberg" else [])
        lines += _table(header, rows)
    elif command == "ext":
        pred = result["prediction"]
        lines.append(f"verdict: {pred['verdict']}  (rule {pred['rule']})")
        if pred["dimension"] is not None:
            lines.append(f"dimension: {pred['dimension']}")
        if pred["candidates"]:
            lines.append("candidates: " + ", ".join("s" + "s".join(map(str, w)) if w else "e" for w in pred["candidates"]))
        if pred["levi_ext"] is not None:
            x = pred["levi_ext"]
            lines.append(f"Ext^{x['degree']} over Levi {_fmt_set(x['levi'])}")
        for h in pred["hom_summands"]:
            lines.append(f"Hom summand at {h['alpha']}, twist {_fmt_char(h['twist'])}, Levi {_fmt_set(h['levi'])}")
        lines += [f"note: {n}" for n in pred["notes"]]
    elif command == "verify":
        for s in result["suites"]:
            status = _paint("pass" if s["passed"] else "FAIL", s["passed"], color)
            lines.append(f"{s['suite']:<12} {status}  ({s['checked']} checks)")
            if s["counterexample"]:
                lines.append(f"  first counterexample: {s['counterexample']}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
        rd = _datum(args)
        result, code = COMMANDS[args.command](rd, args)
    except ParindError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.format == "json":
        stdout.write(ser.dumps(ser.envelope(args.command, rd, result)))
    else:
        stdout.write(render_text(args.command, result, _use_color(stdout)))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
