"""JSON encoding of library objects, with decoders for round-tripping.

Conventions: simple roots are named ``a1, a2, ...``; subsets are sorted name
lists; Weyl elements are 1-based words (``[2, 1]`` is ``s2 s1``); weights are
lists of integers, with non-integral rationals written as ``"p/q"``.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from .characters import FORMAL, SmoothCharacter, character, trivial
from .coinvariants import SteinbergLabel, SummandDescriptor
from .errors import InputError
from .ext_predictor import ExtPrediction, HomSummand, LeviExt
from .geom_lemma import Filtration, GradedPiece
from .root_datum import RootDatum, Weight, build
from .weyl import WeylElement, check_subset, d_w, weyl_group

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

SCHEMA = 1


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------
# datum files


def load_datum(path: str | Path) -> RootDatum:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read datum file {str(path)!r}: {exc.strerror}") from None
    try:
        if path.suffix.lower() == ".toml":
            spec = tomllib.loads(text)
        else:
            spec = json.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise InputError(f"datum file {str(path)!r} is not well-formed: {exc}") from None
    if not isinstance(spec, dict):
        raise InputError("datum file must hold an object")
    return build(spec)


# --------------------------------------------------------------------------
# atoms


def subset_to_json(S) -> list[str]:
    return [f"a{i + 1}" for i in sorted(S)]


def parse_subset(rd: RootDatum, value) -> frozenset:
    """Accept ``"a1,a3"``, ``"1,3"``, ``""``, or a list of names / 1-based ints."""
    if value is None:
        return frozenset()
    if isinstance(value, str):
        items = [x.strip() for x in value.split(",") if x.strip()]
    elif isinstance(value, (list, tuple)):
        items = list(value)
    else:
        raise InputError(f"cannot read a subset from {value!r}")
    out = set()
    for x in items:
        if isinstance(x, int) and not isinstance(x, bool):
            k = x
        elif isinstance(x, str) and x.lower().startswith("a") and x[1:].isdigit():
            k = int(x[1:])
        elif isinstance(x, str) and x.isdigit():
            k = int(x)
        else:
            raise InputError(f"unknown simple root {x!r}; use names a1..a{rd.rank}")
        if not 1 <= k <= rd.rank:
            raise InputError(f"simple root {x!r} out of range for rank {rd.rank}")
        out.add(k - 1)
    return check_subset(rd, out)


def element_to_json(w: WeylElement) -> list[int]:
    return [i + 1 for i in w.word]


def element_from_json(rd: RootDatum, word) -> WeylElement:
    if not isinstance(word, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in word):
        raise InputError(f"a Weyl element is a list of 1-based generator indices, got {word!r}")
    return weyl_group(rd).from_word(i - 1 for i in word)


def _number(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def weight_to_json(v) -> list:
    return [_number(Fraction(c)) for c in v]


def weight_from_json(value) -> Weight:
    if not isinstance(value, list):
        raise InputError(f"a weight is a list of numbers, got {value!r}")
    try:
        return Weight(Fraction(c) if isinstance(c, str) else c for c in value)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad weight entry in {value!r}") from None


def char_to_json(chi: SmoothCharacter) -> dict:
    return {"cyclo": weight_to_json(chi.cyclo), "sym": dict(chi.sym), "mode": chi.mode}


def char_from_json(rd: RootDatum, obj, mode: str | None = None) -> SmoothCharacter:
    if not isinstance(obj, dict):
        raise InputError(f"a character is an object with 'cyclo'/'sym'/'mode', got {obj!r}")
    unknown = set(obj) - {"cyclo", "sym", "mode"}
    if unknown:
        raise InputError(f"unknown character keys: {sorted(unknown)}")
    m = obj.get("mode", mode or FORMAL)
    if mode is not None and m != mode:
        raise InputError(f"character mode {m!r} conflicts with requested mode {mode!r}")
    cyclo = weight_from_json(obj["cyclo"]) if "cyclo" in obj else None
    sym = obj.get("sym", {})
    if not isinstance(sym, dict):
        raise InputError("character 'sym' must map symbol names to integers")
    return character(rd, cyclo=cyclo, sym=sym, mode=m)


def parse_character(rd: RootDatum, text: str, mode: str = FORMAL) -> SmoothCharacter:
    """``"trivial"`` or an inline JSON character."""
    if text.strip() == "trivial":
        return trivial(rd, mode)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise InputError(f"character must be 'trivial' or a JSON object, got {text!r}") from None
    if isinstance(obj, list):
        obj = {"cyclo": obj}
    return char_from_json(rd, obj, mode)


# --------------------------------------------------------------------------
# reports


def roots_report(rd: RootDatum) -> dict:
    return {
        "datum": rd.to_spec(),
        "rank": rd.rank,
        "positive_roots": [{"root": list(r), "d": rd.root_d(r)} for r in rd.positive_roots],
        "dim_G": rd.dim_G(),
    }


def cosets_report(rd: RootDatum, I, K, reps) -> dict:
    return {
        "I": subset_to_json(I),
        "K": subset_to_json(K),
        "representatives": [{"w": element_to_json(w), "name": repr(w), "d_w": d_w(rd, w)} for w in reps],
    }


def piece_to_json(p: GradedPiece) -> dict:
    return {
        "w": element_to_json(p.w),
        "name": repr(p.w),
        "shift": p.shift,
        "delta": char_to_json(p.delta),
        "coinv_levi": subset_to_json(p.coinv_levi),
        "ind_levi": subset_to_json(p.ind_levi),
        "height": p.height,
    }


def piece_from_json(rd: RootDatum, obj) -> GradedPiece:
    return GradedPiece(
        w=element_from_json(rd, obj["w"]),
        shift=obj["shift"],
        delta=char_from_json(rd, obj["delta"]),
        coinv_levi=parse_subset(rd, obj["coinv_levi"]),
        ind_levi=parse_subset(rd, obj["ind_levi"]),
        height=obj["height"],
    )


def filtration_to_json(F: Filtration) -> dict:
    return {
        "I": subset_to_json(F.I),
        "K": subset_to_json(F.K),
        "length": F.length,
        "groups": [{"height": i, "pieces": [piece_to_json(p) for p in g]} for i, g in enumerate(F.groups, start=1)],
    }


def filtration_from_json(rd: RootDatum, obj) -> Filtration:
    return Filtration(
        I=parse_subset(rd, obj["I"]),
        K=parse_subset(rd, obj["K"]),
        groups=tuple(tuple(piece_from_json(rd, p) for p in g["pieces"]) for g in obj["groups"]),
    )


def summand_to_json(s: SummandDescriptor) -> dict:
    out = {
        "degree": s.degree,
        "w": element_to_json(s.w),
        "name": repr(s.w),
        "ind_levi": subset_to_json(s.ind_levi),
        "character": char_to_json(s.character),
    }
    if s.constituent is not None:
        out["constituent"] = {"ambient": subset_to_json(s.constituent.ambient), "base": subset_to_json(s.constituent.base)}
    return out


def summand_from_json(rd: RootDatum, obj) -> SummandDescriptor:
    c = obj.get("constituent")
    label = None
    if c is not None:
        label = SteinbergLabel(parse_subset(rd, c["ambient"]), parse_subset(rd, c["base"]))
    return SummandDescriptor(
        degree=obj["degree"],
        w=element_from_json(rd, obj["w"]),
        ind_levi=parse_subset(rd, obj["ind_levi"]),
        character=char_from_json(rd, obj["character"]),
        constituent=label,
    )


def coinvariants_to_json(groups: dict) -> list[dict]:
    return [{"degree": -j, "summands": [summand_to_json(s) for s in rows]} for j, rows in groups.items()]


def coinvariants_from_json(rd: RootDatum, obj) -> dict:
    return {-g["degree"]: [summand_from_json(rd, s) for s in g["summands"]] for g in obj}


def _levi_ext_to_json(x: LeviExt | None):
    if x is None:
        return None
    return {
        "levi": subset_to_json(x.levi),
        "degree": x.degree,
        "source_induced_from": None if x.source_induced_from is None else subset_to_json(x.source_induced_from),
        "target_induced_from": None if x.target_induced_from is None else subset_to_json(x.target_induced_from),
    }


def _levi_ext_from_json(rd: RootDatum, obj) -> LeviExt | None:
    if obj is None:
        return None

    def opt(v):
        return None if v is None else parse_subset(rd, v)

    return LeviExt(
        levi=parse_subset(rd, obj["levi"]),
        degree=obj["degree"],
        source_induced_from=opt(obj["source_induced_from"]),
        target_induced_from=opt(obj["target_induced_from"]),
    )


def prediction_to_json(pred: ExtPrediction) -> dict:
    return {
        "verdict": pred.kind,
        "rule": pred.rule,
        "dimension": pred.dimension,
        "candidates": [element_to_json(w) for w in pred.candidates],
        "levi_ext": _levi_ext_to_json(pred.levi_ext),
        "hom_summands": [
            {"alpha": f"a{h.alpha + 1}", "twist": char_to_json(h.twist), "levi": subset_to_json(h.levi)}
            for h in pred.hom_summands
        ],
        "sequence_degree": pred.sequence_degree,
        "notes": list(pred.notes),
    }


def prediction_from_json(rd: RootDatum, obj) -> ExtPrediction:
    return ExtPrediction(
        kind=obj["verdict"],
        rule=obj["rule"],
        dimension=obj["dimension"],
        candidates=tuple(element_from_json(rd, w) for w in obj["candidates"]),
        levi_ext=_levi_ext_from_json(rd, obj["levi_ext"]),
        hom_summands=tuple(
            HomSummand(
                alpha=min(parse_subset(rd, [h["alpha"]])),
                twist=char_from_json(rd, h["twist"]),
                levi=parse_subset(rd, h["levi"]),
            )
            for h in obj["hom_summands"]
        ),
        sequence_degree=obj["sequence_degree"],
        notes=tuple(obj["notes"]),
    )


def envelope(command: str, rd: RootDatum, result) -> dict:
    return {"schema": SCHEMA, "command": command, "datum": rd.to_spec(), "result": result}


def decode_report(text: str) -> tuple[str, RootDatum, Any]:
    """Parse a JSON report back into library objects: ``(command, datum, payload)``.

    Payload types by command: ``cosets`` a list of Weyl elements,
    ``filtration`` a Filtration, ``ps``/``steinberg`` a ``{j: [SummandDescriptor]}``
    map, ``ext`` an ExtPrediction; other commands return the plain result.
    """
    obj = json.loads(text)
    if obj.get("schema") != SCHEMA:
        raise InputError(f"unsupported report schema {obj.get('schema')!r}")
    rd = build(obj["datum"])
    command, result = obj["command"], obj["result"]
    if command == "cosets":
        return command, rd, [element_from_json(rd, r["w"]) for r in result["representatives"]]
    if command == "filtration":
        return command, rd, filtration_from_json(rd, result)
    if command in ("ps", "steinberg"):
        return command, rd, coinvariants_from_json(rd, result["degrees"])
    if command == "ext":
        return command, rd, prediction_from_json(rd, result["prediction"])
    return command, rd, result
