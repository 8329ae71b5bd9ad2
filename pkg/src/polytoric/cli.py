"""Batch command-line front end.

Subcommands:
  analyze <file> [--cone] [--normality D] [--format json|text]
  facets  <file>
  verify  <file>

Shared flags: --max-n (enumeration cap, default 16) and --point-cap
(lattice-point cap, default 10^6).  Exit codes: 0 success / agreement,
1 mathematical cross-check failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bitset
from .cone import (
    canonical_from_cone,
    class_group_from_cone,
    cone_facets,
    normality_witness,
    semigroup_generators,
)
from .crosscheck import compare_paths, expected_form_keys
from .divisors import (
    canonical_class,
    class_group,
    is_gorenstein,
    matroid_unmixed_check,
    relation_multiple,
)
from .errors import (
    ClosedFormUnavailable,
    InvariantViolationError,
    PolytoricError,
    ResourceLimitError,
    UsageError,
)
from .families import (
    TransversalFamily,
    VeroneseParams,
    box_analysis,
    classify_transversal,
    veronese_analysis,
)
from .polymatroid import Multicomplex, Polymatroid, validate
from .report import AnalysisReport, family_list, group_dict, presentation_dict
from .structure import closed_inseparable_family

EXIT_OK = 0
EXIT_CROSSCHECK = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

KINDS = (
    "rank_table",
    "transversal",
    "veronese",
    "box",
    "matroid_bases",
    "points",
    "multicomplex",
)


# ---------------------------------------------------------------------------
# input schema


def _subset_mask(indices, n: int, where: str) -> int:
    if not isinstance(indices, list) or not all(isinstance(i, int) for i in indices):
        raise UsageError(f"at {where}: expected an array of integers")
    if sorted(indices) != indices or len(set(indices)) != len(indices):
        raise UsageError(f"at {where}: indices must be sorted and distinct")
    if any(not 1 <= i <= n for i in indices):
        raise UsageError(f"at {where}: indices must lie in 1..{n}")
    return bitset.mask_of([i - 1 for i in indices], n)


def _int_vector(value, n: int, where: str) -> tuple:
    if not isinstance(value, list) or len(value) != n:
        raise UsageError(f"at {where}: expected an array of {n} integers")
    if not all(isinstance(x, int) for x in value):
        raise UsageError(f"at {where}: entries must be integers")
    return tuple(value)


def load_input(path: str):
    """Parse an input description; returns (object, echo dict).

    The object is a Polymatroid for the rank-function kinds and a
    Multicomplex for kind "multicomplex".  Table keys are the
    comma-joined sorted 1-based indices of the subset, e.g. "1,3".
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"at {path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise UsageError("at top level: expected a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or n < 1:
        raise UsageError('at "n": expected a positive integer')
    kind = data.get("kind")
    if kind not in KINDS:
        raise UsageError(f'at "kind": expected one of {", ".join(KINDS)}')
    echo = {"n": n, "kind": kind}

    if kind == "rank_table":
        table = data.get("table")
        if not isinstance(table, dict):
            raise UsageError('at "table": expected an object')
        parsed = {}
        for key, value in table.items():
            where = f'table["{key}"]'
            if not isinstance(value, int):
                raise UsageError(f"at {where}: rank must be an integer")
            if key == "":
                parsed[0] = value
                continue
            try:
                indices = [int(tok) for tok in key.split(",")]
            except ValueError as exc:
                raise UsageError(f"at {where}: bad subset key") from exc
            parsed[_subset_mask(indices, n, where)] = value
        echo["table"] = {
            ",".join(str(i) for i in bitset.one_based(m)): r
            for m, r in sorted(parsed.items())
            if m
        }
        return Polymatroid.from_rank_table(n, parsed), echo

    if kind == "transversal":
        sets = data.get("sets")
        if not isinstance(sets, list) or not sets:
            raise UsageError('at "sets": expected a nonempty array of index arrays')
        masks = [
            _subset_mask(a, n, f"sets[{k}]") for k, a in enumerate(sets)
        ]
        echo["sets"] = [list(bitset.one_based(m)) for m in masks]
        return Polymatroid.transversal(n, masks), echo

    if kind == "veronese":
        s = _int_vector(data.get("s"), n, '"s"')
        d = data.get("d")
        if not isinstance(d, int) or d < 1:
            raise UsageError('at "d": expected a positive integer')
        if any(x < 1 for x in s):
            raise UsageError('at "s": caps must be >= 1')
        echo["s"], echo["d"] = list(s), d
        return Polymatroid.veronese(s, d), echo

    if kind == "box":
        v = _int_vector(data.get("v"), n, '"v"')
        if any(x < 1 for x in v):
            raise UsageError('at "v": bounds must be >= 1')
        echo["v"] = list(v)
        return Polymatroid.box(v), echo

    if kind == "matroid_bases":
        bases = data.get("bases")
        if not isinstance(bases, list) or not bases:
            raise UsageError('at "bases": expected a nonempty array of index arrays')
        masks = [
            _subset_mask(b, n, f"bases[{k}]") for k, b in enumerate(bases)
        ]
        echo["bases"] = [list(bitset.one_based(m)) for m in masks]
        return Polymatroid.from_matroid_bases(n, masks), echo

    if kind == "points":
        points = data.get("points")
        if not isinstance(points, list) or not points:
            raise UsageError('at "points": expected a nonempty array of vectors')
        vecs = [
            _int_vector(pt, n, f"points[{k}]") for k, pt in enumerate(points)
        ]
        if any(x < 0 for v in vecs for x in v):
            raise UsageError('at "points": coordinates must be >= 0')
        echo["points"] = [list(v) for v in sorted(set(vecs))]
        return Polymatroid.from_points(n, vecs), echo

    # multicomplex
    facets = data.get("facets")
    if not isinstance(facets, list) or not facets:
        raise UsageError('at "facets": expected a nonempty array of vectors')
    vecs = [
        _int_vector(f, n, f"facets[{k}]") for k, f in enumerate(facets)
    ]
    if any(x < 0 for v in vecs for x in v):
        raise UsageError('at "facets": coordinates must be >= 0')
    generalized = data.get("generalized", False)
    if not isinstance(generalized, bool):
        raise UsageError('at "generalized": expected a boolean')
    echo["facets"] = [list(v) for v in vecs]
    echo["generalized"] = generalized
    return Multicomplex(n=n, facets=tuple(vecs), generalized=generalized), echo


def _gate_validation(obj, out) -> Optional[int]:
    report = validate(obj) if isinstance(obj, Polymatroid) else obj.validate()
    if not report.ok:
        print("input fails validation:", file=out)
        for v in report.violations:
            print(f"  {v}", file=out)
        return EXIT_INPUT
    return None


# ---------------------------------------------------------------------------
# analyze


def _cone_section(obj, family, args, warnings, crosscheck=True) -> tuple:
    """Build the cone part of a report; returns (dict, agreement_ok)."""
    gens = semigroup_generators(obj, args.point_cap)
    forms = cone_facets(gens)
    section = {"facets": [list(f.coefficients) for f in forms]}
    ok = True
    if isinstance(obj, Polymatroid) and crosscheck:
        agreement = compare_paths(obj, family=family, forms=forms)
        section["facets_match_family"] = agreement.facets_match
        section["paths_agree"] = agreement.ok
        ok = agreement.ok
        if agreement.notes:
            warnings.extend(agreement.notes)
    else:
        pres = class_group_from_cone(forms)
        canon = canonical_from_cone(forms, pres)
        lam = relation_multiple(canon)
        section["class_group"] = presentation_dict(pres)
        section["canonical_class"] = list(canon.coords)
        section["gorenstein"] = {
            "is_gorenstein": lam is not None,
            "a": lam,
        }
    if args.normality is not None:
        witness = normality_witness(obj, args.normality, args.point_cap)
        section["normality"] = {
            "max_degree": witness.max_degree,
            "violation": list(witness.violation) if witness.violation else None,
        }
        if not witness.ok:
            warnings.append(str(witness))
    return section, ok


def cmd_analyze(args) -> int:
    obj, echo = load_input(args.file)
    bad = _gate_validation(obj, sys.stderr)
    if bad is not None:
        return bad
    warnings: list = []
    if isinstance(obj, Polymatroid):
        # unmixed one-skeleton is necessary for a Gorenstein matroid ring,
        # so the screen runs first and the verdicts must stay consistent
        unmixed = None
        if echo["kind"] == "matroid_bases":
            unmixed = matroid_unmixed_check(obj).unmixed
            if not unmixed:
                warnings.append(
                    "one-skeleton is not unmixed; the ring cannot be Gorenstein"
                )
        family = closed_inseparable_family(obj, args.max_n)
        pres = class_group(family)
        canon = canonical_class(family, pres)
        a = is_gorenstein(family)
        if unmixed is False and a is not None:
            raise InvariantViolationError(
                "Gorenstein verdict contradicts the mixed one-skeleton screen"
            )
        gorenstein = {"is_gorenstein": a is not None, "a": a}
        if unmixed is not None:
            gorenstein["skeleton_unmixed"] = unmixed
        report = AnalysisReport(
            input_echo=echo,
            path="rank",
            family=family_list(family),
            class_group=presentation_dict(pres),
            canonical_class=list(canon.coords),
            gorenstein=gorenstein,
            warnings=warnings,
        )
        agreement_ok = True
        if args.cone or args.normality is not None:
            section, agreement_ok = _cone_section(
                obj, family, args, warnings, crosscheck=args.cone
            )
            if args.cone:
                report.cone = section
            else:
                report.cone = {
                    k: v for k, v in section.items() if k == "normality"
                }
        out = report.to_json() if args.format == "json" else report.to_text()
        sys.stdout.write(out)
        return EXIT_OK if agreement_ok else EXIT_CROSSCHECK
    # multicomplex: the cone path is the only path
    warnings.append(
        "class group and canonical class assume the semigroup is normal; "
        "run --normality to search for a witness against it"
    )
    section, _ = _cone_section(obj, None, args, warnings)
    report = AnalysisReport(input_echo=echo, path="cone", cone=section, warnings=warnings)
    out = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# facets


def cmd_facets(args) -> int:
    obj, _ = load_input(args.file)
    bad = _gate_validation(obj, sys.stderr)
    if bad is not None:
        return bad
    forms = cone_facets(semigroup_generators(obj, args.point_cap))
    for f in forms:
        print(f)
    if isinstance(obj, Polymatroid):
        family = closed_inseparable_family(obj, args.max_n)
        expected = expected_form_keys(family)
        actual = {f.coefficients for f in forms}
        if expected != actual:
            print("facet cross-check FAILED:", file=sys.stderr)
            for k in sorted(expected - actual):
                print(f"  missing {' '.join(str(c) for c in k)}", file=sys.stderr)
            for k in sorted(actual - expected):
                print(f"  unexpected {' '.join(str(c) for c in k)}", file=sys.stderr)
            return EXIT_CROSSCHECK
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _closed_form_check(obj, echo, family, pres, a) -> tuple:
    """Closed-form comparison when the input kind has one.

    Returns (name, diff list) with an empty diff on agreement, or
    (None, []) when no closed form applies.
    """
    kind = echo["kind"]
    diff: list = []
    if kind == "box":
        predicted, invariants, pa = box_analysis(echo["v"])
        if predicted.as_pairs() != family.as_pairs():
            diff.append("closed-form family differs from computed family")
        if invariants != pres.invariants:
            diff.append(
                f"closed-form invariants {invariants} != computed {pres.invariants}"
            )
        if pa != a:
            diff.append(f"closed-form gorenstein {pa} != computed {a}")
        return "box", diff
    if kind == "veronese":
        s, d = echo["s"], echo["d"]
        if list(s) != sorted(s):
            return None, []
        try:
            predicted, invariants, pa = veronese_analysis(
                VeroneseParams(s=tuple(s), d=d)
            )
        except (ClosedFormUnavailable, UsageError):
            return None, []
        if predicted.as_pairs() != family.as_pairs():
            diff.append("closed-form family differs from computed family")
        if invariants != pres.invariants:
            diff.append(
                f"closed-form invariants {invariants} != computed {pres.invariants}"
            )
        if pa != a:
            diff.append(f"closed-form gorenstein {pa} != computed {a}")
        return "veronese", diff
    if kind == "transversal":
        t = TransversalFamily(
            n=echo["n"],
            sets=tuple(
                bitset.mask_of([i - 1 for i in s], echo["n"]) for s in echo["sets"]
            ),
        )
        result = classify_transversal(t)
        if result.tag == "generic":
            return None, []
        if result.tag == "torsion-free-witness":
            if pres.invariants.torsion != 1:
                diff.append(
                    f"classification promises a free group, computed {pres.invariants}"
                )
        else:
            if result.invariants != pres.invariants:
                diff.append(
                    f"classification {result.invariants} != computed {pres.invariants}"
                )
        return f"transversal:{result.tag}", diff
    return None, []


def cmd_verify(args) -> int:
    obj, echo = load_input(args.file)
    bad = _gate_validation(obj, sys.stderr)
    if bad is not None:
        return bad
    outcome = {"input": echo, "checks": {}, "diff": []}
    if isinstance(obj, Multicomplex):
        forms = cone_facets(semigroup_generators(obj, args.point_cap))
        pres = class_group_from_cone(forms)
        outcome["checks"]["cone_path"] = "ran"
        outcome["checks"]["class_group"] = group_dict(pres.invariants)
        outcome["note"] = "single-path input; nothing to cross-check"
        print(json.dumps(outcome, sort_keys=True, indent=2))
        return EXIT_OK
    family = closed_inseparable_family(obj, args.max_n)
    pres = class_group(family)
    a = is_gorenstein(family)
    agreement = compare_paths(obj, family=family, point_cap=args.point_cap)
    outcome["checks"]["facets_match"] = agreement.facets_match
    outcome["checks"]["invariants_match"] = agreement.invariants_match
    outcome["checks"]["canonical_match"] = agreement.canonical_match
    outcome["checks"]["gorenstein_match"] = agreement.gorenstein_match
    outcome["diff"].extend(agreement.notes)
    name, diff = _closed_form_check(obj, echo, family, pres, a)
    if name is not None:
        outcome["checks"]["closed_form"] = name
        outcome["checks"]["closed_form_match"] = not diff
        outcome["diff"].extend(diff)
    outcome["class_group"] = group_dict(pres.invariants)
    ok = agreement.ok and not diff
    outcome["ok"] = ok
    print(json.dumps(outcome, sort_keys=True, indent=2))
    return EXIT_OK if ok else EXIT_CROSSCHECK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--max-n",
        type=int,
        default=16,
        help="cap on the ground-set size for subset enumeration (default 16)",
    )
    shared.add_argument(
        "--point-cap",
        type=int,
        default=10**6,
        help="cap on enumerated lattice points (default 1000000)",
    )
    parser = argparse.ArgumentParser(
        prog="polytoric",
        description="divisor class groups of polymatroid and multicomplex "
        "monomial semigroup rings, computed exactly along two independent paths",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_analyze = sub.add_parser(
        "analyze", parents=[shared], help="full analysis of one input file"
    )
    p_analyze.add_argument("file")
    p_analyze.add_argument(
        "--cone", action="store_true", help="also run the cone path and cross-check"
    )
    p_analyze.add_argument(
        "--normality",
        type=int,
        default=None,
        metavar="D",
        help="run the degree-bounded normality witness up to degree D",
    )
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")
    p_analyze.set_defaults(func=cmd_analyze)
    p_facets = sub.add_parser(
        "facets", parents=[shared], help="print the normalized facet support forms"
    )
    p_facets.add_argument("file")
    p_facets.set_defaults(func=cmd_facets)
    p_verify = sub.add_parser(
        "verify",
        parents=[shared],
        help="run every applicable computation path and require agreement",
    )
    p_verify.add_argument("file")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except UsageError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolationError as exc:
        print(f"mathematical cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except PolytoricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
