"""Command-line front end.

Subcommands: alexander, twisted, cover, verify, report.  Exit codes:
0 success, 1 a verification check failed, 2 parse error, 3 certification or
representation failure, 4 unresolved selector.  ORDERLEX_DEPTH overrides the
built-in default comparison depth; an explicit --depth flag or manifest
option wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .covers import build_cover, cover_alexander, verify_shapiro
from .errors import (
    CertificationError,
    IllDefinedHomomorphismError,
    ManifestError,
    PolynomialParseError,
    RepresentationError,
    SelectorError,
    WordParseError,
)
from .finite import regular_representation, trivial_representation
from .laurent import format_polynomial
from .manifest import load_manifest, select_homomorphism, select_representation
from .ordering import (
    DEFAULT_DEPTH,
    bi_order_axiom_suite,
    clay_rolfsen_verdict,
    lemma_comm_suite,
    theorem2_report,
)
from .torus import classical_alexander, lemma4_check, lemma5_check, twisted_alexander
from .words import format_word

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_CERTIFICATION = 3
EXIT_SELECTOR = 4


def _env_depth():
    raw = os.environ.get("ORDERLEX_DEPTH")
    if raw is None:
        return DEFAULT_DEPTH
    try:
        return int(raw)
    except ValueError:
        raise ManifestError("ORDERLEX_DEPTH must be an integer") from None


def _resolve_depth(args, manifest):
    if getattr(args, "depth", None) is not None:
        return args.depth
    if manifest.options.depth is not None:
        return manifest.options.depth
    return _env_depth()


def _resolve(args, manifest, name, fallback):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return getattr(manifest.options, name, fallback)


def _emit(doc, as_json, human_lines):
    if as_json:
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _warn_not_surjective(hom):
    if not hom.is_surjective():
        image_order = len(hom.image_subgroup())
        print(
            f"note: homomorphism {hom.label!r} is not surjective; "
            f"computing with its image subgroup of order {image_order}",
            file=sys.stderr,
        )


def cmd_alexander(args):
    manifest = load_manifest(args.manifest)
    result = classical_alexander(manifest.torus)
    verdict = clay_rolfsen_verdict(result.polynomial)
    poly = format_polynomial(result.polynomial)
    doc = {
        "label": manifest.torus.label,
        "polynomial": poly,
        "invariant_factors": result.factor_strings(),
        "free_rank": result.free_rank,
        "positive_root_count": verdict.positive_root_count,
        "status": verdict.status.value,
    }
    _emit(
        doc,
        args.json,
        [
            poly,
            f"positive real roots: {verdict.positive_root_count}",
            f"verdict: {verdict.status.value}",
        ],
    )
    return EXIT_OK


def _pick_representation(args, manifest):
    if getattr(args, "rep", None) is not None:
        return args.rep, select_representation(manifest, args.rep)
    if getattr(args, "hom", None) is not None or manifest.homomorphisms:
        hom = select_homomorphism(manifest, getattr(args, "hom", None))
        _warn_not_surjective(hom)
        return hom.label, regular_representation(hom)
    if manifest.representations:
        rep = select_representation(manifest, None)
        return rep.label, rep
    return "trivial", trivial_representation(manifest.torus.fiber_rank)


def cmd_twisted(args):
    manifest = load_manifest(args.manifest)
    selector_label, rep = _pick_representation(args, manifest)
    result = twisted_alexander(manifest.torus, rep, d_scale=args.d_scale)
    poly = format_polynomial(result.polynomial)
    factors = result.factor_strings()
    doc = {
        "selector": selector_label,
        "d_scale": args.d_scale,
        "polynomial": poly,
        "invariant_factors": factors,
        "free_rank": result.free_rank,
    }
    _emit(
        doc,
        args.json,
        [
            poly,
            "invariant factors: " + ("; ".join(factors) if factors else "(none)"),
            f"free rank: {result.free_rank}",
        ],
    )
    return EXIT_OK


def cmd_cover(args):
    manifest = load_manifest(args.manifest)
    hom = select_homomorphism(manifest, args.hom)
    _warn_not_surjective(hom)
    cover = build_cover(manifest.torus, hom)
    result = cover_alexander(cover)
    stable = manifest.torus.stable_index
    doc = {
        "hom": hom.label,
        "d": cover.d,
        "w": format_word(cover.w, stable_index=stable),
        "transversal": [format_word(u) for u in cover.schreier_transversal],
        "basis": [format_word(b) for b in cover.subgroup_basis],
        "lifted_monodromy": [
            format_word(w) for w in cover.lifted_monodromy.images
        ],
        "polynomial": format_polynomial(result.polynomial),
    }
    _emit(
        doc,
        args.json,
        [
            f"cover degree d: {cover.d}",
            f"witness w: {format_word(cover.w) or '(empty)'}",
            f"subgroup rank: {len(cover.subgroup_basis)}",
            "basis: " + ", ".join(format_word(b) for b in cover.subgroup_basis),
            f"polynomial: {format_polynomial(result.polynomial)}",
        ],
    )
    return EXIT_OK


def _rep_battery(manifest):
    battery = [("trivial", trivial_representation(manifest.torus.fiber_rank))]
    for hom in manifest.homomorphisms:
        battery.append((f"regular-{hom.label}", regular_representation(hom)))
    for rep in manifest.representations:
        battery.append((rep.label, rep))
    return battery


def _selected_homs(args, manifest):
    if getattr(args, "hom", None) is not None:
        return [select_homomorphism(manifest, args.hom)]
    return list(manifest.homomorphisms)


def cmd_verify(args):
    manifest = load_manifest(args.manifest)
    torus = manifest.torus
    which = args.which
    doc = {"which": which}
    ok = True

    if which == "shapiro":
        checks = []
        for hom in _selected_homs(args, manifest):
            report = verify_shapiro(torus, hom)
            checks.append({"hom": hom.label, **report})
            ok = ok and report["equal"]
        doc["checks"] = checks
    elif which == "lemma4":
        checks = []
        for label, rep in _rep_battery(manifest):
            for d in (2, 3):
                report = lemma4_check(torus, rep, d)
                checks.append({"rep": label, **report})
                ok = ok and report["equal"]
        doc["checks"] = checks
    elif which == "lemma5":
        battery = _rep_battery(manifest)
        checks = []
        for i, (label_a, rep_a) in enumerate(battery):
            for label_b, rep_b in battery[i:]:
                equal = lemma5_check(torus, rep_a, rep_b)
                checks.append({"a": label_a, "b": label_b, "equal": equal})
                ok = ok and equal
        doc["checks"] = checks
    elif which == "theorem2":
        checks = []
        for hom in _selected_homs(args, manifest):
            report = theorem2_report(torus, hom)
            hom_ok = report["existence_equal"] and (
                not report["twisted_obstructs"] or report["cover_obstructs"]
            )
            checks.append({"hom": hom.label, "ok": hom_ok, **report})
            ok = ok and hom_ok
        doc["checks"] = checks
    elif which == "order-lemmas":
        depth = _resolve_depth(args, manifest)
        trials = _resolve(args, manifest, "trials", 500)
        seed = _resolve(args, manifest, "seed", 0)
        commutators = lemma_comm_suite(2, trials, depth=depth, seed=seed)
        axioms = bi_order_axiom_suite(2, trials, depth=depth, seed=seed)
        doc.update(
            {
                "seed": seed,
                "commutators": commutators,
                "axioms": axioms,
            }
        )
        ok = commutators["violations"] == 0 and axioms["violations"] == 0
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown verification {which!r}")

    doc["ok"] = ok
    print(json.dumps(doc, sort_keys=True, indent=2))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_report(args):
    manifest = load_manifest(args.manifest)
    torus = manifest.torus
    classical = classical_alexander(torus)
    verdict = clay_rolfsen_verdict(classical.polynomial)
    doc = {
        "label": torus.label,
        "classical": {
            "polynomial": format_polynomial(classical.polynomial),
            "positive_root_count": verdict.positive_root_count,
            "status": verdict.status.value,
        },
        "homomorphisms": [],
    }
    ok = True
    for hom in manifest.homomorphisms:
        shapiro = verify_shapiro(torus, hom)
        theorem2 = theorem2_report(torus, hom)
        hom_ok = shapiro["equal"] and theorem2["existence_equal"]
        ok = ok and hom_ok
        doc["homomorphisms"].append(
            {
                "label": hom.label,
                "surjective": hom.is_surjective(),
                "shapiro": shapiro,
                "theorem2": theorem2,
                "ok": hom_ok,
            }
        )
    doc["ok"] = ok
    print(json.dumps(doc, sort_keys=True, indent=2))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orderlex",
        description=(
            "Exact Alexander polynomial and bi-orderability computations "
            "for mapping tori of free-group automorphisms"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, hom=False, rep=False, d_scale=False, suite=False):
        p.add_argument("manifest", help="path to a JSON manifest")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        if hom:
            p.add_argument("--hom", help="homomorphism label or index")
        if rep:
            p.add_argument("--rep", help="representation label, index, or 'trivial'")
        if d_scale:
            p.add_argument(
                "--d-scale",
                dest="d_scale",
                type=int,
                default=1,
                help="exponent assigned to the stable letter (default 1)",
            )
        if suite:
            p.add_argument("--depth", type=int, help="Magnus truncation depth")
            p.add_argument("--trials", type=int, help="randomized trials per suite")
            p.add_argument("--seed", type=int, help="random seed echoed in reports")

    p = sub.add_parser("alexander", help="classical polynomial and verdict")
    add_common(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("twisted", help="twisted polynomial for a selector")
    add_common(p, hom=True, rep=True, d_scale=True)
    p.set_defaults(func=cmd_twisted)

    p = sub.add_parser("cover", help="cover data and cover polynomial")
    add_common(p, hom=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="run a verification battery")
    p.add_argument(
        "which",
        choices=["shapiro", "lemma4", "lemma5", "theorem2", "order-lemmas"],
    )
    add_common(p, hom=True, suite=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="full summary for a manifest")
    add_common(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ManifestError, WordParseError, PolynomialParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (CertificationError, IllDefinedHomomorphismError, RepresentationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except SelectorError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SELECTOR


if __name__ == "__main__":
    sys.exit(main())
