"""Command-line workbench.

    frobring classify RINGFILE        full classification certificate
    frobring verify RINGFILE          extension property at one length
    frobring search RINGFILE          counterexample search over lengths
    frobring catalog DIR              classify every .ring file in a directory
    frobring dual RINGFILE            dual-module report
    frobring character RINGFILE       torsion-free character search

Exit codes: 0 ok, 1 parse error, 2 cap exceeded, 3 internal
inconsistency (two provably-equal verdicts disagreed).
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .certificate import (TOOL_VERSION, certificate, certificate_text,
                          content_hash, macwilliams_payload)
from .codes import search_counterexample, verify_macwilliams
from .construct import build_ring, expr_to_text, order_cap
from .decomp import classify
from .duality import (dual_group, dual_is_cyclic, find_torsion_free_character,
                      scan_torsion_free, abelian_basis,
                      dual_covered_by_proper_submodules)
from .errors import CapExceeded, FrobringError, InternalInconsistency, ParseError
from .rings import FiniteRing
from .specparse import parse_ring_file

EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_INCONSISTENT = 3


def _load_ring(path, cap):
    text = Path(path).read_text()
    name, expr = parse_ring_file(text, Path(path).stem)
    ring = build_ring(expr, cap)
    if name != ring.name:
        # renamed copy, so the expression-keyed build cache stays pristine
        ring = FiniteRing(ring.order, ring.add_table, ring.mul_table, ring.zero,
                          ring.one, name=name, labels=ring.labels, expr=ring.expr,
                          check=False)
    return ring, expr, text


def _classify_with_gate(ring):
    """Classification plus the three independently computed verdicts.

    Socle embedding (decomposition route), character existence
    (exhaustive scan and the constructive path), and dual cyclicity
    (orbit scan) are provably equivalent; any disagreement is a bug and
    trips the inconsistency gate.
    """
    cls = classify(ring)
    scanned = scan_torsion_free(ring, side="left")
    constructed = find_torsion_free_character(ring)
    cyclic = dual_is_cyclic(ring)
    verdicts = {
        "socle_embeds_left": cls.socle_embeds_left,
        "character_by_scan": scanned is not None,
        "character_constructed": constructed is not None,
        "dual_cyclic": cyclic,
    }
    if len(set(verdicts.values())) != 1:
        raise InternalInconsistency(f"equivalent verdicts disagree: {verdicts}")
    return cls, constructed, cyclic


def cmd_classify(args):
    ring, expr, _ = _load_ring(args.ringfile, args.order_cap)
    cls, chi, cyclic = _classify_with_gate(ring)
    payload = certificate(ring, expr_to_text(expr), cls, chi, cyclic)
    _emit(payload, args.format)
    return 0


def cmd_verify(args):
    ring, expr, _ = _load_ring(args.ringfile, args.order_cap)
    cls, chi, cyclic = _classify_with_gate(ring)
    report = verify_macwilliams(ring, args.length, args.max_code_size,
                                hom_cap=args.hom_cap)
    payload = certificate(ring, expr_to_text(expr), cls, chi, cyclic, [report])
    _emit(payload, args.format)
    return 0


def cmd_search(args):
    ring, expr, _ = _load_ring(args.ringfile, args.order_cap)
    cls, chi, cyclic = _classify_with_gate(ring)
    found, reports = search_counterexample(ring, args.max_length,
                                           args.max_code_size,
                                           hom_cap=args.hom_cap)
    payload = certificate(ring, expr_to_text(expr), cls, chi, cyclic, reports)
    payload["counterexample_found"] = found is not None
    payload["hash"] = content_hash(payload)
    _emit(payload, args.format)
    return 0


def cmd_catalog(args):
    indir = Path(args.dir)
    outdir = Path(args.out) if args.out else indir
    outdir.mkdir(parents=True, exist_ok=True)
    index = {"tool_version": TOOL_VERSION, "rings": {}, "errors": {}}
    for path in sorted(indir.glob("*.ring")):
        text = path.read_text()
        spec_hash = content_hash({"spec": text, "tool_version": TOOL_VERSION})
        cert_path = outdir / (path.stem + ".cert.json")
        try:
            payload = _cached_certificate(cert_path, spec_hash)
            if payload is None:
                name, expr = parse_ring_file(text, path.stem)
                ring = build_ring(expr, args.order_cap)
                ring.name = name
                cls, chi, cyclic = _classify_with_gate(ring)
                payload = certificate(ring, expr_to_text(expr), cls, chi, cyclic)
                payload["spec_hash"] = spec_hash
                _write_atomic(cert_path, json.dumps(payload, sort_keys=True, indent=2))
            index["rings"][path.stem] = _index_row(payload, cert_path.name)
        except FrobringError as exc:
            index["errors"][path.stem] = f"{type(exc).__name__}: {exc}"
    index["summary"] = _cross_tab(index["rings"])
    _write_atomic(outdir / "index.json", json.dumps(index, sort_keys=True, indent=2))
    if args.format == "text":
        _print_index(index)
    else:
        print(json.dumps(index, sort_keys=True, indent=2))
    return 0


def _cached_certificate(cert_path, spec_hash):
    if not cert_path.exists():
        return None
    try:
        payload = json.loads(cert_path.read_text())
    except json.JSONDecodeError:
        return None
    if payload.get("spec_hash") != spec_hash:
        return None
    return payload


def _index_row(payload, cert_file):
    cls = payload["classification"]
    return {
        "order": payload["ring"]["order"],
        "semisimple": cls["semisimple"],
        "quasi_frobenius": cls["quasi_frobenius"],
        "frobenius": cls["frobenius"],
        "socle_embeds_left": cls["socle_embeds_left"],
        "character_present": payload["torsion_free_character"]["present"],
        "dual_cyclic": payload["dual_module"]["cyclic"],
        "certificate": cert_file,
    }


def _cross_tab(rows):
    # the three equivalent conditions agree per ring; tabulate the classes
    out = {"rings": len(rows), "frobenius": 0, "quasi_frobenius": 0,
           "semisimple": 0, "socle_embeds_left": 0, "equivalence_violations": 0}
    for row in rows.values():
        for key in ("frobenius", "quasi_frobenius", "semisimple", "socle_embeds_left"):
            out[key] += bool(row[key])
        if not (row["socle_embeds_left"] == row["character_present"] == row["dual_cyclic"]):
            out["equivalence_violations"] += 1
    return out


def _print_index(index):
    for name, row in sorted(index["rings"].items()):
        marks = [k for k in ("semisimple", "quasi_frobenius", "frobenius",
                             "socle_embeds_left") if row[k]]
        print(f"{name:12s} order {row['order']:4d}  {', '.join(marks) or 'none'}")
    for name, err in sorted(index["errors"].items()):
        print(f"{name:12s} ERROR {err}")
    print(f"summary: {index['summary']}")


def cmd_dual(args):
    ring, _, _ = _load_ring(args.ringfile, args.order_cap)
    basis = abelian_basis(ring)
    dual = dual_group(ring)
    payload = {
        "ring": {"name": ring.name, "order": ring.order},
        "invariant_factors": list(basis.orders),
        "exponent": basis.exponent,
        "characters": dual.size,
        "cyclic_right_module": dual_is_cyclic(ring),
        "covered_by_proper_submodules": dual_covered_by_proper_submodules(ring),
        "tool_version": TOOL_VERSION,
    }
    _emit(payload, args.format, text_fn=_dual_text)
    return 0


def _dual_text(payload):
    return (f"dual of {payload['ring']['name']}: {payload['characters']} characters, "
            f"invariant factors {payload['invariant_factors']}, "
            f"cyclic={payload['cyclic_right_module']}, "
            f"covered={payload['covered_by_proper_submodules']}\n")


def cmd_character(args):
    ring, _, _ = _load_ring(args.ringfile, args.order_cap)
    chi = find_torsion_free_character(ring)
    scanned = scan_torsion_free(ring, side="left")
    if (chi is None) != (scanned is None):
        raise InternalInconsistency("constructive and scan character verdicts disagree")
    payload = {
        "ring": {"name": ring.name, "order": ring.order},
        "present": chi is not None,
        "tool_version": TOOL_VERSION,
    }
    if chi is not None:
        payload["generator_orders"] = list(chi.basis.orders)
        payload["values"] = [[v.num, v.den] for v in chi.gen_values()]
    _emit(payload, args.format, text_fn=_char_text)
    return 0


def _char_text(payload):
    if not payload["present"]:
        return f"{payload['ring']['name']}: no left torsion-free character\n"
    vals = ", ".join(f"{n}/{d}" for n, d in payload["values"])
    return (f"{payload['ring']['name']}: left torsion-free character with values "
            f"[{vals}] on generators of orders {payload['generator_orders']}\n")


def _emit(payload, fmt, text_fn=None):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print((text_fn or certificate_text)(payload), end="")


def _write_atomic(path, text):
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def _add_common(sub):
    sub.add_argument("--order-cap", type=int, default=None,
                     help="max ring order (default 4096; env FROBRING_ORDER_CAP)")
    sub.add_argument("--format", choices=("json", "text"), default="text")


def main(argv=None):
    parser = argparse.ArgumentParser(prog="frobring", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="classification certificate")
    p.add_argument("ringfile")
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = subs.add_parser("verify", help="extension property at one length")
    p.add_argument("ringfile")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--max-code-size", type=int, default=256)
    p.add_argument("--hom-cap", type=int, default=10 ** 6)
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = subs.add_parser("search", help="counterexample search over lengths")
    p.add_argument("ringfile")
    p.add_argument("--max-length", type=int, default=2)
    p.add_argument("--max-code-size", type=int, default=256)
    p.add_argument("--hom-cap", type=int, default=10 ** 6)
    _add_common(p)
    p.set_defaults(fn=cmd_search)

    p = subs.add_parser("catalog", help="classify a directory of .ring files")
    p.add_argument("dir")
    p.add_argument("--out", default=None, help="output directory (default: input dir)")
    _add_common(p)
    p.set_defaults(fn=cmd_catalog)

    p = subs.add_parser("dual", help="dual-module report")
    p.add_argument("ringfile")
    _add_common(p)
    p.set_defaults(fn=cmd_dual)

    p = subs.add_parser("character", help="torsion-free character search")
    p.add_argument("ringfile")
    _add_common(p)
    p.set_defaults(fn=cmd_character)

    args = parser.parse_args(argv)
    if args.order_cap is None:
        args.order_cap = order_cap()
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
