"""Certificate JSON: canonical, hashable, float-free.

A certificate records the classification evidence, the three equivalent
one-sided verdicts (socle embedding, torsion-free character, cyclic
dual), and any extension-property verdicts, keyed by a content hash over
the verdict-relevant fields.
"""

import hashlib
import json

TOOL_VERSION = "0.1.0"


def canonical_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def content_hash(payload):
    body = {k: v for k, v in payload.items() if k != "hash"}
    return hashlib.sha256(canonical_json(body).encode()).hexdigest()


def classification_payload(cls):
    return {
        "semisimple": cls.semisimple,
        "quasi_frobenius": cls.quasi_frobenius,
        "frobenius": cls.frobenius,
        "socle_embeds_left": cls.socle_embeds_left,
        "socle_embeds_right": cls.socle_embeds_right,
        "nakayama": list(cls.nakayama) if cls.nakayama is not None else None,
        "mu": list(cls.mu),
        "nu": list(cls.nu),
        "mu_right": list(cls.mu_right),
        "nu_right": list(cls.nu_right),
        "idempotents": list(cls.decomposition.idempotents),
        "basic_idempotents": list(cls.decomposition.basic),
    }


def character_payload(chi):
    if chi is None:
        return {"present": False}
    return {
        "present": True,
        "generator_orders": list(chi.basis.orders),
        "generators": list(chi.basis.generators),
        "values": [[v.num, v.den] for v in chi.gen_values()],
    }


def macwilliams_payload(report):
    out = {
        "length": report.length,
        "code_size_cap": report.code_size_cap,
        "holds": report.holds,
        "codes_checked": report.codes_checked,
        "homs_checked": report.homs_checked,
        "oracle_runs": report.oracle_runs,
        "notes": list(report.notes),
    }
    if report.counterexample is not None:
        domain, image, graph = report.counterexample
        out["counterexample"] = {
            "domain": [list(v) for v in domain],
            "image": [list(v) for v in image],
            "hom": [[list(x), list(y)] for x, y in graph],
        }
    return out


def certificate(ring, spec_text, cls, chi, dual_cyclic, macwilliams=()):
    payload = {
        "ring": {"name": ring.name, "order": ring.order, "spec": spec_text},
        "classification": classification_payload(cls),
        "torsion_free_character": character_payload(chi),
        "dual_module": {"cyclic": dual_cyclic},
        "macwilliams": [macwilliams_payload(r) for r in macwilliams],
        "tool_version": TOOL_VERSION,
    }
    payload["hash"] = content_hash(payload)
    return payload


def certificate_text(payload):
    """Human-readable rendering carrying the same verdicts as the JSON."""
    ring = payload["ring"]
    cls = payload["classification"]
    chi = payload["torsion_free_character"]
    lines = [
        f"ring {ring['name']} (order {ring['order']})",
        f"  semisimple:          {cls['semisimple']}",
        f"  quasi-Frobenius:     {cls['quasi_frobenius']}",
        f"  Frobenius:           {cls['frobenius']}",
        f"  socle embeds (L/R):  {cls['socle_embeds_left']} / {cls['socle_embeds_right']}",
        f"  nakayama:            {cls['nakayama']}",
        f"  mu: {cls['mu']}  nu: {cls['nu']}",
        f"  torsion-free char:   {'present' if chi['present'] else 'absent'}",
        f"  dual module cyclic:  {payload['dual_module']['cyclic']}",
    ]
    if chi["present"]:
        vals = ", ".join(f"{n}/{d}" for n, d in chi["values"])
        lines.append(f"    values on generators: {vals or '(zero ring)'}")
    for mw in payload["macwilliams"]:
        verdict = "holds-on-scope" if mw["holds"] else "counterexample"
        lines.append(f"  macwilliams n={mw['length']} cap={mw['code_size_cap']}: "
                     f"{verdict} ({mw['codes_checked']} codes, {mw['homs_checked']} homs)")
        if not mw["holds"]:
            ce = mw["counterexample"]
            lines.append(f"    domain {ce['domain']} -> image {ce['image']}")
            lines.append(f"    hom {ce['hom']}")
    lines.append(f"  hash: {payload['hash']}")
    return "\n".join(lines) + "\n"
