"""Exact, byte-reproducible serialization of maps and bases.

CSV: one header row of domain labels, then one row per codomain basis
label with entries rendered exactly as strings.  JSON: explicit basis
label arrays plus sparse entries; payloads stay exact (ints as ints,
rationals as "p/q" strings, polynomials as coefficient lists), so a dump
parses back to an equal LinearMap.  Nothing here writes timestamps.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from fractions import Fraction

from .iso import IsoContext
from .rings import (
    QQ,
    ZZ,
    IntPoly,
    IntPolynomialRing,
    PrimeField,
    Ring,
)
from .schur import HookSchurSpace
from .spaces import (
    LinearMap,
    basis,
    label_from_json,
    label_str,
    label_to_json,
    space_from_json,
    space_to_json,
)


def ring_to_json(ring: Ring):
    if ring == ZZ:
        return {"kind": "int"}
    if ring == QQ:
        return {"kind": "rat"}
    if isinstance(ring, PrimeField):
        return {"kind": "fp", "p": ring.p}
    if isinstance(ring, IntPolynomialRing):
        return {"kind": "poly", "var": ring.var}
    raise ValueError(f"no serialization for ring {ring!r}")


def ring_from_json(data) -> Ring:
    kind = data["kind"]
    if kind == "int":
        return ZZ
    if kind == "rat":
        return QQ
    if kind == "fp":
        return PrimeField(data["p"])
    if kind == "poly":
        return IntPolynomialRing(data["var"])
    raise ValueError(f"unknown ring kind {kind!r}")


def payload_to_json(ring: Ring, value):
    if ring == QQ:
        return str(Fraction(value))
    if isinstance(ring, IntPolynomialRing):
        return list(value.coeffs)
    return value


def payload_from_json(ring: Ring, data):
    if ring == QQ:
        return Fraction(data)
    if isinstance(ring, IntPolynomialRing):
        return IntPoly(data, ring.var)
    return int(data)


def linear_map_to_json(A: LinearMap) -> dict:
    dom = basis(A.domain)
    cod = basis(A.codomain)
    cod_idx = {l: n for n, l in enumerate(cod)}
    entries = []
    for c, col in enumerate(A.cols):
        for l, v in sorted(col.items(), key=lambda kv: cod_idx[kv[0]]):
            entries.append([cod_idx[l], c, payload_to_json(A.ring, v)])
    entries.sort(key=lambda e: (e[1], e[0]))
    return {
        "kind": "linear_map",
        "ring": ring_to_json(A.ring),
        "domain": space_to_json(A.domain),
        "codomain": space_to_json(A.codomain),
        "domain_basis": [label_to_json(A.domain, l) for l in dom],
        "codomain_basis": [label_to_json(A.codomain, l) for l in cod],
        "entries": entries,
    }


def linear_map_from_json(data) -> LinearMap:
    if data.get("kind") != "linear_map":
        raise ValueError("not a serialized linear map")
    ring = ring_from_json(data["ring"])
    domain = space_from_json(data["domain"])
    codomain = space_from_json(data["codomain"])
    dom = basis(domain)
    cod = basis(codomain)
    got_dom = [label_from_json(domain, l) for l in data["domain_basis"]]
    got_cod = [label_from_json(codomain, l) for l in data["codomain_basis"]]
    if got_dom != list(dom) or got_cod != list(cod):
        raise ValueError("basis labels do not match the declared spaces")
    cols: list[dict] = [{} for _ in dom]
    for r, c, v in data["entries"]:
        cols[c][cod[r]] = payload_from_json(ring, v)
    return LinearMap(domain, codomain, ring, cols)


def linear_map_to_csv(A: LinearMap) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    dom = basis(A.domain)
    writer.writerow([""] + [label_str(A.domain, l) for l in dom])
    for row_label in basis(A.codomain):
        writer.writerow(
            [label_str(A.codomain, row_label)]
            + [A.ring.to_str(col.get(row_label, A.ring.zero)) for col in A.cols]
        )
    return out.getvalue()


def basis_to_json(hook: HookSchurSpace) -> list:
    out = []
    for pair in hook.pairs:
        out.append(
            {
                "pair": label_to_json(hook.coords, pair),
                "support": [
                    [label_to_json(hook.ambient, lab), 1]
                    for lab in hook.kernel_support(pair)
                ],
            }
        )
    return out


def weight_block_text(ctx: IsoContext, w: int) -> str:
    """Canonical text form of one Y-degree block of the paired coordinate
    matrix: row labels, column labels, then dense integer rows."""
    rows, cols, mat = ctx.weight_block_matrix(w)
    lines = [
        "rows=" + ";".join(label_str(ctx.hook.coords, p) for p in rows),
        "cols=" + ";".join(label_str(ctx.domain, c) for c in cols),
    ]
    lines.extend(",".join(map(str, r)) for r in mat)
    return "\n".join(lines) + "\n"


def weight_block_digest(ctx: IsoContext, w: int) -> str:
    return hashlib.sha256(weight_block_text(ctx, w).encode()).hexdigest()


def dump_payload(A: LinearMap, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(linear_map_to_json(A), indent=2) + "\n"
    if fmt == "csv":
        return linear_map_to_csv(A)
    raise ValueError(f"unknown format {fmt!r}")
