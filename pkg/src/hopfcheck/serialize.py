"""Flat-file formats.

Algebras serialize as a single JSON document with sparse structure-constant
quadruples [i, j, k, "c"]; scalars are decimal residue strings for prime
fields and "num/den" strings for the rationals.  YD module data extends the
algebra document with "action" and "coaction" quadruple lists.  Omitted
tensor entries are zero.  Identical inputs serialize byte-identically.
"""

from __future__ import annotations

import json

import numpy as np

from .fields import make_field
from .hopf import HopfAlgebra, Tensor3, YDModule

SCHEMA_VERSION = 1


def _tensor_entries(field, t):
    return [[int(i), int(j), int(k), field.scalar_str(v)]
            for i, j, k, v in sorted(t.entries(), key=lambda e: (e[0], e[1], e[2]))]


def _vec(field, v):
    return [field.scalar_str(x) for x in np.asarray(v)]


def _mat_entries(field, m):
    out = []
    m = np.asarray(m)
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            if m[i, j] != 0:
                out.append([i, j, field.scalar_str(m[i, j])])
    return out


def hopf_to_dict(H):
    f = H.field
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": f.describe(),
        "dim": H.dim,
        "basis": list(H.labels),
        "mult": _tensor_entries(f, H.mult),
        "unit": _vec(f, H.unit),
        "comult": _tensor_entries(f, H.comult),
        "counit": _vec(f, H.counit),
        "antipode": _mat_entries(f, H.antipode),
    }
    if H.module is not None and H.module.base is not None:
        doc["base"] = hopf_to_dict(H.module.base)
        doc["action"] = _tensor_entries(f, H.module.act)
        doc["coaction"] = _tensor_entries(f, H.module.coact)
    if H.name:
        doc["name"] = H.name
    return doc


def hopf_from_dict(doc):
    fd = doc["field"]
    f = make_field(fd["p"], fd.get("root_order", 1))
    d = doc["dim"]
    mult = [(i, j, k, f.scalar_from_str(c)) for i, j, k, c in doc["mult"]]
    comult = [(i, j, k, f.scalar_from_str(c)) for i, j, k, c in doc["comult"]]
    unit = [f.scalar_from_str(c) for c in doc["unit"]]
    counit = [f.scalar_from_str(c) for c in doc["counit"]]
    S = f.zeros((d, d))
    for i, j, c in doc["antipode"]:
        S[i, j] = f.scalar_from_str(c)
    module = None
    if "base" in doc:
        base = hopf_from_dict(doc["base"])
        act = Tensor3(f, (base.dim, d, d),
                      [(i, j, k, f.scalar_from_str(c)) for i, j, k, c in doc["action"]])
        coact = Tensor3(f, (d, base.dim, d),
                        [(i, j, k, f.scalar_from_str(c)) for i, j, k, c in doc["coaction"]])
        module = YDModule(base, d, act, coact)
    return HopfAlgebra(f, doc["basis"], mult, unit, comult, counit, S,
                       module=module, name=doc.get("name", ""))


def dumps(H):
    return json.dumps(hopf_to_dict(H), sort_keys=True, separators=(",", ":"))


def loads(text):
    return hopf_from_dict(json.loads(text))


def hopf_equal(A, B):
    """Structure-constant equality (same basis order)."""
    if A.dim != B.dim or A.field.describe() != B.field.describe():
        return False
    return dumps(A) == dumps(B)
