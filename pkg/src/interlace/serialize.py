"""Canonical JSON and DOT forms shared by the CLI and the HTTP service.

Subsets serialize as sorted integer arrays; collections as
{"n", "k", "l", "members"} with members sorted; quivers as
{"vertices", "arrows", "relations"}.  Dumps are compact with sorted keys
so golden-file tests can require byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParameterError
from .quivers import LabeledQuiver
from .slices import SliceCertificate
from .strip import StripCategory
from .subsets import Collection, CyclicSubset


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def subset_to_list(s: CyclicSubset) -> list[int]:
    return list(s.elements)


def collection_to_dict(c: Collection) -> dict:
    return {
        "n": c.n,
        "k": c.k,
        "l": c.l,
        "members": [subset_to_list(m) for m in c.members],
    }


def subset_from_json(n: int, doc: Any) -> CyclicSubset:
    if not isinstance(doc, list) or not all(isinstance(x, int) for x in doc):
        raise ParameterError(f"subset must be a list of integers, got {doc!r}")
    return CyclicSubset.of(n, doc)


def collection_from_dict(doc: Any) -> Collection:
    if not isinstance(doc, dict):
        raise ParameterError("collection must be an object")
    try:
        n, k, l = int(doc["n"]), int(doc["k"]), int(doc["l"])
        members_doc = doc["members"]
    except (KeyError, TypeError, ValueError) as err:
        raise ParameterError(f"collection needs integer n, k, l and members: {err}")
    if not isinstance(members_doc, list):
        raise ParameterError("members must be a list")
    return Collection.of(n, k, l, (subset_from_json(n, m) for m in members_doc))


def certificate_to_dict(cert: SliceCertificate) -> dict:
    return cert.to_json()


def _label_list(label: tuple[int, ...]) -> list[int]:
    return list(label)


def quiver_to_dict(q: LabeledQuiver) -> dict:
    return {
        "vertices": [_label_list(v) for v in q.vertices],
        "arrows": [
            {"from": _label_list(a.source), "to": _label_list(a.target), "tag": a.tag}
            for a in q.arrows
        ],
        "relations": [
            {
                "left": [_label_list(v) for v in r.left],
                "right": "zero" if r.right is None else [_label_list(v) for v in r.right],
            }
            for r in q.relations
        ],
    }


def strip_to_dict(strip: StripCategory) -> dict:
    quiver = LabeledQuiver(
        tuple(sorted(o.iota.elements for o in strip.objects)), strip.arrows
    )
    doc = quiver_to_dict(quiver)
    doc["strip"] = [
        {
            "pair": [_label_list(o.pair[0]), _label_list(o.pair[1])],
            "iota": subset_to_list(o.iota),
            "projective": o.projective,
        }
        for o in strip.objects
    ]
    return doc


def _dot_id(label: tuple[int, ...]) -> str:
    return '"' + ",".join(str(x) for x in label) + '"'


def _dot_text(label: tuple[int, ...]) -> str:
    if all(x < 10 for x in label):
        return "".join(str(x) for x in label)
    return ",".join(str(x) for x in label)


def quiver_to_dot(q: LabeledQuiver, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for v in q.vertices:
        lines.append(f"  {_dot_id(v)} [label=\"{_dot_text(v)}\"];")
    for a in q.arrows:
        style = " style=dashed" if a.tag == "wrap" else ""
        lines.append(
            f"  {_dot_id(a.source)} -> {_dot_id(a.target)} [label=\"{a.tag}\"{style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
