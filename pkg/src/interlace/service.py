"""Stateless local HTTP/JSON service backing the explorer UI.

Every handler delegates to the same library functions the CLI uses and
speaks the same canonical JSON schemas.  Malformed JSON bodies get 400;
domain and guard violations get 422 with {"error": code, "detail": ...}.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from . import census, serialize
from .errors import ParameterError, WorkbenchError
from .mutation import is_mutable, mutate, mutation_path
from .quivers import build_higher_A_quiver, tensor_quiver
from .slices import construct_Ck, is_slice, slice_collisions, standard_slice
from .strip import apr_mutate, gamma_quiver, strip_category
from .subsets import CyclicSubset, first_intertwining_pair

app = FastAPI(title="interlace", docs_url=None, redoc_url=None)


def _json_response(doc) -> Response:
    return Response(content=serialize.dumps(doc), media_type="application/json")


@app.exception_handler(WorkbenchError)
async def _domain_error(_request, err: WorkbenchError):
    return JSONResponse(status_code=422, content=err.to_json())


async def _body(request: Request) -> dict:
    raw = await request.body()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as err:
        raise _Malformed(str(err))
    if not isinstance(doc, dict):
        raise _Malformed("body must be a JSON object")
    return doc


class _Malformed(Exception):
    pass


@app.exception_handler(_Malformed)
async def _malformed(_request, err: _Malformed):
    return JSONResponse(status_code=400, content={"error": "malformed-json", "detail": str(err)})


def _field(doc: dict, name: str):
    if name not in doc:
        raise ParameterError(f"missing field {name!r}")
    return doc[name]


@app.get("/api/slice/standard")
async def slice_standard(n: int, l: int):
    return _json_response(serialize.collection_to_dict(standard_slice(n, l)))


@app.post("/api/collection/validate")
async def collection_validate(request: Request):
    doc = await _body(request)
    c = serialize.collection_from_dict(doc.get("collection", doc))
    pair = first_intertwining_pair(c)
    out = {"ok": pair is None}
    if pair is not None:
        out["pair"] = [list(pair[0].elements), list(pair[1].elements)]
    return _json_response(out)


@app.post("/api/collection/construct")
async def collection_construct(request: Request):
    doc = await _body(request)
    k = int(_field(doc, "k"))
    slice_doc = _field(doc, "slice")
    if slice_doc == "standard":
        t = standard_slice(int(_field(doc, "n")), int(_field(doc, "l")))
    else:
        t = serialize.collection_from_dict(slice_doc)
    prime = bool(doc.get("prime", False))
    result = construct_Ck(t, k, endpoints="check" if prime else "hat")
    return _json_response(serialize.collection_to_dict(result))


@app.post("/api/collection/is-mutable")
async def collection_is_mutable(request: Request):
    doc = await _body(request)
    c = serialize.collection_from_dict(_field(doc, "collection"))
    member = CyclicSubset.of(c.n, _field(doc, "element"))
    return _json_response(is_mutable(c, member).to_json())


@app.post("/api/slice/check")
async def slice_check(request: Request):
    doc = await _body(request)
    c = serialize.collection_from_dict(doc.get("collection", doc))
    cert = is_slice(c)
    if cert is not None:
        return _json_response({"slice": True, "certificate": cert.to_json()})
    collisions = {
        str(i): [[list(a.elements), list(b.elements)] for a, b in pairs]
        for i, pairs in slice_collisions(c).items()
    }
    return _json_response({"slice": False, "collisions": collisions})


@app.post("/api/mutate")
async def mutate_endpoint(request: Request):
    doc = await _body(request)
    c = serialize.collection_from_dict(_field(doc, "collection"))
    member = CyclicSubset.of(c.n, _field(doc, "element"))
    result = mutate(c, member, _field(doc, "direction"))
    return _json_response({"ok": True, "result": serialize.collection_to_dict(result)})


@app.post("/api/mutation-path")
async def mutation_path_endpoint(request: Request):
    doc = await _body(request)
    t = serialize.collection_from_dict(_field(doc, "collection"))
    member = CyclicSubset.of(t.n, _field(doc, "element"))
    steps, result = mutation_path(t, member, int(_field(doc, "k")))
    return _json_response(
        {
            "steps": [{"element": list(s.elements), "direction": d} for s, d in steps],
            "result": serialize.collection_to_dict(result),
        }
    )


@app.get("/api/quiver/{kind}")
async def quiver_endpoint(
    kind: str,
    n: int | None = None,
    k: int | None = None,
    l: int | None = None,
    m: int | None = None,
    d: int | None = None,
):
    if kind == "a":
        if m is None or d is None:
            raise ParameterError("kind 'a' needs query params m and d")
        return _json_response(serialize.quiver_to_dict(build_higher_A_quiver(m, d)))
    if n is None or k is None or l is None:
        raise ParameterError(f"kind {kind!r} needs query params n, k and l")
    if kind == "tensor":
        return _json_response(serialize.quiver_to_dict(tensor_quiver(n, k, l)))
    if kind == "gamma":
        return _json_response(serialize.quiver_to_dict(gamma_quiver(n, k, l)))
    if kind == "apr":
        return _json_response(serialize.quiver_to_dict(apr_mutate(n, k, l)))
    if kind == "strip":
        return _json_response(serialize.strip_to_dict(strip_category(n, k, l)))
    raise ParameterError(f"unknown quiver kind {kind!r}")


@app.post("/api/quiver/apr-mutate")
async def apr_endpoint(request: Request):
    doc = await _body(request)
    n, k, l = int(_field(doc, "n")), int(_field(doc, "k")), int(_field(doc, "l"))
    return _json_response(serialize.quiver_to_dict(apr_mutate(n, k, l)))


@app.get("/api/enum/maximal")
async def enum_maximal(n: int, l: int, max_atoms: int = 40):
    found = census.enum_maximal_nonintertwining(n, l, max_atoms=max_atoms)
    return _json_response(
        {
            "count": len(found),
            "sizes": sorted({len(c) for c in found}),
            "collections": [serialize.collection_to_dict(c) for c in found],
        }
    )


@app.get("/api/enum/subs-maximal")
async def enum_subs_maximal(n: int, k: int, l: int, max_atoms: int = 60):
    report = census.enum_maximal_non_l_intertwining(n, k, l, max_atoms=max_atoms)
    return _json_response(report.to_json())


def _mount_frontend() -> None:
    """Serve the explorer UI from / when a built frontend sits next to the
    package checkout; the API works identically without it."""
    from pathlib import Path

    from fastapi.staticfiles import StaticFiles

    root = Path(__file__).resolve().parents[2] / "frontend"
    if (root / "index.html").exists():
        app.mount("/", StaticFiles(directory=root, html=True), name="ui")


_mount_frontend()
