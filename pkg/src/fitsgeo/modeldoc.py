"""Declarative JSON model documents: load, validate, and save.

A model document lists surfaces (kind tag plus named parameters), materials
(inline compositions or database references) and cells (region text). It is
the CLI's on-disk model format; ``example snake`` emits one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import jsonschema

from .cells import Cell, Model, parse_region, validate_model
from .colors import DEFAULT_COLOR
from .diagnostics import ERROR, Diagnostic
from .errors import FitsGeoError, ModelDocError, NotFound
from .geometry import (
    Box,
    PlaneGeneral,
    PlaneX,
    PlaneY,
    PlaneZ,
    Rcc,
    Rec,
    Rpp,
    Sphere,
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Vec3,
    Wed,
    make_surface,
)
from .jsonio import canonical_json
from .materials import default_db, define_material, material_from_db

_KIND_IO: dict[str, tuple[type, tuple[str, ...], tuple[str, ...]]] = {
    "p": (PlaneGeneral, (), ("a", "b", "c", "d")),
    "px": (PlaneX, (), ("d",)),
    "py": (PlaneY, (), ("d",)),
    "pz": (PlaneZ, (), ("d",)),
    "sph": (Sphere, ("center",), ("r",)),
    "box": (Box, ("base", "e1", "e2", "e3"), ()),
    "rpp": (Rpp, (), ("xmin", "xmax", "ymin", "ymax", "zmin", "zmax")),
    "rcc": (Rcc, ("base", "h"), ("r",)),
    "trc": (Trc, ("base", "h"), ("r_base", "r_top")),
    "tx": (TorusX, ("center",), ("a", "b", "c")),
    "ty": (TorusY, ("center",), ("a", "b", "c")),
    "tz": (TorusZ, ("center",), ("a", "b", "c")),
    "rec": (Rec, ("base", "h", "v1", "v2"), ()),
    "wed": (Wed, ("vertex", "e1", "e2", "e3"), ()),
}
_KIND_CODES = {cls: code for code, (cls, _, _) in _KIND_IO.items()}
_COMMON_SURFACE_FIELDS = {"id", "name", "kind", "color", "opacity"}


def _schema():
    path = resources.files("fitsgeo").joinpath("schemas/model.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _pointer(path_parts) -> str:
    return "/" + "/".join(str(p) for p in path_parts) if path_parts else "/"


def _vec_from(doc, field: str, where: str) -> Vec3:
    value = doc[field]
    if (not isinstance(value, list) or len(value) != 3
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                       for x in value)):
        raise ModelDocError(f"{where}/{field}: expected [x, y, z] numbers")
    return Vec3(float(value[0]), float(value[1]), float(value[2]))


def _surface_from_doc(doc: dict, index: int):
    where = f"/surfaces/{index}"
    kind_code = doc["kind"]
    cls, vec_fields, scalar_fields = _KIND_IO[kind_code]
    allowed = _COMMON_SURFACE_FIELDS | set(vec_fields) | set(scalar_fields)
    unexpected = set(doc) - allowed
    if unexpected:
        raise ModelDocError(
            f"{where}: unexpected fields for kind {kind_code!r}:"
            f" {sorted(unexpected)}")
    kwargs = {}
    for f in vec_fields:
        if f not in doc:
            raise ModelDocError(f"{where}: kind {kind_code!r} needs field {f!r}")
        kwargs[f] = _vec_from(doc, f, where)
    for f in scalar_fields:
        if f not in doc:
            raise ModelDocError(f"{where}: kind {kind_code!r} needs field {f!r}")
        value = doc[f]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ModelDocError(f"{where}/{f}: expected a number")
        kwargs[f] = float(value)
    kind = cls(**kwargs)
    return make_surface(doc["id"], doc["name"], kind,
                        doc.get("color", DEFAULT_COLOR),
                        float(doc.get("opacity", 1.0)))


@dataclass(frozen=True)
class LoadResult:
    model: Model
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return not any(d.severity == ERROR for d in self.diagnostics)


def load_model_doc(path, db=None) -> LoadResult:
    """Parse, resolve and validate a model document.

    Raises ModelDocError (with JSON-pointer paths) for malformed JSON or
    schema violations; semantic problems (unknown database materials, region
    errors, cross-reference gaps) come back as diagnostics.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelDocError(f"{path}: not valid JSON: {exc}") from None

    validator = jsonschema.Draft202012Validator(_schema())
    schema_errors = sorted(validator.iter_errors(doc),
                           key=lambda e: list(e.absolute_path))
    if schema_errors:
        details = "; ".join(
            f"{_pointer(e.absolute_path)}: {e.message}" for e in schema_errors[:10])
        raise ModelDocError(f"{path}: schema violation: {details}")

    model = Model(title=doc.get("title", ""))
    diags: list[Diagnostic] = []

    for i, sdoc in enumerate(doc["surfaces"]):
        try:
            model.surfaces.append(_surface_from_doc(sdoc, i))
        except FitsGeoError as exc:
            if isinstance(exc, ModelDocError):
                raise
            diags.append(Diagnostic(ERROR, type(exc).__name__, str(exc),
                                    f"/surfaces/{i}"))

    for i, mdoc in enumerate(doc.get("materials", [])):
        where = f"/materials/{i}"
        try:
            if "db" in mdoc:
                if db is None:
                    db = default_db()
                material = material_from_db(db, mdoc["db"], mdoc["id"])
                material = define_material(
                    material.id,
                    mdoc.get("name", material.name),
                    mdoc.get("density", material.density),
                    material.composition,
                    material.ratio_mode,
                    mdoc.get("gas", material.gas),
                    mdoc.get("color", material.color),
                )
            else:
                for req in ("name", "density", "composition"):
                    if req not in mdoc:
                        raise ModelDocError(
                            f"{where}: inline material needs field {req!r}")
                material = define_material(
                    mdoc["id"], mdoc["name"], mdoc["density"],
                    [(sp, r) for sp, r in mdoc["composition"]],
                    mdoc.get("mode", "atom"), mdoc.get("gas", False),
                    mdoc.get("color", DEFAULT_COLOR))
            model.materials.append(material)
        except NotFound as exc:
            diags.append(Diagnostic(ERROR, "MaterialNotFound", str(exc), where))
        except FitsGeoError as exc:
            if isinstance(exc, ModelDocError):
                raise
            diags.append(Diagnostic(ERROR, type(exc).__name__, str(exc), where))

    by_name = {}
    for s in model.surfaces:
        by_name.setdefault(s.name, s.id)

    def resolver(name: str):
        return by_name.get(name)

    for i, cdoc in enumerate(doc["cells"]):
        where = f"/cells/{i}"
        try:
            region = parse_region(cdoc["region"], resolver)
            material = cdoc["material"]
            model.cells.append(Cell(cdoc["id"], cdoc["name"], region, material,
                                    cdoc.get("density"), cdoc.get("volume_hint")))
        except FitsGeoError as exc:
            diags.append(Diagnostic(ERROR, type(exc).__name__, str(exc), where))

    diags.extend(validate_model(model))
    return LoadResult(model, diags)


def model_to_doc(model: Model) -> dict:
    """Inverse of loading: a plain dict in model-document shape."""
    surfaces = []
    for s in model.surfaces:
        code = _KIND_CODES[type(s.kind)]
        _, vec_fields, scalar_fields = _KIND_IO[code]
        entry: dict = {"id": s.id, "name": s.name, "kind": code}
        for f in vec_fields:
            v: Vec3 = getattr(s.kind, f)
            entry[f] = [v.x, v.y, v.z]
        for f in scalar_fields:
            entry[f] = float(getattr(s.kind, f))
        entry["color"] = s.color
        entry["opacity"] = s.opacity
        surfaces.append(entry)
    materials = []
    for m in model.materials:
        materials.append({
            "id": m.id,
            "name": m.name,
            "density": m.density,
            "composition": [[sp, r] for sp, r in m.composition],
            "mode": m.ratio_mode,
            "gas": m.gas,
            "color": m.color,
        })
    cells = []
    for c in model.cells:
        from .cells import region_to_text

        entry = {"id": c.id, "name": c.name, "material": c.material,
                 "region": region_to_text(c.region)}
        if c.density_override is not None:
            entry["density"] = c.density_override
        if c.volume_hint is not None:
            entry["volume_hint"] = c.volume_hint
        cells.append(entry)
    return {"title": model.title, "surfaces": surfaces, "materials": materials,
            "cells": cells}


def save_model_doc(model: Model, path) -> bytes:
    """Write the model document with canonical, byte-stable JSON."""
    data = canonical_json(model_to_doc(model))
    Path(path).write_bytes(data)
    return data
