"""Build a serializable 3D scene document from a model.

One tessellated, colored object per visible surface (opacity 0 hides a
surface, e.g. bounding spheres that exist only to close the geometry).
The JSON wire format (scene schema v1) is what the browser viewer consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import Model
from .colors import angel_color, color_entry  # noqa: F401  (re-exported)
from .errors import EmptyScene
from .geometry import Aabb, Vec3, centroid, is_bounded, plane_anchor
from .jsonio import canonical_json
from .tessellate import DEFAULT_PLANE_HALF_EXTENT, TriMesh, mesh_aabb, tessellate

SCENE_VERSION = 1


@dataclass(frozen=True)
class SceneLabel:
    text: str
    anchor: Vec3


@dataclass(frozen=True)
class SceneObject:
    surface_id: int
    name: str
    rgb: tuple[float, float, float]
    opacity: float
    mesh: TriMesh
    label: SceneLabel | None


@dataclass(frozen=True)
class SceneDoc:
    version: int
    title: str
    bbox: Aabb
    objects: tuple[SceneObject, ...]


def build_scene(model: Model, resolution: int = 32, labels: bool = False,
                opacity_override: float | None = None,
                plane_half_extent: float = DEFAULT_PLANE_HALF_EXTENT) -> SceneDoc:
    """Tessellate every visible surface into a scene document.

    Labels anchor at the centroid (bounded kinds) or the nearest-to-origin
    point (planes). The scene bbox is the union of the object boxes.
    """
    visible = [s for s in model.surfaces if s.opacity > 0.0]
    visible.sort(key=lambda s: s.id)
    if not visible:
        raise EmptyScene("model has no visible surfaces to draw")
    objects = []
    bbox: Aabb | None = None
    for surf in visible:
        mesh = tessellate(surf.kind, resolution, plane_half_extent)
        obox = mesh_aabb(mesh)
        bbox = obox if bbox is None else bbox.union(obox)
        label = None
        if labels:
            anchor = centroid(surf.kind) if is_bounded(surf.kind) \
                else plane_anchor(surf.kind)
            label = SceneLabel(surf.name, anchor)
        opacity = surf.opacity if opacity_override is None else float(opacity_override)
        objects.append(SceneObject(surf.id, surf.name, color_entry(surf.color).rgb,
                                   opacity, mesh, label))
    return SceneDoc(SCENE_VERSION, model.title, bbox, tuple(objects))


def _vec_list(v: Vec3) -> list[float]:
    return [float(v.x), float(v.y), float(v.z)]


def scene_to_dict(doc: SceneDoc) -> dict:
    objects = []
    for obj in sorted(doc.objects, key=lambda o: o.surface_id):
        label = None
        if obj.label is not None:
            label = {"text": obj.label.text, "anchor": _vec_list(obj.label.anchor)}
        objects.append({
            "surface_id": obj.surface_id,
            "name": obj.name,
            "rgb": [float(c) for c in obj.rgb],
            "opacity": float(obj.opacity),
            "mesh": {
                "vertices": [float(x) for x in obj.mesh.vertices.reshape(-1)],
                "triangles": [int(i) for i in obj.mesh.triangles.reshape(-1)],
            },
            "label": label,
        })
    return {
        "version": doc.version,
        "title": doc.title,
        "bbox": {"min": _vec_list(doc.bbox.min), "max": _vec_list(doc.bbox.max)},
        "objects": objects,
    }


def write_scene(doc: SceneDoc) -> bytes:
    """Canonical scene JSON: objects ordered by surface id, deterministic
    bytes for identical models."""
    return canonical_json(scene_to_dict(doc))
