"""Built-in example generator: a snake of growing sphere segments wearing a
conical hat.

Segment centers follow a damped sine wave in the xz-plane and segment radii
grow exponentially with x; the hat is a truncated cone resting on top of the
head sphere. A transparent bounding sphere closes the geometry (void plus
outer cells), so the generated model validates and exports as-is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cells import OUTER, VOID, Cell, Intersection, Model, SenseRef
from .geometry import Sphere, Trc, Vec3, aabb, make_surface
from .materials import MaterialDb, default_db, material_from_db

SEGMENT_MATERIAL = "icrp skin"
HAT_MATERIAL = "polyethylene"

HAT_TOP_FRACTION = 0.4
HAT_HEIGHT_FACTOR = 1.5
WORLD_RADIUS_FACTOR = 1.5


@dataclass(frozen=True)
class SnakeParams:
    """Constants of the segment position and radius laws."""

    n_segments: int = 50
    x_max: float = 5.0
    amplitude: float = 5.0
    frequency: float = 3.0
    damping_scale: float = 0.3
    damping_rate: float = 0.4
    r0: float = 0.02
    growth: float = 0.2

    def __post_init__(self):
        if self.n_segments < 2:
            raise ValueError(f"need at least 2 segments, got {self.n_segments}")
        if not self.x_max > 0:
            raise ValueError(f"x_max must be > 0, got {self.x_max}")
        if not self.r0 > 0:
            raise ValueError(f"r0 must be > 0, got {self.r0}")

    def z_of(self, x: float) -> float:
        """Height of the segment center at position x."""
        return (self.amplitude * math.sin(self.frequency * x)
                * self.damping_scale * math.exp(-self.damping_rate * x))

    def r_of(self, x: float) -> float:
        """Segment radius at position x."""
        return self.r0 * math.exp(self.growth * x)

    def x_of(self, i: int) -> float:
        """i-th of n evenly spaced positions on [0, x_max]."""
        return self.x_max * i / (self.n_segments - 1)


def example_snake(params: SnakeParams = SnakeParams(),
                  db: MaterialDb | None = None) -> Model:
    """Deterministic snake model: n segment spheres, a hat cone, a hidden
    bounding sphere, and void/outer cells partitioning the rest."""
    if db is None:
        db = default_db()
    n = params.n_segments
    skin = material_from_db(db, SEGMENT_MATERIAL, 1)
    poly = material_from_db(db, HAT_MATERIAL, 2)

    model = Model(title="snake example")
    model.materials += [skin, poly]

    for i in range(n):
        x = params.x_of(i)
        kind = Sphere(Vec3(x, 0.0, params.z_of(x)), params.r_of(x))
        model.surfaces.append(
            make_surface(i + 1, f"seg{i}", kind, color="yellowgreen"))

    head = model.surfaces[-1].kind
    hat_id = n + 1
    hat_base = head.center + Vec3(0.0, 0.0, head.r)
    hat = Trc(hat_base, Vec3(0.0, 0.0, HAT_HEIGHT_FACTOR * head.r),
              head.r, HAT_TOP_FRACTION * head.r)
    model.surfaces.append(make_surface(hat_id, "hat", hat, color="violet"))

    world_id = n + 2
    bounds = None
    for s in model.surfaces:
        b = aabb(s.kind)
        bounds = b if bounds is None else bounds.union(b)
    half_diag = (bounds.max - bounds.min).scaled(0.5).norm()
    world = Sphere(bounds.center(), WORLD_RADIUS_FACTOR * half_diag)
    model.surfaces.append(
        make_surface(world_id, "world", world, color="gray", opacity=0.0))

    for i in range(n):
        model.cells.append(Cell(i + 1, f"seg{i}", SenseRef(i + 1, -1), skin.id))
    model.cells.append(Cell(hat_id, "hat", SenseRef(hat_id, -1), poly.id))
    void_terms = [SenseRef(world_id, -1)]
    void_terms += [SenseRef(sid, +1) for sid in range(1, hat_id + 1)]
    model.cells.append(Cell(world_id, "void", Intersection(tuple(void_terms)), VOID))
    model.cells.append(Cell(world_id + 1, "outer", SenseRef(world_id, +1), OUTER))
    return model
