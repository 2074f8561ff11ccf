"""Shared helpers: seeded random model generation and semantic equality."""

from __future__ import annotations

import math
import random

from fitsgeo import (
    OUTER,
    VOID,
    Box,
    Cell,
    Complement,
    Intersection,
    Model,
    PlaneGeneral,
    PlaneX,
    PlaneY,
    PlaneZ,
    Rcc,
    Rec,
    Rpp,
    SenseRef,
    Sphere,
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Union,
    Vec3,
    Wed,
    define_material,
    make_surface,
    region_normalize,
    region_to_text,
)
from fitsgeo.colors import COLOR_TABLE

_SPECIES = ["H", "C", "N", "O", "Al", "Fe", "Pb", 1001, 1002, 92235, 26056]
_WORDS = ["slab", "pipe", "core", "clad", "cap", "ring", "duct", "frame",
          "lid", "port"]


def rand_unit(rng: random.Random) -> Vec3:
    while True:
        v = Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1))
        n = v.norm()
        if 0.1 < n < 1.0:
            return v.scaled(1.0 / n)


def rand_point(rng: random.Random, span: float = 4.0) -> Vec3:
    return Vec3(rng.uniform(-span, span), rng.uniform(-span, span),
                rng.uniform(-span, span))


def rand_frame(rng: random.Random) -> tuple[Vec3, Vec3, Vec3]:
    """Three exactly-orthogonal vectors of random lengths."""
    u1 = rand_unit(rng)
    helper = rand_unit(rng)
    while abs(helper.dot(u1)) > 0.9:
        helper = rand_unit(rng)
    u2 = u1.cross(helper).unit()
    u3 = u1.cross(u2)
    return (u1.scaled(rng.uniform(0.2, 2.5)), u2.scaled(rng.uniform(0.2, 2.5)),
            u3.scaled(rng.uniform(0.2, 2.5)))


def random_kind(rng: random.Random, allow_planes: bool = False):
    kinds = ["sph", "box", "rpp", "rcc", "trc", "torus", "rec", "wed"]
    if allow_planes:
        kinds += ["p", "px", "py", "pz"]
    choice = rng.choice(kinds)
    if choice == "sph":
        return Sphere(rand_point(rng), rng.uniform(0.1, 2.0))
    if choice == "box":
        e1, e2, e3 = rand_frame(rng)
        return Box(rand_point(rng), e1, e2, e3)
    if choice == "rpp":
        lo = rand_point(rng)
        return Rpp(lo.x, lo.x + rng.uniform(0.2, 3), lo.y, lo.y + rng.uniform(0.2, 3),
                   lo.z, lo.z + rng.uniform(0.2, 3))
    if choice == "rcc":
        return Rcc(rand_point(rng), rand_unit(rng).scaled(rng.uniform(0.3, 3)),
                   rng.uniform(0.1, 1.5))
    if choice == "trc":
        r_base = rng.uniform(0.1, 1.5)
        r_top = rng.uniform(0.1, 1.5)
        which = rng.random()
        if which < 0.2:
            r_top = 0.0  # cone with the apex at the top
        elif which < 0.4:
            r_base = 0.0  # cone with the apex at the base
        return Trc(rand_point(rng), rand_unit(rng).scaled(rng.uniform(0.3, 3)),
                   r_base, r_top)
    if choice == "torus":
        cls = rng.choice([TorusX, TorusY, TorusZ])
        c = rng.uniform(0.1, 1.0)
        return cls(rand_point(rng), c + rng.uniform(0.2, 2.5), rng.uniform(0.1, 1.2), c)
    if choice == "rec":
        e1, e2, e3 = rand_frame(rng)
        v1, v2 = (e1, e2) if e1.norm() >= e2.norm() else (e2, e1)
        return Rec(rand_point(rng), e3, v1, v2)
    if choice == "wed":
        e1, e2, e3 = rand_frame(rng)
        return Wed(rand_point(rng), e1, e2, e3)
    if choice == "p":
        n = rand_unit(rng)
        return PlaneGeneral(n.x, n.y, n.z, rng.uniform(-3, 3))
    if choice == "px":
        return PlaneX(rng.uniform(-3, 3))
    if choice == "py":
        return PlaneY(rng.uniform(-3, 3))
    return PlaneZ(rng.uniform(-3, 3))


def rand_name(rng: random.Random) -> str:
    words = rng.sample(_WORDS, rng.randint(1, 2))
    if rng.random() < 0.5:
        words.append(str(rng.randint(0, 99)))
    return " ".join(words)


def random_region(rng: random.Random, ids: list[int], depth: int = 3):
    if depth <= 0 or rng.random() < 0.4:
        return SenseRef(rng.choice(ids), rng.choice([-1, 1]))
    op = rng.random()
    if op < 0.15:
        return Complement(random_region(rng, ids, depth - 1))
    terms = tuple(random_region(rng, ids, depth - 1)
                  for _ in range(rng.randint(2, 4)))
    return Intersection(terms) if op < 0.6 else Union(terms)


def random_material(rng: random.Random, mid: int):
    n_comp = rng.randint(1, 4)
    comp = [(rng.choice(_SPECIES), rng.uniform(0.01, 5.0)) for _ in range(n_comp)]
    return define_material(mid, rand_name(rng), rng.uniform(0.001, 20.0), comp,
                           rng.choice(["atom", "mass"]), rng.random() < 0.2,
                           rng.choice(sorted(COLOR_TABLE)))


def random_model(rng: random.Random, allow_planes: bool = True) -> Model:
    """Structurally valid random model with exactly one outer cell."""
    model = Model(title="generated")
    n_surf = rng.randint(2, 8)
    for i in range(n_surf):
        sid = i + 1
        model.surfaces.append(make_surface(
            sid, rand_name(rng), random_kind(rng, allow_planes and rng.random() < 0.2),
            rng.choice(sorted(COLOR_TABLE)), round(rng.uniform(0.1, 1.0), 2)))
    n_mat = rng.randint(1, 3)
    for i in range(n_mat):
        model.materials.append(random_material(rng, i + 1))
    ids = [s.id for s in model.surfaces]
    n_cells = rng.randint(1, 4)
    for i in range(n_cells):
        material = rng.choice([VOID] + [m.id for m in model.materials])
        density = rng.uniform(0.1, 5.0) if (
            material != VOID and rng.random() < 0.4) else None
        model.cells.append(Cell(i + 1, rand_name(rng),
                                random_region(rng, ids), material, density))
    model.cells.append(Cell(n_cells + 1, "outer",
                            SenseRef(rng.choice(ids), +1), OUTER))
    return model


# ---------------------------------------------------------------------------
# semantic equality (the round-trip contract)


def assert_models_equal(a: Model, b: Model) -> None:
    assert len(a.surfaces) == len(b.surfaces), "surface count differs"
    for sa, sb in zip(a.surfaces, b.surfaces):
        assert sa.id == sb.id
        assert sa.name == sb.name
        assert type(sa.kind) is type(sb.kind), f"surface {sa.id} kind differs"
        assert sa.kind == sb.kind, f"surface {sa.id} parameters differ"

    assert len(a.materials) == len(b.materials), "material count differs"
    for ma, mb in zip(a.materials, b.materials):
        assert ma.id == mb.id
        assert ma.name == mb.name
        assert ma.ratio_mode == mb.ratio_mode
        assert ma.gas == mb.gas
        assert math.isclose(ma.density, mb.density, rel_tol=1e-12)
        assert len(ma.composition) == len(mb.composition)
        for (spa, ra), (spb, rb) in zip(ma.composition, mb.composition):
            assert str(spa) == str(spb)
            assert math.isclose(ra, rb, rel_tol=1e-12)

    assert len(a.cells) == len(b.cells), "cell count differs"
    for ca, cb in zip(a.cells, b.cells):
        assert ca.id == cb.id
        assert ca.name == cb.name
        assert ca.material == cb.material
        da, db_ = a.effective_density(ca), b.effective_density(cb)
        if da is None or db_ is None:
            assert da == db_
        else:
            assert math.isclose(da, db_, rel_tol=1e-12)
        assert region_to_text(region_normalize(ca.region)) == \
            region_to_text(region_normalize(cb.region)), f"cell {ca.id} region differs"
