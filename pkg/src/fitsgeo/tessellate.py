"""Triangle tessellation of surface primitives for the 3D scene.

Bounded kinds produce closed 2-manifold meshes with outward orientation;
planes are rendered as a finite quad. ``resolution`` counts segments along
the latitude / tube direction; the azimuthal (long way around) direction is
sampled at twice that. Every emitted vertex lies on the exact surface up to
floating-point roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ResolutionTooLow
from .geometry import (
    Aabb,
    Box,
    PlaneGeneral,
    PlaneX,
    PlaneY,
    Rcc,
    Rec,
    Rpp,
    Sphere,
    Surface,
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Vec3,
    Wed,
    is_bounded,
    plane_anchor,
)

DEFAULT_PLANE_HALF_EXTENT = 10.0


@dataclass(frozen=True)
class TriMesh:
    """Indexed triangle mesh: vertices (n, 3) float64, triangles (m, 3) int."""

    vertices: np.ndarray
    triangles: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices",
                           np.ascontiguousarray(self.vertices, dtype=np.float64))
        object.__setattr__(self, "triangles",
                           np.ascontiguousarray(self.triangles, dtype=np.int64))

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def n_triangles(self) -> int:
        return self.triangles.shape[0]


def mesh_volume(mesh: TriMesh) -> float:
    """Signed volume by the divergence theorem (positive for outward
    oriented closed meshes)."""
    v = mesh.vertices[mesh.triangles]
    return float(np.einsum("ij,ij->", v[:, 0], np.cross(v[:, 1], v[:, 2])) / 6.0)


def mesh_aabb(mesh: TriMesh) -> Aabb:
    lo = mesh.vertices.min(axis=0)
    hi = mesh.vertices.max(axis=0)
    return Aabb(Vec3(*map(float, lo)), Vec3(*map(float, hi)))


def is_watertight(mesh: TriMesh) -> bool:
    """True when every undirected edge is shared by exactly two triangles
    with opposite directions (closed, consistently oriented)."""
    directed: dict[tuple[int, int], int] = {}
    for a, b, c in mesh.triangles:
        for e in ((a, b), (b, c), (c, a)):
            key = (int(e[0]), int(e[1]))
            directed[key] = directed.get(key, 0) + 1
    for (a, b), count in directed.items():
        if count != 1 or directed.get((b, a), 0) != 1:
            return False
    return True


def degenerate_triangles(mesh: TriMesh) -> int:
    v = mesh.vertices[mesh.triangles]
    areas = 0.5 * np.linalg.norm(
        np.cross(v[:, 1] - v[:, 0], v[:, 2] - v[:, 0]), axis=1)
    return int(np.count_nonzero(areas == 0.0))


def _perp_frame(axis: Vec3) -> tuple[Vec3, Vec3]:
    """Deterministic orthonormal (u, v) with u x v = axis direction."""
    a = axis.unit()
    pick = Vec3(1.0, 0.0, 0.0)
    if abs(a.x) >= abs(a.y) and abs(a.x) >= abs(a.z):
        pick = Vec3(0.0, 1.0, 0.0)
    u = pick.cross(a)
    u = u.unit()
    v = a.cross(u)
    return u, v


def _orient_outward(verts: list, tris: list) -> TriMesh:
    mesh = TriMesh(np.array(verts, dtype=np.float64), np.array(tris, dtype=np.int64))
    if mesh_volume(mesh) < 0.0:
        flipped = mesh.triangles[:, [0, 2, 1]]
        mesh = TriMesh(mesh.vertices, flipped)
    return mesh


def _hexahedron(corners: list) -> TriMesh:
    # corners ordered: 000 100 010 110 001 101 011 111 over (e1, e2, e3)
    quads = [
        (0, 2, 3, 1),  # bottom (-e3)
        (4, 5, 7, 6),  # top (+e3)
        (0, 1, 5, 4),  # -e2 side
        (2, 6, 7, 3),  # +e2 side
        (0, 4, 6, 2),  # -e1 side
        (1, 3, 7, 5),  # +e1 side
    ]
    tris = []
    for a, b, c, d in quads:
        tris.append((a, b, c))
        tris.append((a, c, d))
    return _orient_outward(corners, tris)


def _box_mesh(kind: Box) -> TriMesh:
    b = kind.base
    e1, e2, e3 = kind.e1, kind.e2, kind.e3
    corners = [
        b.as_tuple(), (b + e1).as_tuple(), (b + e2).as_tuple(),
        (b + e1 + e2).as_tuple(), (b + e3).as_tuple(), (b + e1 + e3).as_tuple(),
        (b + e2 + e3).as_tuple(), (b + e1 + e2 + e3).as_tuple(),
    ]
    return _hexahedron(corners)


def _rpp_mesh(kind: Rpp) -> TriMesh:
    corners = [
        (x, y, z)
        for z in (kind.zmin, kind.zmax)
        for y in (kind.ymin, kind.ymax)
        for x in (kind.xmin, kind.xmax)
    ]
    return _hexahedron(corners)


def _wed_mesh(kind: Wed) -> TriMesh:
    v = kind.vertex
    e1, e2, e3 = kind.e1, kind.e2, kind.e3
    pts = [
        v.as_tuple(), (v + e1).as_tuple(), (v + e2).as_tuple(),
        (v + e3).as_tuple(), (v + e1 + e3).as_tuple(), (v + e2 + e3).as_tuple(),
    ]
    tris = [
        (0, 2, 1),            # bottom triangle
        (3, 4, 5),            # top triangle
        (0, 1, 4), (0, 4, 3),  # rectangle on e1
        (0, 3, 5), (0, 5, 2),  # rectangle on e2
        (1, 2, 5), (1, 5, 4),  # diagonal rectangle
    ]
    return _orient_outward(pts, tris)


def _sphere_mesh(kind: Sphere, res: int) -> TriMesh:
    n_lat, n_lon = res, 2 * res
    c, r = kind.center, kind.r
    verts = [(c.x, c.y, c.z - r)]
    thetas = np.linspace(0.0, math.pi, n_lat + 1)[1:-1]
    phis = np.linspace(0.0, 2.0 * math.pi, n_lon, endpoint=False)
    for th in thetas:
        st, ct = math.sin(th), math.cos(th)
        for ph in phis:
            verts.append((c.x + r * st * math.cos(ph),
                          c.y + r * st * math.sin(ph),
                          c.z - r * ct))
    verts.append((c.x, c.y, c.z + r))
    n_rings = len(thetas)
    top = len(verts) - 1

    def ring(i: int, j: int) -> int:
        return 1 + i * n_lon + (j % n_lon)

    tris = []
    for j in range(n_lon):
        tris.append((0, ring(0, j + 1), ring(0, j)))
    for i in range(n_rings - 1):
        for j in range(n_lon):
            a, b = ring(i, j), ring(i, j + 1)
            c2, d = ring(i + 1, j + 1), ring(i + 1, j)
            tris.append((a, b, c2))
            tris.append((a, c2, d))
    for j in range(n_lon):
        tris.append((top, ring(n_rings - 1, j), ring(n_rings - 1, j + 1)))
    return _orient_outward(verts, tris)


def _ring_points(center: Vec3, u: Vec3, v: Vec3, ru: float, rv: float, n: int):
    pts = []
    for j in range(n):
        ang = 2.0 * math.pi * j / n
        cu, sv = ru * math.cos(ang), rv * math.sin(ang)
        pts.append((center.x + cu * u.x + sv * v.x,
                    center.y + cu * u.y + sv * v.y,
                    center.z + cu * u.z + sv * v.z))
    return pts


def _tube_mesh(base: Vec3, h: Vec3, u: Vec3, v: Vec3,
               r_bot_u: float, r_bot_v: float, r_top_u: float, r_top_v: float,
               res: int) -> TriMesh:
    """Cylinder / frustum around axis h; either end may collapse to an apex."""
    n = 2 * res
    top_c = base + h
    verts: list = []
    tris: list = []
    bottom_apex = r_bot_u == 0.0
    top_apex = r_top_u == 0.0

    if not bottom_apex:
        bot = _ring_points(base, u, v, r_bot_u, r_bot_v, n)
        bot_start = len(verts)
        verts.extend(bot)
    if not top_apex:
        top = _ring_points(top_c, u, v, r_top_u, r_top_v, n)
        top_start = len(verts)
        verts.extend(top)

    if bottom_apex:
        apex = len(verts)
        verts.append(base.as_tuple())
        for j in range(n):
            tris.append((apex, top_start + (j + 1) % n, top_start + j))
    elif top_apex:
        apex = len(verts)
        verts.append(top_c.as_tuple())
        for j in range(n):
            tris.append((apex, bot_start + j, bot_start + (j + 1) % n))
    else:
        for j in range(n):
            a, b = bot_start + j, bot_start + (j + 1) % n
            c2, d = top_start + (j + 1) % n, top_start + j
            tris.append((a, b, c2))
            tris.append((a, c2, d))

    if not bottom_apex:
        cb = len(verts)
        verts.append(base.as_tuple())
        for j in range(n):
            tris.append((cb, bot_start + (j + 1) % n, bot_start + j))
    if not top_apex:
        ct = len(verts)
        verts.append(top_c.as_tuple())
        for j in range(n):
            tris.append((ct, top_start + j, top_start + (j + 1) % n))
    return _orient_outward(verts, tris)


def _torus_mesh(kind, res: int) -> TriMesh:
    n_major, n_minor = 2 * res, res
    if isinstance(kind, TorusX):
        e_r1, e_r2, e_ax = Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(1, 0, 0)
    elif isinstance(kind, TorusY):
        e_r1, e_r2, e_ax = Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 1, 0)
    else:
        e_r1, e_r2, e_ax = Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)
    c = kind.center
    verts = []
    for i in range(n_major):
        uang = 2.0 * math.pi * i / n_major
        cu, su = math.cos(uang), math.sin(uang)
        for j in range(n_minor):
            vang = 2.0 * math.pi * j / n_minor
            s = kind.a + kind.c * math.cos(vang)
            zz = kind.b * math.sin(vang)
            verts.append((
                c.x + s * (cu * e_r1.x + su * e_r2.x) + zz * e_ax.x,
                c.y + s * (cu * e_r1.y + su * e_r2.y) + zz * e_ax.y,
                c.z + s * (cu * e_r1.z + su * e_r2.z) + zz * e_ax.z,
            ))

    def vid(i: int, j: int) -> int:
        return (i % n_major) * n_minor + (j % n_minor)

    tris = []
    for i in range(n_major):
        for j in range(n_minor):
            p, q = vid(i, j), vid(i + 1, j)
            r2, s2 = vid(i + 1, j + 1), vid(i, j + 1)
            tris.append((p, q, r2))
            tris.append((p, r2, s2))
    return _orient_outward(verts, tris)


def _plane_mesh(kind, half_extent: float) -> TriMesh:
    center = plane_anchor(kind)
    if isinstance(kind, PlaneGeneral):
        normal = Vec3(kind.a, kind.b, kind.c)
    elif isinstance(kind, PlaneX):
        normal = Vec3(1.0, 0.0, 0.0)
    elif isinstance(kind, PlaneY):
        normal = Vec3(0.0, 1.0, 0.0)
    else:
        normal = Vec3(0.0, 0.0, 1.0)
    u, v = _perp_frame(normal)
    pts = []
    for su, sv in ((-1, -1), (1, -1), (1, 1), (-1, 1)):
        p = center + u.scaled(su * half_extent) + v.scaled(sv * half_extent)
        pts.append(p.as_tuple())
    tris = [(0, 1, 2), (0, 2, 3)]
    return TriMesh(np.array(pts), np.array(tris))


def tessellate(kind_or_surface, resolution: int,
               plane_half_extent: float = DEFAULT_PLANE_HALF_EXTENT) -> TriMesh:
    """Tessellate a surface into triangles.

    Bounded kinds yield watertight meshes; planes yield a quad of the given
    half extent centered on the point nearest the origin.
    """
    kind = kind_or_surface.kind if isinstance(kind_or_surface, Surface) else kind_or_surface
    if resolution < 3:
        raise ResolutionTooLow(f"resolution must be >= 3, got {resolution}")
    if isinstance(kind, Sphere):
        return _sphere_mesh(kind, resolution)
    if isinstance(kind, Box):
        return _box_mesh(kind)
    if isinstance(kind, Rpp):
        return _rpp_mesh(kind)
    if isinstance(kind, Wed):
        return _wed_mesh(kind)
    if isinstance(kind, Rcc):
        u, v = _perp_frame(kind.h)
        return _tube_mesh(kind.base, kind.h, u, v, kind.r, kind.r, kind.r, kind.r,
                          resolution)
    if isinstance(kind, Trc):
        u, v = _perp_frame(kind.h)
        return _tube_mesh(kind.base, kind.h, u, v,
                          kind.r_base, kind.r_base, kind.r_top, kind.r_top,
                          resolution)
    if isinstance(kind, Rec):
        u1, r1 = kind.v1.unit(), kind.v1.norm()
        u2, r2 = kind.v2.unit(), kind.v2.norm()
        return _tube_mesh(kind.base, kind.h, u1, u2, r1, r2, r1, r2, resolution)
    if isinstance(kind, (TorusX, TorusY, TorusZ)):
        return _torus_mesh(kind, resolution)
    if not is_bounded(kind):
        return _plane_mesh(kind, plane_half_extent)
    raise TypeError(f"unsupported kind {type(kind).__name__}")
