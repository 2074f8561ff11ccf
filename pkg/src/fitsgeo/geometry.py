"""Surface primitives and their numeric semantics.

Twelve PHITS/MCNP-style surface kinds (planes plus bounded macrobodies) with
eager validation, signed sense classification, analytic volume / area /
centroid, and tight axis-aligned bounding boxes. The sign convention is the
transport-code one: the negative side of a macrobody is its bounded interior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import singledispatch

from .colors import DEFAULT_COLOR, color_entry
from .errors import (
    DegenerateGeometry,
    InvalidId,
    InvalidName,
    InvalidOpacity,
    UnboundedSurface,
)

# Edges/axes must be orthogonal to within this angle (radians).
ORTHO_TOL = 1e-9


@dataclass(frozen=True)
class Vec3:
    """Point or direction in cm."""

    x: float
    y: float
    z: float

    def __add__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def scaled(self, k: float) -> "Vec3":
        return Vec3(self.x * k, self.y * k, self.z * k)

    def dot(self, o: "Vec3") -> float:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: "Vec3") -> "Vec3":
        return Vec3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def unit(self) -> "Vec3":
        n = self.norm()
        if n == 0.0:
            raise DegenerateGeometry("cannot normalize a zero vector")
        return self.scaled(1.0 / n)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


def _finite(v, what: str) -> None:
    if isinstance(v, Vec3):
        if not v.is_finite():
            raise DegenerateGeometry(f"{what} must be finite, got {v}")
    elif not math.isfinite(v):
        raise DegenerateGeometry(f"{what} must be finite, got {v}")


def _orthogonal(u: Vec3, v: Vec3, what: str) -> None:
    # |cos(angle from 90 deg)| = |u.v| / (|u||v|) <= sin(tol) ~ tol
    if abs(u.dot(v)) > ORTHO_TOL * u.norm() * v.norm():
        raise DegenerateGeometry(f"{what} must be orthogonal (tolerance {ORTHO_TOL} rad)")


def _positive(v: float, what: str) -> None:
    _finite(v, what)
    if v <= 0.0:
        raise DegenerateGeometry(f"{what} must be > 0, got {v}")


# ---------------------------------------------------------------------------
# Surface kinds


@dataclass(frozen=True)
class PlaneGeneral:
    """Locus a*x + b*y + c*z = d; negative side is a*x + b*y + c*z - d < 0."""

    a: float
    b: float
    c: float
    d: float
    mnemonic = "P"

    def __post_init__(self):
        for v, n in ((self.a, "a"), (self.b, "b"), (self.c, "c"), (self.d, "d")):
            _finite(v, f"plane coefficient {n}")
        if self.a == 0.0 and self.b == 0.0 and self.c == 0.0:
            raise DegenerateGeometry("plane normal (a, b, c) must be nonzero")


@dataclass(frozen=True)
class PlaneX:
    d: float
    mnemonic = "PX"

    def __post_init__(self):
        _finite(self.d, "plane offset")


@dataclass(frozen=True)
class PlaneY:
    d: float
    mnemonic = "PY"

    def __post_init__(self):
        _finite(self.d, "plane offset")


@dataclass(frozen=True)
class PlaneZ:
    d: float
    mnemonic = "PZ"

    def __post_init__(self):
        _finite(self.d, "plane offset")


@dataclass(frozen=True)
class Sphere:
    center: Vec3
    r: float
    mnemonic = "SPH"

    def __post_init__(self):
        _finite(self.center, "sphere center")
        _positive(self.r, "sphere radius")


@dataclass(frozen=True)
class Box:
    """Parallelepiped spanned by three mutually orthogonal edges from base."""

    base: Vec3
    e1: Vec3
    e2: Vec3
    e3: Vec3
    mnemonic = "BOX"

    def __post_init__(self):
        _finite(self.base, "box base")
        for e, n in ((self.e1, "e1"), (self.e2, "e2"), (self.e3, "e3")):
            _finite(e, f"box edge {n}")
            if e.norm() == 0.0:
                raise DegenerateGeometry(f"box edge {n} must be nonzero")
        _orthogonal(self.e1, self.e2, "box edges e1, e2")
        _orthogonal(self.e2, self.e3, "box edges e2, e3")
        _orthogonal(self.e1, self.e3, "box edges e1, e3")


@dataclass(frozen=True)
class Rpp:
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    zmin: float
    zmax: float
    mnemonic = "RPP"

    def __post_init__(self):
        for lo, hi, ax in (
            (self.xmin, self.xmax, "x"),
            (self.ymin, self.ymax, "y"),
            (self.zmin, self.zmax, "z"),
        ):
            _finite(lo, f"{ax} bound")
            _finite(hi, f"{ax} bound")
            if not lo < hi:
                raise DegenerateGeometry(f"rpp needs {ax}min < {ax}max, got [{lo}, {hi}]")


@dataclass(frozen=True)
class Rcc:
    """Circular cylinder: base point, axis vector (length = height), radius."""

    base: Vec3
    h: Vec3
    r: float
    mnemonic = "RCC"

    def __post_init__(self):
        _finite(self.base, "cylinder base")
        _finite(self.h, "cylinder axis")
        if self.h.norm() == 0.0:
            raise DegenerateGeometry("cylinder axis must be nonzero")
        _positive(self.r, "cylinder radius")


@dataclass(frozen=True)
class Trc:
    """Truncated cone: radius r_base at base, r_top at base + h."""

    base: Vec3
    h: Vec3
    r_base: float
    r_top: float
    mnemonic = "TRC"

    def __post_init__(self):
        _finite(self.base, "cone base")
        _finite(self.h, "cone axis")
        if self.h.norm() == 0.0:
            raise DegenerateGeometry("cone axis must be nonzero")
        for r, n in ((self.r_base, "r_base"), (self.r_top, "r_top")):
            _finite(r, n)
            if r < 0.0:
                raise DegenerateGeometry(f"cone {n} must be >= 0, got {r}")
        if self.r_base + self.r_top <= 0.0:
            raise DegenerateGeometry("cone needs r_base + r_top > 0")


class _TorusBase:
    """Torus around a coordinate axis.

    ``a`` is the major radius, ``b`` the tube semi-axis along the torus axis,
    ``c`` the tube semi-axis in the radial direction. ``a > c`` keeps the
    surface from self-intersecting.
    """

    def __post_init__(self):
        _finite(self.center, "torus center")
        _positive(self.a, "torus major radius")
        _positive(self.b, "torus axial semi-axis")
        _positive(self.c, "torus radial semi-axis")
        if not self.a > self.c:
            raise DegenerateGeometry(
                f"torus needs a > c, got a={self.a}, c={self.c}"
            )


@dataclass(frozen=True)
class TorusX(_TorusBase):
    center: Vec3
    a: float
    b: float
    c: float
    mnemonic = "TX"


@dataclass(frozen=True)
class TorusY(_TorusBase):
    center: Vec3
    a: float
    b: float
    c: float
    mnemonic = "TY"


@dataclass(frozen=True)
class TorusZ(_TorusBase):
    center: Vec3
    a: float
    b: float
    c: float
    mnemonic = "TZ"


@dataclass(frozen=True)
class Rec:
    """Elliptical cylinder: axis h, major semi-axis v1, minor semi-axis v2."""

    base: Vec3
    h: Vec3
    v1: Vec3
    v2: Vec3
    mnemonic = "REC"

    def __post_init__(self):
        _finite(self.base, "cylinder base")
        for v, n in ((self.h, "h"), (self.v1, "v1"), (self.v2, "v2")):
            _finite(v, f"cylinder vector {n}")
        if self.h.norm() == 0.0:
            raise DegenerateGeometry("cylinder axis must be nonzero")
        if self.v2.norm() == 0.0:
            raise DegenerateGeometry("semi-axis v2 must be nonzero")
        if self.v1.norm() < self.v2.norm():
            raise DegenerateGeometry("|v1| must be >= |v2|")
        _orthogonal(self.v1, self.v2, "semi-axes v1, v2")
        _orthogonal(self.v1, self.h, "v1 and axis")
        _orthogonal(self.v2, self.h, "v2 and axis")


@dataclass(frozen=True)
class Wed:
    """Right wedge: half of the (e1, e2, e3) parallelepiped cut on the
    e1-e2 diagonal."""

    vertex: Vec3
    e1: Vec3
    e2: Vec3
    e3: Vec3
    mnemonic = "WED"

    def __post_init__(self):
        _finite(self.vertex, "wedge vertex")
        for e, n in ((self.e1, "e1"), (self.e2, "e2"), (self.e3, "e3")):
            _finite(e, f"wedge edge {n}")
            if e.norm() == 0.0:
                raise DegenerateGeometry(f"wedge edge {n} must be nonzero")
        _orthogonal(self.e1, self.e2, "wedge edges e1, e2")
        _orthogonal(self.e2, self.e3, "wedge edges e2, e3")
        _orthogonal(self.e1, self.e3, "wedge edges e1, e3")


SurfaceKind = (
    PlaneGeneral | PlaneX | PlaneY | PlaneZ | Sphere | Box | Rpp | Rcc | Trc
    | TorusX | TorusY | TorusZ | Rec | Wed
)

PLANE_KINDS = (PlaneGeneral, PlaneX, PlaneY, PlaneZ)
TORUS_KINDS = (TorusX, TorusY, TorusZ)


@dataclass(frozen=True)
class Surface:
    """Identified, colored surface primitive."""

    id: int
    name: str
    kind: SurfaceKind
    color: str = DEFAULT_COLOR
    opacity: float = 1.0

    def __neg__(self):
        from .cells import SenseRef

        return SenseRef(self.id, -1)

    def __pos__(self):
        from .cells import SenseRef

        return SenseRef(self.id, +1)


def make_surface(id: int, name: str, kind: SurfaceKind, color: str = DEFAULT_COLOR,
                 opacity: float = 1.0) -> Surface:
    """Validate and build a Surface. Kind invariants were already enforced
    by the kind constructor; this checks id, name, color and opacity."""
    if not isinstance(id, int) or isinstance(id, bool) or id < 1:
        raise InvalidId(f"surface id must be a positive integer, got {id!r}")
    if not isinstance(name, str) or not name.strip() or "\n" in name or "$" in name:
        raise InvalidName(f"bad surface name {name!r}")
    color_entry(color)
    if not isinstance(opacity, (int, float)) or not 0.0 <= float(opacity) <= 1.0:
        raise InvalidOpacity(f"opacity must be in [0, 1], got {opacity!r}")
    return Surface(id, name, kind, color, float(opacity))


def is_bounded(kind: SurfaceKind) -> bool:
    return not isinstance(kind, PLANE_KINDS)


# ---------------------------------------------------------------------------
# implicit function and sense


def _local_frame(e1: Vec3, e2: Vec3, e3: Vec3):
    u1, u2, u3 = e1.unit(), e2.unit(), e3.unit()
    return (u1, e1.norm()), (u2, e2.norm()), (u3, e3.norm())


def _torus_locals(kind, p: Vec3) -> tuple[float, float]:
    """(radial distance from axis, axial offset) in the torus frame."""
    q = p - kind.center
    if isinstance(kind, TorusX):
        return math.sqrt(q.y * q.y + q.z * q.z), q.x
    if isinstance(kind, TorusY):
        return math.sqrt(q.x * q.x + q.z * q.z), q.y
    return math.sqrt(q.x * q.x + q.y * q.y), q.z


@singledispatch
def implicit_value(kind: SurfaceKind, p: Vec3) -> float:
    """Signed implicit function: negative inside, positive outside.

    Distance-like for planes and slab-bounded bodies; the torus and the
    elliptical cross-sections use the dimensionless quadratic form.
    """
    raise TypeError(f"unsupported kind {type(kind).__name__}")


@implicit_value.register
def _(kind: PlaneGeneral, p: Vec3) -> float:
    n = math.sqrt(kind.a * kind.a + kind.b * kind.b + kind.c * kind.c)
    return (kind.a * p.x + kind.b * p.y + kind.c * p.z - kind.d) / n


@implicit_value.register
def _(kind: PlaneX, p: Vec3) -> float:
    return p.x - kind.d


@implicit_value.register
def _(kind: PlaneY, p: Vec3) -> float:
    return p.y - kind.d


@implicit_value.register
def _(kind: PlaneZ, p: Vec3) -> float:
    return p.z - kind.d


@implicit_value.register
def _(kind: Sphere, p: Vec3) -> float:
    return (p - kind.center).norm() - kind.r


@implicit_value.register
def _(kind: Box, p: Vec3) -> float:
    w = p - kind.base
    f = -math.inf
    for e in (kind.e1, kind.e2, kind.e3):
        length = e.norm()
        u = w.dot(e) / length
        f = max(f, -u, u - length)
    return f


@implicit_value.register
def _(kind: Rpp, p: Vec3) -> float:
    return max(
        kind.xmin - p.x, p.x - kind.xmax,
        kind.ymin - p.y, p.y - kind.ymax,
        kind.zmin - p.z, p.z - kind.zmax,
    )


@implicit_value.register
def _(kind: Rcc, p: Vec3) -> float:
    height = kind.h.norm()
    axis = kind.h.scaled(1.0 / height)
    w = p - kind.base
    z = w.dot(axis)
    rho = (w - axis.scaled(z)).norm()
    return max(rho - kind.r, -z, z - height)


@implicit_value.register
def _(kind: Trc, p: Vec3) -> float:
    height = kind.h.norm()
    axis = kind.h.scaled(1.0 / height)
    w = p - kind.base
    z = w.dot(axis)
    rho = (w - axis.scaled(z)).norm()
    r_at = kind.r_base + (kind.r_top - kind.r_base) * (z / height)
    return max(rho - r_at, -z, z - height)


def _torus_implicit(kind, p: Vec3) -> float:
    s, z = _torus_locals(kind, p)
    t1 = (s - kind.a) / kind.c
    t2 = z / kind.b
    return t1 * t1 + t2 * t2 - 1.0


implicit_value.register(TorusX, _torus_implicit)
implicit_value.register(TorusY, _torus_implicit)
implicit_value.register(TorusZ, _torus_implicit)


@implicit_value.register
def _(kind: Rec, p: Vec3) -> float:
    height = kind.h.norm()
    axis = kind.h.scaled(1.0 / height)
    r1, r2 = kind.v1.norm(), kind.v2.norm()
    w = p - kind.base
    z = w.dot(axis)
    u = w.dot(kind.v1) / r1
    v = w.dot(kind.v2) / r2
    side = (u / r1) * (u / r1) + (v / r2) * (v / r2) - 1.0
    return max(side, -z, z - height)


@implicit_value.register
def _(kind: Wed, p: Vec3) -> float:
    (u1, l1), (u2, l2), (u3, l3) = _local_frame(kind.e1, kind.e2, kind.e3)
    w = p - kind.vertex
    u, v, t = w.dot(u1), w.dot(u2), w.dot(u3)
    # normalize the diagonal plane u/l1 + v/l2 = 1 to a signed distance
    k = 1.0 / math.sqrt(1.0 / (l1 * l1) + 1.0 / (l2 * l2))
    return max(-u, -v, (u / l1 + v / l2 - 1.0) * k, -t, t - l3)


@singledispatch
def characteristic_scale(kind: SurfaceKind) -> float:
    """Largest characteristic length; sets the on-surface tolerance band."""
    raise TypeError(f"unsupported kind {type(kind).__name__}")


@characteristic_scale.register
def _(kind: PlaneGeneral) -> float:
    n = math.sqrt(kind.a * kind.a + kind.b * kind.b + kind.c * kind.c)
    return max(1.0, abs(kind.d) / n)


@characteristic_scale.register(PlaneX)
@characteristic_scale.register(PlaneY)
@characteristic_scale.register(PlaneZ)
def _(kind) -> float:
    return max(1.0, abs(kind.d))


@characteristic_scale.register
def _(kind: Sphere) -> float:
    return kind.r


@characteristic_scale.register
def _(kind: Box) -> float:
    return max(kind.e1.norm(), kind.e2.norm(), kind.e3.norm())


@characteristic_scale.register
def _(kind: Rpp) -> float:
    return max(kind.xmax - kind.xmin, kind.ymax - kind.ymin, kind.zmax - kind.zmin)


@characteristic_scale.register
def _(kind: Rcc) -> float:
    return max(kind.r, kind.h.norm())


@characteristic_scale.register
def _(kind: Trc) -> float:
    return max(kind.r_base, kind.r_top, kind.h.norm())


@characteristic_scale.register(TorusX)
@characteristic_scale.register(TorusY)
@characteristic_scale.register(TorusZ)
def _(kind) -> float:
    return max(kind.a + kind.c, kind.b)


@characteristic_scale.register
def _(kind: Rec) -> float:
    return max(kind.v1.norm(), kind.h.norm())


@characteristic_scale.register
def _(kind: Wed) -> float:
    return max(kind.e1.norm(), kind.e2.norm(), kind.e3.norm())


def sense(s: Surface, p: Vec3, tol: float = 0.0) -> int:
    """Classify a point: -1 interior/negative side, +1 exterior, 0 on-surface.

    A point is "on surface" when |implicit(p)| <= tol * characteristic scale.
    """
    if tol < 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tol}")
    v = implicit_value(s.kind, p)
    if abs(v) <= tol * characteristic_scale(s.kind):
        return 0
    return -1 if v < 0.0 else +1


# ---------------------------------------------------------------------------
# analytic properties


def _require_bounded(kind: SurfaceKind, op: str) -> None:
    if not is_bounded(kind):
        raise UnboundedSurface(f"{op} is undefined for {type(kind).__name__}")


def _triple(e1: Vec3, e2: Vec3, e3: Vec3) -> float:
    return abs(e1.dot(e2.cross(e3)))


def analytic_volume(kind_or_surface) -> float:
    """Exact interior volume in cm^3 for bounded kinds."""
    kind = kind_or_surface.kind if isinstance(kind_or_surface, Surface) else kind_or_surface
    _require_bounded(kind, "volume")
    if isinstance(kind, Sphere):
        return 4.0 / 3.0 * math.pi * kind.r ** 3
    if isinstance(kind, Box):
        return _triple(kind.e1, kind.e2, kind.e3)
    if isinstance(kind, Rpp):
        return ((kind.xmax - kind.xmin) * (kind.ymax - kind.ymin)
                * (kind.zmax - kind.zmin))
    if isinstance(kind, Rcc):
        return math.pi * kind.r ** 2 * kind.h.norm()
    if isinstance(kind, Trc):
        rb, rt = kind.r_base, kind.r_top
        return math.pi * kind.h.norm() / 3.0 * (rb * rb + rb * rt + rt * rt)
    if isinstance(kind, TORUS_KINDS):
        return 2.0 * math.pi ** 2 * kind.a * kind.b * kind.c
    if isinstance(kind, Rec):
        return math.pi * kind.v1.norm() * kind.v2.norm() * kind.h.norm()
    if isinstance(kind, Wed):
        return 0.5 * _triple(kind.e1, kind.e2, kind.e3)
    raise TypeError(f"unsupported kind {type(kind).__name__}")


def ellipse_perimeter(a: float, b: float) -> float:
    """Ramanujan's second approximation; relative error < 1e-6 for aspect
    ratios up to ~10."""
    h = ((a - b) / (a + b)) ** 2
    return math.pi * (a + b) * (1.0 + 3.0 * h / (10.0 + math.sqrt(4.0 - 3.0 * h)))


def analytic_area(kind_or_surface) -> float:
    """Total boundary area in cm^2; elliptical perimeters are approximate."""
    kind = kind_or_surface.kind if isinstance(kind_or_surface, Surface) else kind_or_surface
    _require_bounded(kind, "area")
    if isinstance(kind, Sphere):
        return 4.0 * math.pi * kind.r ** 2
    if isinstance(kind, Box):
        return 2.0 * (kind.e1.cross(kind.e2).norm()
                      + kind.e2.cross(kind.e3).norm()
                      + kind.e3.cross(kind.e1).norm())
    if isinstance(kind, Rpp):
        dx = kind.xmax - kind.xmin
        dy = kind.ymax - kind.ymin
        dz = kind.zmax - kind.zmin
        return 2.0 * (dx * dy + dy * dz + dz * dx)
    if isinstance(kind, Rcc):
        return 2.0 * math.pi * kind.r * kind.h.norm() + 2.0 * math.pi * kind.r ** 2
    if isinstance(kind, Trc):
        rb, rt = kind.r_base, kind.r_top
        slant = math.hypot(kind.h.norm(), rb - rt)
        return math.pi * slant * (rb + rt) + math.pi * (rb * rb + rt * rt)
    if isinstance(kind, TORUS_KINDS):
        if kind.b == kind.c:
            return 4.0 * math.pi ** 2 * kind.a * kind.b
        return 2.0 * math.pi * kind.a * ellipse_perimeter(kind.b, kind.c)
    if isinstance(kind, Rec):
        r1, r2 = kind.v1.norm(), kind.v2.norm()
        return ellipse_perimeter(r1, r2) * kind.h.norm() + 2.0 * math.pi * r1 * r2
    if isinstance(kind, Wed):
        l1, l2, l3 = kind.e1.norm(), kind.e2.norm(), kind.e3.norm()
        return (kind.e1.cross(kind.e2).norm()
                + (l1 + l2 + math.hypot(l1, l2)) * l3)
    raise TypeError(f"unsupported kind {type(kind).__name__}")


def centroid(kind_or_surface) -> Vec3:
    """Volume centroid of a bounded kind."""
    kind = kind_or_surface.kind if isinstance(kind_or_surface, Surface) else kind_or_surface
    _require_bounded(kind, "centroid")
    if isinstance(kind, Sphere):
        return kind.center
    if isinstance(kind, TORUS_KINDS):
        return kind.center
    if isinstance(kind, Box):
        return kind.base + (kind.e1 + kind.e2 + kind.e3).scaled(0.5)
    if isinstance(kind, Rpp):
        return Vec3(0.5 * (kind.xmin + kind.xmax),
                    0.5 * (kind.ymin + kind.ymax),
                    0.5 * (kind.zmin + kind.zmax))
    if isinstance(kind, (Rcc, Rec)):
        return kind.base + kind.h.scaled(0.5)
    if isinstance(kind, Trc):
        rb, rt = kind.r_base, kind.r_top
        frac = (rb * rb + 2.0 * rb * rt + 3.0 * rt * rt) / (
            4.0 * (rb * rb + rb * rt + rt * rt))
        return kind.base + kind.h.scaled(frac)
    if isinstance(kind, Wed):
        return kind.vertex + (kind.e1 + kind.e2).scaled(1.0 / 3.0) + kind.e3.scaled(0.5)
    raise TypeError(f"unsupported kind {type(kind).__name__}")


@dataclass(frozen=True)
class Aabb:
    """Axis-aligned bounding box, min <= max componentwise."""

    min: Vec3
    max: Vec3

    def __post_init__(self):
        if not (self.min.x <= self.max.x and self.min.y <= self.max.y
                and self.min.z <= self.max.z):
            raise DegenerateGeometry(f"inverted aabb {self.min}..{self.max}")

    def union(self, other: "Aabb") -> "Aabb":
        return Aabb(
            Vec3(min(self.min.x, other.min.x), min(self.min.y, other.min.y),
                 min(self.min.z, other.min.z)),
            Vec3(max(self.max.x, other.max.x), max(self.max.y, other.max.y),
                 max(self.max.z, other.max.z)),
        )

    def contains(self, p: Vec3) -> bool:
        return (self.min.x <= p.x <= self.max.x
                and self.min.y <= p.y <= self.max.y
                and self.min.z <= p.z <= self.max.z)

    def volume(self) -> float:
        d = self.max - self.min
        return d.x * d.y * d.z

    def center(self) -> Vec3:
        return Vec3(0.5 * (self.min.x + self.max.x),
                    0.5 * (self.min.y + self.max.y),
                    0.5 * (self.min.z + self.max.z))


def _aabb_of_points(points) -> Aabb:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    zs = [p.z for p in points]
    return Aabb(Vec3(min(xs), min(ys), min(zs)), Vec3(max(xs), max(ys), max(zs)))


def _circle_axis_extents(axis: Vec3, r: float) -> Vec3:
    """Per-coordinate extent of a circle of radius r normal to axis."""
    return Vec3(
        r * math.sqrt(max(0.0, 1.0 - axis.x * axis.x)),
        r * math.sqrt(max(0.0, 1.0 - axis.y * axis.y)),
        r * math.sqrt(max(0.0, 1.0 - axis.z * axis.z)),
    )


def aabb(kind_or_surface) -> Aabb:
    """Tight axis-aligned bounding box of a bounded kind."""
    kind = kind_or_surface.kind if isinstance(kind_or_surface, Surface) else kind_or_surface
    _require_bounded(kind, "aabb")
    if isinstance(kind, Sphere):
        r = Vec3(kind.r, kind.r, kind.r)
        return Aabb(kind.center - r, kind.center + r)
    if isinstance(kind, Rpp):
        return Aabb(Vec3(kind.xmin, kind.ymin, kind.zmin),
                    Vec3(kind.xmax, kind.ymax, kind.zmax))
    if isinstance(kind, Box):
        b = kind.base
        return _aabb_of_points([
            b, b + kind.e1, b + kind.e2, b + kind.e3,
            b + kind.e1 + kind.e2, b + kind.e1 + kind.e3, b + kind.e2 + kind.e3,
            b + kind.e1 + kind.e2 + kind.e3,
        ])
    if isinstance(kind, Wed):
        v = kind.vertex
        return _aabb_of_points([
            v, v + kind.e1, v + kind.e2,
            v + kind.e3, v + kind.e1 + kind.e3, v + kind.e2 + kind.e3,
        ])
    if isinstance(kind, Rcc):
        axis = kind.h.unit()
        ext = _circle_axis_extents(axis, kind.r)
        c1, c2 = kind.base, kind.base + kind.h
        return Aabb(
            Vec3(min(c1.x, c2.x) - ext.x, min(c1.y, c2.y) - ext.y,
                 min(c1.z, c2.z) - ext.z),
            Vec3(max(c1.x, c2.x) + ext.x, max(c1.y, c2.y) + ext.y,
                 max(c1.z, c2.z) + ext.z),
        )
    if isinstance(kind, Trc):
        axis = kind.h.unit()
        e1 = _circle_axis_extents(axis, kind.r_base)
        e2 = _circle_axis_extents(axis, kind.r_top)
        c1, c2 = kind.base, kind.base + kind.h
        return Aabb(
            Vec3(min(c1.x - e1.x, c2.x - e2.x), min(c1.y - e1.y, c2.y - e2.y),
                 min(c1.z - e1.z, c2.z - e2.z)),
            Vec3(max(c1.x + e1.x, c2.x + e2.x), max(c1.y + e1.y, c2.y + e2.y),
                 max(c1.z + e1.z, c2.z + e2.z)),
        )
    if isinstance(kind, Rec):
        c1, c2 = kind.base, kind.base + kind.h
        # extent of the cap ellipse along coordinate k is hypot(v1_k, v2_k)
        ext = Vec3(math.hypot(kind.v1.x, kind.v2.x),
                   math.hypot(kind.v1.y, kind.v2.y),
                   math.hypot(kind.v1.z, kind.v2.z))
        return Aabb(
            Vec3(min(c1.x, c2.x) - ext.x, min(c1.y, c2.y) - ext.y,
                 min(c1.z, c2.z) - ext.z),
            Vec3(max(c1.x, c2.x) + ext.x, max(c1.y, c2.y) + ext.y,
                 max(c1.z, c2.z) + ext.z),
        )
    if isinstance(kind, TORUS_KINDS):
        radial = kind.a + kind.c
        if isinstance(kind, TorusX):
            ext = Vec3(kind.b, radial, radial)
        elif isinstance(kind, TorusY):
            ext = Vec3(radial, kind.b, radial)
        else:
            ext = Vec3(radial, radial, kind.b)
        return Aabb(kind.center - ext, kind.center + ext)
    raise TypeError(f"unsupported kind {type(kind).__name__}")


def plane_anchor(kind: SurfaceKind) -> Vec3:
    """Nearest-to-origin point of a plane (label anchor / quad center)."""
    if isinstance(kind, PlaneGeneral):
        n2 = kind.a * kind.a + kind.b * kind.b + kind.c * kind.c
        k = kind.d / n2
        return Vec3(kind.a * k, kind.b * k, kind.c * k)
    if isinstance(kind, PlaneX):
        return Vec3(kind.d, 0.0, 0.0)
    if isinstance(kind, PlaneY):
        return Vec3(0.0, kind.d, 0.0)
    if isinstance(kind, PlaneZ):
        return Vec3(0.0, 0.0, kind.d)
    raise TypeError(f"{type(kind).__name__} is not a plane")
