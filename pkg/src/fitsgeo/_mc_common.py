"""Shared machinery for the Monte Carlo membership kernels.

A region expression is compiled to a postfix boolean program over packed
surface parameter rows; the sampling RNG is a counter-based splitmix-style
generator keyed by (seed, sample index), so results are independent of
chunking and thread count. Two interchangeable kernel backends exist:

* ``numba`` -- @njit compiled per-sample loop (default when importable);
* ``numpy`` -- vectorized fallback, selected with ``FITSGEO_BACKEND=numpy``.

Both use the same operation order and only exactly rounded primitives
(+, -, *, /, sqrt), so their hit counts are bit-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import FitsGeoError
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
    Wed,
)

BACKEND_ENV = "FITSGEO_BACKEND"

KIND_P = 0
KIND_PX = 1
KIND_PY = 2
KIND_PZ = 3
KIND_SPH = 4
KIND_BOX = 5
KIND_RPP = 6
KIND_RCC = 7
KIND_TRC = 8
KIND_TX = 9
KIND_TY = 10
KIND_TZ = 11
KIND_REC = 12
KIND_WED = 13

PARAM_WIDTH = 16

OP_SENSE = 0
OP_AND = 1
OP_OR = 2
OP_NOT = 3

# splitmix64 constants
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
SEED_SALT = 0xD6E8FEB86659FD93
INV_2_53 = 1.0 / 9007199254740992.0

_U64_MASK = (1 << 64) - 1


def mix_seed(seed: int) -> int:
    """Pre-whitened 64-bit key for the counter stream."""
    z = (int(seed) & _U64_MASK) ^ SEED_SALT
    z = ((z ^ (z >> 30)) * MIX1) & _U64_MASK
    z = ((z ^ (z >> 27)) * MIX2) & _U64_MASK
    return (z ^ (z >> 31)) & _U64_MASK


def pack_surface(kind) -> tuple[int, np.ndarray]:
    """Kind code plus a 16-wide float64 parameter row for the kernels.

    Unit vectors and reciprocals are precomputed here (in one place) so the
    two backends consume identical floats.
    """
    row = np.zeros(PARAM_WIDTH, dtype=np.float64)
    if isinstance(kind, PlaneGeneral):
        row[0:4] = (kind.a, kind.b, kind.c, kind.d)
        return KIND_P, row
    if isinstance(kind, PlaneX):
        row[0] = kind.d
        return KIND_PX, row
    if isinstance(kind, PlaneY):
        row[0] = kind.d
        return KIND_PY, row
    if isinstance(kind, PlaneZ):
        row[0] = kind.d
        return KIND_PZ, row
    if isinstance(kind, Sphere):
        row[0:4] = (kind.center.x, kind.center.y, kind.center.z, kind.r * kind.r)
        return KIND_SPH, row
    if isinstance(kind, Box):
        row[0:3] = kind.base.as_tuple()
        for slot, e in ((3, kind.e1), (7, kind.e2), (11, kind.e3)):
            u = e.unit()
            row[slot:slot + 3] = u.as_tuple()
            row[slot + 3] = e.norm()
        return KIND_BOX, row
    if isinstance(kind, Rpp):
        row[0:6] = (kind.xmin, kind.xmax, kind.ymin, kind.ymax, kind.zmin, kind.zmax)
        return KIND_RPP, row
    if isinstance(kind, Rcc):
        row[0:3] = kind.base.as_tuple()
        row[3:6] = kind.h.unit().as_tuple()
        row[6] = kind.h.norm()
        row[7] = kind.r * kind.r
        return KIND_RCC, row
    if isinstance(kind, Trc):
        height = kind.h.norm()
        row[0:3] = kind.base.as_tuple()
        row[3:6] = kind.h.unit().as_tuple()
        row[6] = height
        row[7] = kind.r_base
        row[8] = (kind.r_top - kind.r_base) / height
        return KIND_TRC, row
    if isinstance(kind, (TorusX, TorusY, TorusZ)):
        row[0:3] = kind.center.as_tuple()
        row[3] = kind.a
        row[4] = 1.0 / kind.b
        row[5] = 1.0 / kind.c
        code = {TorusX: KIND_TX, TorusY: KIND_TY, TorusZ: KIND_TZ}[type(kind)]
        return code, row
    if isinstance(kind, Rec):
        row[0:3] = kind.base.as_tuple()
        row[3:6] = kind.h.unit().as_tuple()
        row[6] = kind.h.norm()
        row[7:10] = kind.v1.unit().as_tuple()
        row[10] = 1.0 / kind.v1.norm()
        row[11:14] = kind.v2.unit().as_tuple()
        row[14] = 1.0 / kind.v2.norm()
        return KIND_REC, row
    if isinstance(kind, Wed):
        row[0:3] = kind.vertex.as_tuple()
        row[3:6] = kind.e1.unit().as_tuple()
        row[6] = 1.0 / kind.e1.norm()
        row[7:10] = kind.e2.unit().as_tuple()
        row[10] = 1.0 / kind.e2.norm()
        row[11:14] = kind.e3.unit().as_tuple()
        row[14] = kind.e3.norm()
        return KIND_WED, row
    raise TypeError(f"unsupported kind {type(kind).__name__}")


@dataclass(frozen=True)
class CompiledRegion:
    kinds: np.ndarray      # (n_surf,) int32
    params: np.ndarray     # (n_surf, 16) float64
    ops: np.ndarray        # (n_ops,) int32
    a0: np.ndarray         # (n_ops,) int32
    a1: np.ndarray         # (n_ops,) int32
    max_stack: int


def compile_region(model, expr) -> CompiledRegion:
    from .cells import Complement, Intersection, SenseRef, region_surface_ids

    sids = sorted(region_surface_ids(expr))
    rows = {}
    kinds = np.empty(len(sids), dtype=np.int32)
    params = np.empty((len(sids), PARAM_WIDTH), dtype=np.float64)
    for i, sid in enumerate(sids):
        code, row = pack_surface(model.surface(sid).kind)
        kinds[i] = code
        params[i] = row
        rows[sid] = i

    ops: list[int] = []
    arg0: list[int] = []
    arg1: list[int] = []
    depth = 0
    max_depth = 0

    def emit(op: int, a: int, b: int, delta: int):
        nonlocal depth, max_depth
        ops.append(op)
        arg0.append(a)
        arg1.append(b)
        depth += delta
        max_depth = max(max_depth, depth)

    def walk(node):
        if isinstance(node, SenseRef):
            emit(OP_SENSE, rows[node.surface_id], node.sign, +1)
        elif isinstance(node, Complement):
            walk(node.inner)
            emit(OP_NOT, 0, 0, 0)
        elif isinstance(node, Intersection):
            for t in node.terms:
                walk(t)
            emit(OP_AND, len(node.terms), 0, 1 - len(node.terms))
        else:
            for t in node.terms:
                walk(t)
            emit(OP_OR, len(node.terms), 0, 1 - len(node.terms))

    walk(expr)
    return CompiledRegion(kinds, params,
                          np.array(ops, dtype=np.int32),
                          np.array(arg0, dtype=np.int32),
                          np.array(arg1, dtype=np.int32),
                          max_depth)


_numba_checked: bool | None = None


def numba_available() -> bool:
    global _numba_checked
    if _numba_checked is None:
        try:
            import numba  # noqa: F401
            _numba_checked = True
        except ImportError:
            _numba_checked = False
    return _numba_checked


def backend_name() -> str:
    """Active kernel backend: FITSGEO_BACKEND if set, else numba when
    importable, else numpy."""
    env = os.environ.get(BACKEND_ENV, "").strip().lower()
    if env == "numpy":
        return "numpy"
    if env == "numba":
        if not numba_available():
            raise FitsGeoError("FITSGEO_BACKEND=numba but numba is not importable")
        return "numba"
    if env:
        raise FitsGeoError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {env!r}")
    return "numba" if numba_available() else "numpy"


def count_hits(compiled: CompiledRegion, box, n: int, seed: int,
               backend: str | None = None) -> int:
    """Number of the n box samples falling inside the region."""
    name = backend or backend_name()
    box6 = np.array([
        box.min.x, box.min.y, box.min.z,
        box.max.x - box.min.x, box.max.y - box.min.y, box.max.z - box.min.z,
    ], dtype=np.float64)
    if name == "numba":
        from . import _mc_numba as kernel
    else:
        from . import _mc_numpy as kernel
    return int(kernel.count_hits(compiled.kinds, compiled.params, compiled.ops,
                                 compiled.a0, compiled.a1, compiled.max_stack,
                                 box6, n, np.uint64(mix_seed(seed))))
