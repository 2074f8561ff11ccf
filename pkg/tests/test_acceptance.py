"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import math
import random
import time

from fitsgeo import (
    OUTER,
    VOID,
    Box,
    Cell,
    Model,
    Rcc,
    Rec,
    Rpp,
    SenseRef,
    Sphere,
    TorusX,
    TorusY,
    TorusZ,
    Trc,
    Vec3,
    Wed,
    analytic_volume,
    cell_contains,
    export_input,
    is_watertight,
    make_surface,
    mc_cell_volume,
    mesh_volume,
    parse_input,
    parse_region,
    tessellate,
    validate_model,
)
from fitsgeo.diagnostics import ERROR
from fitsgeo.errors import FitsGeoError
from fitsgeo.snake import SnakeParams, example_snake
from fitsgeo.tessellate import degenerate_triangles

from .support import assert_models_equal, random_model, random_region


def _canonical_bounded_kinds():
    """Fixed parameters for every bounded kind, deliberately off-axis."""
    e1 = Vec3(1.2, 0.6, 0.0)
    e2 = Vec3(-0.6, 1.2, 0.0)
    e3 = Vec3(0.0, 0.0, 0.8)
    h = Vec3(0.2, 0.3, 1.7)
    v1 = Vec3(1.7, 0.0, -0.2).unit().scaled(1.2)
    v2 = h.cross(v1).unit().scaled(0.5)
    return [
        ("sphere", Sphere(Vec3(0.3, -0.2, 0.1), 1.3)),
        ("box", Box(Vec3(-1.0, -0.5, -0.25), e1, e2, e3)),
        ("rpp", Rpp(-1.1, 0.7, -0.4, 0.9, 0.2, 1.5)),
        ("rcc", Rcc(Vec3(0.0, 0.0, -1.0), Vec3(0.5, 0.5, 2.0), 0.8)),
        ("trc", Trc(Vec3(-0.2, 0.1, 0.0), Vec3(0.3, -0.2, 1.8), 1.1, 0.35)),
        ("torus-x", TorusX(Vec3(0.1, 0.2, -0.1), 2.0, 0.5, 0.75)),
        ("torus-y", TorusY(Vec3(-0.4, 0.0, 0.3), 2.5, 0.9, 0.6)),
        ("torus-z", TorusZ(Vec3(0.0, 0.0, 0.0), 3.0, 1.0, 1.0)),
        ("rec", Rec(Vec3(0.0, -0.3, -0.5), h, v1, v2)),
        ("wed", Wed(Vec3(-0.4, 0.2, 0.0), Vec3(1.5, 0.5, 0.0),
                    Vec3(-0.5, 1.5, 0.0), Vec3(0.0, 0.0, 1.2))),
    ]


def test_analytic_vs_mc_volume():
    """Single-surface cells, n=1e6 fixed seed: |estimate - exact| <= 4 SE."""
    n = 1_000_000
    start = time.perf_counter()
    for name, kind in _canonical_bounded_kinds():
        surface = make_surface(1, name, kind)
        model = Model(surfaces=[surface], cells=[
            Cell(1, "inside", SenseRef(1, -1), VOID),
            Cell(2, "outer", SenseRef(1, +1), OUTER),
        ])
        result = mc_cell_volume(model, 1, n, seed=20260810)
        exact = analytic_volume(kind)
        err = abs(result.estimate - exact)
        limit = 4.0 * result.std_error
        assert err <= max(limit, 1e-12), \
            f"{name}: |{result.estimate} - {exact}| = {err} > 4*SE = {limit}"
    elapsed = time.perf_counter() - start
    assert elapsed < 20.0, f"MC volume sweep took {elapsed:.1f}s (budget 20s)"
    print(f"\nACCEPTANCE analytic-vs-mc-volume: PASS "
          f"({len(_canonical_bounded_kinds())} kinds, {elapsed:.1f}s)")


def test_snake_fixture():
    """Eq-driven fixture: radii law exact ends, z law to 1e-12, validates."""
    params = SnakeParams()
    model = example_snake(params)
    segments = [s for s in model.surfaces if s.name.startswith("seg")]
    assert len(segments) == 50

    radii = [s.kind.r for s in segments]
    assert all(a < b for a, b in zip(radii, radii[1:])), "radii must increase"
    assert radii[0] == 0.02
    r_last_expected = 0.02 * math.exp(0.2 * 5.0)
    assert abs(radii[-1] - r_last_expected) <= 1e-12 * r_last_expected

    for i, s in enumerate(segments):
        x = 5.0 * i / 49.0
        z_expected = 5.0 * math.sin(3.0 * x) * 0.3 * math.exp(-0.4 * x)
        z = s.kind.center.z
        if z_expected == 0.0:
            assert z == 0.0
        else:
            assert abs(z - z_expected) <= 1e-12 * abs(z_expected), f"seg{i}"

    diags = [d for d in validate_model(model) if d.severity == ERROR]
    assert diags == []
    print("\nACCEPTANCE snake-fixture: PASS (50 segments, laws to 1e-12,"
          " zero validation errors)")


def test_round_trip_100_models():
    """parse_input(export_input(m)) is semantically m; exports byte-stable."""
    rng = random.Random(0x5EED)
    start = time.perf_counter()
    for i in range(100):
        model = random_model(rng)
        text = export_input(model)
        assert text == export_input(model), "export must be byte-deterministic"
        result = parse_input(text)
        errors = [d for d in result.diagnostics if d.severity == ERROR]
        assert errors == [], f"model {i}: {errors}"
        assert_models_equal(model, result.model)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"round-trip sweep took {elapsed:.1f}s (budget 10s)"
    print(f"\nACCEPTANCE round-trip: PASS (100 models, {elapsed:.1f}s)")


def _interval_oracle(expr, flags):
    if isinstance(expr, SenseRef):
        inside = flags[expr.surface_id]
        return inside if expr.sign < 0 else not inside
    kind = type(expr).__name__
    if kind == "Complement":
        return not _interval_oracle(expr.inner, flags)
    if kind == "Intersection":
        return all(_interval_oracle(t, flags) for t in expr.terms)
    return any(_interval_oracle(t, flags) for t in expr.terms)


def test_membership_against_interval_bruteforce():
    """Rpp-only models: cell_contains == interval arithmetic on a 21^3 grid."""
    rng = random.Random(0xACCE55)
    lattice = [-6.0 + 12.0 * i / 20.0 for i in range(21)]
    checked = 0
    for _ in range(50):
        bounds = {}
        surfaces = []
        for sid in range(1, rng.randint(2, 5)):
            lo = [rng.uniform(-5.0, 4.0) for _ in range(3)]
            hi = [v + rng.uniform(0.3, 5.0) for v in lo]
            bounds[sid] = (lo, hi)
            surfaces.append(make_surface(
                sid, f"r{sid}", Rpp(lo[0], hi[0], lo[1], hi[1], lo[2], hi[2])))
        ids = list(bounds)
        cells = [Cell(1, "a", random_region(rng, ids, depth=3), VOID),
                 Cell(2, "b", random_region(rng, ids, depth=2), VOID)]
        model = Model(surfaces=surfaces, cells=cells)
        for x in lattice:
            for y in lattice:
                for z in lattice:
                    on_surface = any(
                        x in (lo[0], hi[0]) or y in (lo[1], hi[1])
                        or z in (lo[2], hi[2])
                        for lo, hi in bounds.values())
                    if on_surface:
                        continue
                    flags = {sid: (lo[0] < x < hi[0] and lo[1] < y < hi[1]
                                   and lo[2] < z < hi[2])
                             for sid, (lo, hi) in bounds.items()}
                    p = Vec3(x, y, z)
                    for cell in cells:
                        assert cell_contains(model, cell.id, p) == \
                            _interval_oracle(cell.region, flags)
                        checked += 1
    print(f"\nACCEPTANCE membership-oracle: PASS (50 models,"
          f" {checked} point-cell checks, 100% agreement)")


def test_mesh_quality_resolution_64():
    """All bounded kinds at resolution 64: watertight, volume within 1%
    (2% for tori)."""
    for name, kind in _canonical_bounded_kinds():
        mesh = tessellate(kind, 64)
        assert is_watertight(mesh), f"{name} mesh is not closed"
        assert degenerate_triangles(mesh) == 0, f"{name} has degenerate triangles"
        exact = analytic_volume(kind)
        rel = abs(mesh_volume(mesh) - exact) / exact
        budget = 0.02 if name.startswith("torus") else 0.01
        assert rel <= budget, f"{name}: divergence volume off by {rel:.3%}"
    print("\nACCEPTANCE mesh-quality: PASS (10 kinds at resolution 64)")


def test_parser_fuzz_100k():
    """1e5 iterations against each parser: diagnostics only, never a crash."""
    rng = random.Random(0xFA22)
    deck_alphabet = "[]()#:+-$ \t\nabcdefSPHRCCMATGAS=0123456789.eEdD_"
    region_alphabet = "()#:+- 0123456789abz_"
    base_deck = export_input(random_model(random.Random(1)))

    start = time.perf_counter()
    for i in range(100_000):
        if i % 10 == 0:
            chars = list(base_deck[:300])
            for _ in range(rng.randint(1, 8)):
                chars[rng.randrange(len(chars))] = rng.choice(deck_alphabet)
            text = "".join(chars)
        else:
            text = "".join(rng.choice(deck_alphabet)
                           for _ in range(rng.randint(0, 40)))
        parse_input(text)

    for _ in range(100_000):
        text = "".join(rng.choice(region_alphabet)
                       for _ in range(rng.randint(0, 24)))
        try:
            parse_region(text)
        except FitsGeoError:
            pass  # diagnostics-class failures are the contract
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE parser-fuzz: PASS (2 x 1e5 iterations, {elapsed:.1f}s)")
