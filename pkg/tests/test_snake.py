import math

import pytest

from fitsgeo import OUTER, VOID, Sphere, Trc, validate_model
from fitsgeo.snake import SnakeParams, example_snake


@pytest.fixture(scope="module")
def snake():
    return example_snake()


class TestLaws:
    def test_defaults(self):
        p = SnakeParams()
        assert p.n_segments == 50
        assert p.x_max == 5.0

    def test_z_law_endpoints(self):
        p = SnakeParams()
        assert p.z_of(0.0) == 0.0
        # 1.5 * sin(15) * exp(-2), evaluated independently
        assert p.z_of(5.0) == pytest.approx(
            1.5 * math.sin(15.0) * math.exp(-2.0), rel=1e-15)
        assert p.z_of(5.0) == pytest.approx(0.1320103335, rel=1e-9)

    def test_r_law_endpoints(self):
        p = SnakeParams()
        assert p.r_of(0.0) == 0.02
        assert p.r_of(5.0) == pytest.approx(0.02 * math.e, rel=1e-15)
        assert p.r_of(5.0) == pytest.approx(0.054365636569, rel=1e-9)

    def test_param_validation(self):
        with pytest.raises(ValueError):
            SnakeParams(n_segments=1)
        with pytest.raises(ValueError):
            SnakeParams(x_max=0.0)
        with pytest.raises(ValueError):
            SnakeParams(r0=0.0)


class TestModelShape:
    def test_counts(self, snake):
        assert len(snake.surfaces) == 52  # 50 segments + hat + bounding sphere
        assert len(snake.cells) == 53     # segments + hat + void + outer
        assert len(snake.materials) == 2

    def test_materials_from_db(self, snake):
        names = {m.name for m in snake.materials}
        assert names == {"icrp skin", "polyethylene"}

    def test_segments_follow_laws(self, snake):
        p = SnakeParams()
        segments = [s for s in snake.surfaces if isinstance(s.kind, Sphere)
                    and s.name.startswith("seg")]
        assert len(segments) == 50
        for i, s in enumerate(segments):
            x = p.x_max * i / (p.n_segments - 1)
            assert s.kind.center.x == pytest.approx(x, rel=1e-15)
            assert s.kind.center.y == 0.0
            assert s.kind.center.z == pytest.approx(p.z_of(x), rel=1e-12)
            assert s.kind.r == pytest.approx(p.r_of(x), rel=1e-12)

    def test_radii_strictly_increasing(self, snake):
        radii = [s.kind.r for s in snake.surfaces if s.name.startswith("seg")]
        assert all(a < b for a, b in zip(radii, radii[1:]))

    def test_hat_rule(self, snake):
        hat = next(s for s in snake.surfaces if s.name == "hat")
        head = next(s for s in snake.surfaces if s.name == "seg49")
        assert isinstance(hat.kind, Trc)
        r = head.kind.r
        assert hat.kind.r_base == pytest.approx(r, rel=1e-15)
        assert hat.kind.r_top == pytest.approx(0.4 * r, rel=1e-15)
        assert hat.kind.h.norm() == pytest.approx(1.5 * r, rel=1e-15)
        # seated on top of the head sphere, along +z
        assert hat.kind.base.z == pytest.approx(head.kind.center.z + r, rel=1e-15)

    def test_world_sphere_hidden_and_enclosing(self, snake):
        world = next(s for s in snake.surfaces if s.name == "world")
        assert world.opacity == 0.0
        from fitsgeo import aabb

        for s in snake.surfaces:
            if s.name == "world":
                continue
            box = aabb(s.kind)
            for corner in (box.min, box.max):
                assert (corner - world.kind.center).norm() < world.kind.r

    def test_exactly_one_outer_one_void(self, snake):
        outers = [c for c in snake.cells if c.material == OUTER]
        voids = [c for c in snake.cells if c.material == VOID]
        assert len(outers) == 1
        assert len(voids) == 1

    def test_validates_clean(self, snake):
        assert validate_model(snake) == []
