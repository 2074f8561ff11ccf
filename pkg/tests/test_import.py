import random

from fitsgeo import (
    Rpp,
    Sphere,
    TorusZ,
    export_input,
    parse_input,
    validate_model,
)
from fitsgeo.diagnostics import ERROR, WARNING

from .support import assert_models_equal, random_model


class TestCardTolerance:
    def test_missing_radius_arity(self):
        result = parse_input("[Surface]\n10 SPH 0 0 0\n")
        errs = [d for d in result.diagnostics if d.severity == ERROR]
        assert len(errs) == 1
        assert "expected 4 parameters" in errs[0].message
        assert errs[0].location.line == 2

    def test_unknown_mnemonic_named(self):
        result = parse_input("[Surface]\n10 GQ 1 2 3\n")
        assert any("GQ" in d.message and d.severity == ERROR
                   for d in result.diagnostics)

    def test_unknown_section_skipped(self):
        deck = "[Tally]\nwhatever 1 2 3\n[Surface]\n10 SPH 0 0 0 1\n"
        result = parse_input(deck)
        warns = [d for d in result.diagnostics if d.code == "UnknownSectionSkipped"]
        assert len(warns) == 1
        assert len(result.model.surfaces) == 1

    def test_fortran_exponents(self):
        result = parse_input("[Surface]\n10 SPH 0 0 0 1.0D0\n"
                             "11 SPH 0 0 0 2.5d-1\n")
        assert not result.diagnostics
        assert result.model.surfaces[0].kind.r == 1.0
        assert result.model.surfaces[1].kind.r == 0.25

    def test_case_insensitive_headers_and_mnemonics(self):
        result = parse_input("[ surface ]\n10 sph 0 0 0 1\n")
        assert not result.diagnostics
        assert isinstance(result.model.surfaces[0].kind, Sphere)

    def test_comment_and_blank_tolerance(self):
        deck = ("# full-line comment\n"
                "$ stray comment\n"
                "\n"
                "[Surface]\n"
                "10 SPH 0 0 0 1 $ ball\n"
                "# another\n"
                "20 RPP 0 1 0 1 0 1\n")
        result = parse_input(deck)
        assert not result.diagnostics
        assert result.model.surfaces[0].name == "ball"
        assert isinstance(result.model.surfaces[1].kind, Rpp)
        assert result.model.surfaces[1].name == "s20"

    def test_continuation_by_indent(self):
        deck = ("[Cell]\n"
                "1 0 -1 2\n"
                "   -3 : -4 $ pieces\n")
        result = parse_input(deck)
        assert not result.diagnostics
        from fitsgeo import region_to_text

        assert region_to_text(result.model.cells[0].region) == "-1 2 -3 : -4"
        assert result.model.cells[0].name == "pieces"

    def test_signed_positive_tolerated(self):
        result = parse_input("[Cell]\n1 0 +1 -2\n")
        assert not result.diagnostics
        from fitsgeo import region_to_text

        assert region_to_text(result.model.cells[0].region) == "1 -2"

    def test_degenerate_geometry_diagnostic(self):
        result = parse_input("[Surface]\n1 RPP 1 0 0 1 0 1\n")
        assert any(d.code == "DegenerateGeometry" for d in result.diagnostics)
        assert not result.model.surfaces

    def test_positive_cell_density_rejected(self):
        result = parse_input("[Cell]\n1 2 0.5 -1\n")
        assert any(d.code == "UnsupportedDensity" for d in result.diagnostics)

    def test_material_without_comment_defaults_density(self):
        result = parse_input("[Material]\nMAT[1]\n  H 2\n  O 1\n")
        warns = [d for d in result.diagnostics if d.code == "DensityDefaulted"]
        assert len(warns) == 1 and warns[0].severity == WARNING
        assert result.model.materials[0].density == 1.0

    def test_mixed_ratio_signs_rejected(self):
        result = parse_input("[Material]\nMAT[1] $ m 1 g/cc\n  H 2\n  O -1\n")
        assert any(d.severity == ERROR for d in result.diagnostics)

    def test_gas_flag_round_trip(self):
        deck = "[Material]\nMAT[7] $ helium 0.0001663 g/cc\n  He 1\n  GAS=1\n"
        result = parse_input(deck)
        assert not result.diagnostics
        assert result.model.materials[0].gas

    def test_torus_card(self):
        result = parse_input("[Surface]\n5 TZ 0 0 0 3 1 1 $ ring\n")
        assert isinstance(result.model.surfaces[0].kind, TorusZ)


class TestRoundTrip:
    def test_random_models(self):
        rng = random.Random(2042)
        for _ in range(25):
            model = random_model(rng)
            result = parse_input(export_input(model))
            assert not [d for d in result.diagnostics if d.severity == ERROR]
            assert_models_equal(model, result.model)

    def test_idempotent(self):
        rng = random.Random(99)
        model = random_model(rng)
        first = parse_input(export_input(model)).model
        second = parse_input(export_input(first)).model
        assert_models_equal(first, second)

    def test_reimported_deck_validates(self):
        rng = random.Random(123)
        for _ in range(10):
            model = random_model(rng)
            result = parse_input(export_input(model))
            errors = [d for d in validate_model(result.model, volume_probe=False)
                      if d.severity == ERROR]
            assert errors == []


class TestFuzzSafety:
    def test_garbage_never_raises(self):
        rng = random.Random(0xF00D)
        alphabet = "[]()#:+-$ \t\nabcdefSPHRPPMAT0123456789.eEdD/*"
        for _ in range(2000):
            text = "".join(rng.choice(alphabet)
                           for _ in range(rng.randint(0, 120)))
            parse_input(text)

    def test_mutated_deck_never_raises(self):
        rng = random.Random(0xBEEF)
        base = export_input(random_model(rng))
        for _ in range(300):
            chars = list(base)
            for _ in range(rng.randint(1, 20)):
                pos = rng.randrange(len(chars))
                chars[pos] = rng.choice("[]()#:+-$ \nXq0123456789.")
            parse_input("".join(chars))

    def test_binary_ish_input(self):
        parse_input("\x00\x01\x02 [Surface] \xff\xfe")
        parse_input("[Surface]\n" + "9" * 10000 + " SPH 0 0 0 1\n")
