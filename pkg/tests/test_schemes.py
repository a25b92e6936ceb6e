from fractions import Fraction as F

import numpy as np
import pytest

from takagiqv.schemes import (
    BUILTIN_NAMES,
    Bernoulli,
    Explicit,
    SchemeDepthError,
    parse_exact_fraction,
    parse_scheme,
)


class TestNamedSchemes:
    def test_all_plus(self):
        assert parse_scheme("all_plus").theta(3, 5) == 1

    def test_alt_m(self):
        assert parse_scheme("alt_m").theta(3, 0) == -1
        assert parse_scheme("alt_m").theta(2, 3) == 1

    def test_alt_mk(self):
        s = parse_scheme("alt_mk")
        assert s.theta(2, 1) == -1
        assert s.theta(3, 1) == 1

    def test_half_split(self):
        s = parse_scheme("half_split")
        assert s.theta(0, 0) == 1
        assert s.theta(2, 1) == 1
        assert s.theta(2, 2) == -1

    def test_neg_half_split_flips_everything(self):
        a = parse_scheme("half_split")
        b = parse_scheme("neg_half_split")
        for m in range(5):
            assert np.array_equal(a.row(m), -b.row(m))

    def test_block(self):
        s = parse_scheme("block:5")
        assert s.theta(4, 0) == 1
        assert s.theta(5, 0) == -1
        assert s.theta(10, 3) == 1

    @pytest.mark.parametrize("spec", BUILTIN_NAMES)
    def test_rows_match_scalar_queries(self, spec):
        s = parse_scheme(spec)
        for m in range(6):
            row = s.row(m)
            assert row.shape == (1 << m,)
            assert all(row[k] == s.theta(m, k) for k in range(1 << m))

    def test_out_of_range(self):
        s = parse_scheme("all_plus")
        with pytest.raises(ValueError):
            s.theta(2, 4)
        with pytest.raises(ValueError):
            s.theta(2, -1)
        with pytest.raises(ValueError):
            s.theta(-1, 0)

    def test_negated_involution(self):
        s = parse_scheme("alt_mk")
        assert s.negated().negated() is s
        assert s.negated().theta(3, 2) == -s.theta(3, 2)


class TestBernoulli:
    def test_reproducible(self):
        a = Bernoulli(F(1, 2), seed=42)
        b = Bernoulli(F(1, 2), seed=42)
        assert np.array_equal(a.row(10), b.row(10))

    def test_seed_sensitivity(self):
        a = Bernoulli(F(1, 2), seed=1)
        b = Bernoulli(F(1, 2), seed=2)
        assert not np.array_equal(a.row(10), b.row(10))

    def test_degenerate_probabilities(self):
        assert np.all(Bernoulli(F(1), 7).row(8) == 1)
        assert np.all(Bernoulli(F(0), 7).row(8) == -1)

    def test_frequency(self):
        row = Bernoulli(F(1, 2), seed=3).row(14)
        assert abs(float(np.mean(row))) < 0.05
        row = Bernoulli(F(1, 4), seed=3).row(14)
        assert abs(float(np.mean(row)) - (-0.5)) < 0.05

    def test_parse(self):
        s = parse_scheme("bernoulli:1/4:42")
        assert s.spec == "bernoulli:1/4:42"
        assert s.theta(5, 11) in (-1, 1)

    def test_probability_range(self):
        with pytest.raises(ValueError):
            Bernoulli(F(3, 2), seed=0)


class TestExplicit:
    def make(self, depth=3):
        table = {}
        for m in range(depth):
            for k in range(1 << m):
                table[(m, k)] = 1 if (m + k) % 2 == 0 else -1
        return Explicit(table, depth)

    def test_query(self):
        s = self.make()
        assert s.theta(2, 1) == -1

    def test_depth_error(self):
        s = self.make(depth=3)
        with pytest.raises(SchemeDepthError):
            s.theta(3, 0)

    def test_incomplete_table_rejected(self):
        with pytest.raises(ValueError):
            Explicit({(0, 0): 1}, depth=2)
        with pytest.raises(ValueError):
            Explicit({(0, 0): 2}, depth=1)

    def test_file_round_trip(self, tmp_path):
        s = self.make(depth=4)
        path = tmp_path / "scheme.txt"
        s.save(path)
        loaded = parse_scheme(f"file:{path}")
        assert loaded.depth == 4
        for m in range(4):
            assert np.array_equal(loaded.row(m), s.row(m))

    def test_bad_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 0 +1\n")
        with pytest.raises(ValueError):
            Explicit.load(path)
        path.write_text("depth 1\n0 0 maybe\n")
        with pytest.raises(ValueError):
            Explicit.load(path)


def test_parse_rejects_unknown():
    for bad in ("nonsense", "block", "bernoulli:1/2", "all_plus:3"):
        with pytest.raises(ValueError):
            parse_scheme(bad)


def test_parse_exact_fraction():
    assert parse_exact_fraction("3/4") == F(3, 4)
    assert parse_exact_fraction("-2") == F(-2)
    for bad in ("0.5", "1e-3", "a/b", "1/2/3"):
        with pytest.raises(ValueError):
            parse_exact_fraction(bad)
