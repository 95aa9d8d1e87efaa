"""Proximity configurations, change-of-basis matrices, coordinate conversions."""

from __future__ import annotations

from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import dag_path_counts, random_config
from skychow.proximity import (
    DivisorVector,
    InvalidConfigError,
    ProximityConfig,
    augmented_change_of_basis,
    change_of_basis,
    enumerate_proximity_configs,
    invert_unitriangular,
    strict_exceptional,
    strict_to_total,
    total_exceptional,
    total_to_strict,
    validate_config,
)

SURFACE = ProximityConfig(n=2, s=2, prox=frozenset({(2, 1)}))


def configs(max_n=3, max_s=5):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_n))
        s = draw(st.integers(1, max_s))
        seed = draw(st.integers(0, 2**30))
        return random_config(Random(seed), n, s)

    return build()


class TestValidation:
    def test_accepts_surface(self):
        assert validate_config(SURFACE) is SURFACE

    def test_rejects_low_dimension(self):
        with pytest.raises(InvalidConfigError, match="ambient dimension"):
            validate_config(ProximityConfig(n=1, s=2))

    def test_rejects_no_points(self):
        with pytest.raises(InvalidConfigError, match="number of points"):
            validate_config(ProximityConfig(n=2, s=0))

    def test_rejects_pair_out_of_order(self):
        with pytest.raises(InvalidConfigError, match="1 <= i < j <= s"):
            validate_config(ProximityConfig(n=2, s=3, prox=frozenset({(1, 2)})))

    def test_rejects_pair_out_of_range(self):
        with pytest.raises(InvalidConfigError, match="1 <= i < j <= s"):
            validate_config(ProximityConfig(n=2, s=2, prox=frozenset({(3, 1)})))

    def test_rejects_too_many_proximities(self):
        cfg = ProximityConfig(n=2, s=4, prox=frozenset({(4, 1), (4, 2), (4, 3)}))
        with pytest.raises(InvalidConfigError, match="more than the ambient dimension"):
            validate_config(cfg)

    def test_cardinality_check_can_be_disabled(self):
        cfg = ProximityConfig(
            n=2,
            s=4,
            prox=frozenset({(4, 1), (4, 2), (4, 3)}),
            strict_snc_check=False,
        )
        assert validate_config(cfg) is cfg


class TestMatrices:
    def test_surface_matrix(self):
        assert change_of_basis(SURFACE, 2) == ((1, 0), (-1, 1))

    def test_chain_matrix(self):
        cfg = ProximityConfig(n=3, s=3, prox=frozenset({(2, 1), (3, 2)}))
        assert change_of_basis(cfg, 3) == ((1, 0, 0), (-1, 1, 0), (0, -1, 1))

    def test_augmented_single_proximity(self):
        cfg = ProximityConfig(n=3, s=3, prox=frozenset({(3, 1)}))
        got = augmented_change_of_basis(cfg, 3)
        assert got == (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, -1, 0, 1),
        )

    def test_truncation_drops_later_points(self):
        cfg = ProximityConfig(n=2, s=3, prox=frozenset({(2, 1), (3, 2)}))
        assert change_of_basis(cfg, 2) == ((1, 0), (-1, 1))

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            change_of_basis(SURFACE, 0)
        with pytest.raises(ValueError):
            change_of_basis(SURFACE, 3)

    def test_invert_examples(self):
        assert invert_unitriangular(((1, 0), (-1, 1))) == ((1, 0), (1, 1))
        chain = ((1, 0, 0), (-1, 1, 0), (0, -1, 1))
        assert invert_unitriangular(chain) == ((1, 0, 0), (1, 1, 0), (1, 1, 1))

    def test_invert_rejects_non_unitriangular(self):
        with pytest.raises(ValueError):
            invert_unitriangular(((2, 0), (0, 1)))
        with pytest.raises(ValueError):
            invert_unitriangular(((1, 5), (0, 1)))

    @given(configs())
    def test_inverse_is_exact(self, cfg):
        m = change_of_basis(cfg, cfg.s)
        inv = invert_unitriangular(m)
        k = cfg.s
        prod = [
            [sum(m[r][t] * inv[t][c] for t in range(k)) for c in range(k)]
            for r in range(k)
        ]
        assert prod == [[1 if r == c else 0 for c in range(k)] for r in range(k)]

    @given(configs())
    def test_inverse_entries_count_proximity_chains(self, cfg):
        inv = invert_unitriangular(change_of_basis(cfg, cfg.s))
        for j in range(1, cfg.s + 1):
            for i in range(1, j + 1):
                expected = dag_path_counts(cfg, j, i)
                assert inv[j - 1][i - 1] == expected
                assert expected >= 0


class TestConversions:
    def test_strict_e1_in_total_coordinates(self):
        got = strict_to_total(SURFACE, strict_exceptional(SURFACE, 1))
        assert got == DivisorVector.total((0, 1, -1))

    def test_total_e1_in_strict_coordinates(self):
        got = total_to_strict(SURFACE, total_exceptional(SURFACE, 1))
        assert got == DivisorVector.strict((0, 1, 1))

    def test_last_exceptional_is_shared(self):
        cfg = ProximityConfig(n=2, s=4, prox=frozenset({(2, 1), (4, 3)}))
        got = strict_to_total(cfg, strict_exceptional(cfg, 4))
        assert got == DivisorVector.total((0, 0, 0, 0, 1))

    def test_basis_tag_is_enforced(self):
        with pytest.raises(ValueError, match="strict-basis"):
            strict_to_total(SURFACE, total_exceptional(SURFACE, 1))
        with pytest.raises(ValueError, match="total-basis"):
            total_to_strict(SURFACE, strict_exceptional(SURFACE, 1))

    def test_length_is_enforced(self):
        with pytest.raises(ValueError, match="length"):
            strict_to_total(SURFACE, DivisorVector.strict((0, 1)))

    def test_bad_basis_name(self):
        with pytest.raises(ValueError, match="basis"):
            DivisorVector("mixed", (1, 0))

    @given(configs(), st.lists(st.integers(-5, 5), min_size=6, max_size=6))
    def test_round_trip(self, cfg, coords):
        v = DivisorVector.strict(tuple(coords[: cfg.s + 1]))
        assert total_to_strict(cfg, strict_to_total(cfg, v)) == v
        w = DivisorVector.total(tuple(coords[: cfg.s + 1]))
        assert strict_to_total(cfg, total_to_strict(cfg, w)) == w


class TestEnumeration:
    def test_counts(self):
        # product over j of the number of small subsets of {1..j-1}
        assert sum(1 for _ in enumerate_proximity_configs(2, 3)) == 8
        assert sum(1 for _ in enumerate_proximity_configs(2, 5)) == 616
        assert sum(1 for _ in enumerate_proximity_configs(3, 5)) == 960

    def test_all_valid_and_distinct(self):
        seen = set()
        for cfg in enumerate_proximity_configs(2, 4):
            validate_config(cfg)
            seen.add(cfg.prox)
        assert len(seen) == 56

    def test_single_point(self):
        (only,) = enumerate_proximity_configs(3, 1)
        assert only.prox == frozenset()
