"""Tests for the surface-group claim suite."""

from graphvol.freegroup import abelianize, contains, cyclic_reduce, fold, rank, verify_injectivity
from graphvol.freegroup.claims import (
    F1_F2_G_IMAGES,
    F1_F2_G_REPLACEMENT_PRINTED,
    F1_IMAGES,
    G_IMAGES,
    check_generator_nonconjugacy,
    check_replacement_generator,
    claim_suite,
    f1_replacement_image,
    g2_replacement_image,
)


def test_claim_suite_passes():
    """Test that every claim in the suite verifies."""
    report = claim_suite()
    assert report.passed
    ranks = {claim.claim_id: claim.rank for claim in report.claims}
    assert ranks == {"F1": 2, "F2": 2, "G": 2, "F2-U2-G": 3, "F1-F2-G": 4}
    assert all(claim.rank == claim.generators for claim in report.claims)


def test_g_generators_not_conjugate():
    """Test that the two generators of G are not conjugate."""
    result = check_generator_nonconjugacy()
    assert result.cyclic_lengths == (16, 10)
    assert not result.conjugate
    assert result.passed


def test_g_generators_homologically_trivial():
    """Test that both generators of G vanish in homology."""
    for image in G_IMAGES:
        assert set(abelianize(image).values()) == {0}
        assert cyclic_reduce(image) == image


def test_f1_image_rebuilt_from_conjugation():
    """Test that the F1 image equals its conjugation construction."""
    assert f1_replacement_image() == F1_IMAGES[1]
    assert len(F1_IMAGES[1]) == 17


def test_replacement_generator_reduces_to_stated_word():
    """Test that g2' freely reduces to the stated word."""
    assert g2_replacement_image() == F1_F2_G_REPLACEMENT_PRINTED
    result = check_replacement_generator()
    assert result.reduced_matches_printed
    assert result.same_subgroup
    assert result.passed


def test_replacement_spans_same_subgroup():
    """Test mutual membership of the original and replaced generating sets."""
    g1, _, g3, g4 = F1_F2_G_IMAGES
    replaced = (g1, F1_F2_G_REPLACEMENT_PRINTED, g3, g4)
    original_graph = fold(F1_F2_G_IMAGES)
    replaced_graph = fold(replaced)
    assert all(contains(original_graph, w) for w in replaced)
    assert all(contains(replaced_graph, w) for w in F1_F2_G_IMAGES)
    assert rank(original_graph) == rank(replaced_graph) == 4


def test_injectivity_survives_nielsen_moves():
    """Test that injectivity is unchanged by Nielsen moves on the images."""
    g1, g2 = G_IMAGES
    assert verify_injectivity([g1 * g2, g2])
    assert verify_injectivity([g1, g2 * ~g1])
