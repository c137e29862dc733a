"""Tests for Stallings foldings."""

import pytest

from graphvol.freegroup import Word, contains, fold, identity, parse_word, rank, verify_injectivity

from .test_words import AB, ab_words


def test_single_generator():
    """Test that a cyclic subgroup folds to a rank-one graph."""
    g = fold([parse_word("x y x'")])
    assert rank(g) == 1
    assert g.is_folded()


def test_folding_merges_shared_prefixes():
    """Test that x y and x z fold together into a rank-two graph."""
    g = fold([parse_word("x y"), parse_word("x z")])
    assert rank(g) == 2
    assert g.is_folded()
    assert contains(g, parse_word("x y z' x'"))


def test_dependent_generators():
    """Test that a redundant generator does not raise the rank."""
    images = [parse_word("x"), parse_word("y"), parse_word("x y")]
    assert rank(fold(images)) == 2
    assert not verify_injectivity(images)


def test_basis_is_injective():
    """Test that a free basis gives an injective map."""
    assert verify_injectivity([parse_word("x"), parse_word("y"), parse_word("z")])
    assert rank(fold([parse_word("x"), parse_word("y"), parse_word("z")])) == 3


def test_powers_are_not_free_bases():
    """Test that x and x^2 span a cyclic subgroup."""
    assert rank(fold([parse_word("x"), parse_word("x x")])) == 1
    assert not verify_injectivity([parse_word("x"), parse_word("x x")])


def test_trivial_subgroup():
    """Test that the identity spans the trivial subgroup."""
    g = fold([identity()])
    assert rank(g) == 0
    assert g.vertex_count == 1


def test_empty_images_rejected():
    """Test that an empty image list is an error."""
    with pytest.raises(ValueError):
        verify_injectivity([])


def test_membership():
    """Test membership by reading closed paths."""
    g = fold([parse_word("x x"), parse_word("y")])
    assert contains(g, parse_word("x x y x' x'"))
    assert contains(g, identity())
    assert not contains(g, parse_word("x"))
    assert not contains(g, parse_word("x y"))


def test_fold_is_deterministic():
    """Test that the same input always folds to the same graph."""
    words = [parse_word("x y' x' z"), parse_word("z x' z' x y")]
    assert fold(words) == fold(words)


def test_two_generator_rank_matches_commutation():
    """Test rank of two-generator subgroups against the commuting criterion.

    Two elements of a free group span a cyclic subgroup exactly when they commute.
    """
    words = ab_words(2)
    for u in words:
        for v in words:
            if not u and not v:
                expected = 0
            elif u * v == v * u:
                expected = 1
            else:
                expected = 2
            assert rank(fold([u, v])) == expected, (str(u), str(v))


def test_rank_invariant_under_nielsen_moves():
    """Test that Nielsen moves leave the subgroup rank unchanged."""
    a, b = parse_word("a b a'", AB), parse_word("b b a", AB)
    base = rank(fold([a, b]))
    assert rank(fold([a * b, b])) == base
    assert rank(fold([a, b * ~a])) == base
    assert rank(fold([~a, b])) == base


def test_conjugate_and_square():
    """Test that x y x^-1 and x^2 fold to a two-vertex rank-two graph."""
    g = fold([parse_word("x y x'"), parse_word("x x")])
    assert rank(g) == 2
    assert g.vertex_count == 2
    assert g.is_folded()


def nielsen_rank(u: Word, v: Word) -> int:
    """Rank of ``<u, v>`` by shortening one generator with the other until stuck.

    A pair that cannot be shortened is either free of rank two or has lost a
    generator to the identity; commuting pairs always shorten.
    """
    pair = [w for w in (u, v) if w]
    while len(pair) == 2:
        step = next(
            (
                (i, candidate)
                for i in (0, 1)
                for candidate in (
                    pair[i] * pair[1 - i],
                    pair[i] * ~pair[1 - i],
                    pair[1 - i] * pair[i],
                    ~pair[1 - i] * pair[i],
                )
                if len(candidate) < len(pair[i])
            ),
            None,
        )
        if step is None:
            break
        i, candidate = step
        if candidate:
            pair[i] = candidate
        else:
            pair.pop(i)
    return len(pair)


def test_rank_matches_nielsen_reduction():
    """Test folding rank against Nielsen length reduction on all pairs up to length 3."""
    words = ab_words(3)
    for u in words:
        for v in words:
            assert rank(fold([u, v])) == nielsen_rank(u, v), (str(u), str(v))
