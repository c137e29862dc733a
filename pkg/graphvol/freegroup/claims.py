"""Injectivity and non-conjugacy checks for the tangle-exterior surfaces.

The exterior of the three-strand tangle has free fundamental group on
``x, y, z``. Each surface below is incompressible because the inclusion
induces an injective map on fundamental groups; the image words of the
surface generators are recorded verbatim, so a mis-transcribed
word shows up as a failing check instead of being silently corrected.
"""

from pydantic import BaseModel, Field

from graphvol.core.logging import get_logger
from graphvol.freegroup.folding import contains, fold, rank, verify_injectivity
from graphvol.freegroup.words import (
    Word,
    abelianize,
    conjugate_test,
    cyclic_reduce,
    parse_word,
)

logger = get_logger(__name__)

ALPHABET = ("x", "y", "z")


def w(text: str) -> Word:
    return parse_word(text, ALPHABET)


# Loop used to push the second generator of F1 over the second strand.
F1_CONJUGATOR = w("x y' x' z' x y x'")

# Images of the surface generators, recorded verbatim.
F1_IMAGES = (
    w("x"),
    w("x y' x' z' x y x' z x' z' x y' x' z x y x'"),
)
F2_IMAGES = (
    w("y"),
    w("z x' z' x y' x' z x z'"),
)
G_IMAGES = (
    w("x y' x' z' x y x' z x' z' x y' x' z x y"),
    w("z x' z' x y' x' z x z' y"),
)
F2_U2_G_IMAGES = (
    w("y"),
    w("x y' x' z' x y x' z x' z' x y' x' z x y"),
    w("z x' z' x"),
)
F1_F2_G_IMAGES = (
    w("x"),
    w("x y' x' z' x y x' z x' z' x y' x' z x y x'"),
    w("y"),
    w("z x' z' x y' x' z x z'"),
)
# Stated image of g2' = g1 g3 g1^-1 g2 g1 g3^-1 g1^-1.
F1_F2_G_REPLACEMENT_PRINTED = w("z' x y x' z x' z' x y' x' z")


class ClaimResult(BaseModel):
    """Outcome of one injectivity claim."""

    claim_id: str
    surface: str
    generators: int
    rank: int
    passed: bool
    images: list[str]


class ConjugacyResult(BaseModel):
    """Outcome of a non-conjugacy check."""

    check_id: str
    cyclic_lengths: tuple[int, int]
    conjugate: bool
    homology: tuple[dict[str, int], dict[str, int]]
    passed: bool


class SubstitutionResult(BaseModel):
    """Outcome of a generator-replacement check."""

    check_id: str
    computed: str
    printed: str
    reduced_matches_printed: bool
    same_subgroup: bool
    passed: bool


class ClaimSuiteReport(BaseModel):
    """All claim checks."""

    claims: list[ClaimResult] = Field(default_factory=list)
    conjugacy: list[ConjugacyResult] = Field(default_factory=list)
    substitutions: list[SubstitutionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        checks = [*self.claims, *self.conjugacy, *self.substitutions]
        return all(check.passed for check in checks)


def f1_replacement_image() -> Word:
    """``q (z x' z') q^-1``: the F1 image rebuilt from its conjugation steps."""
    return w("z x' z'").conjugate_by(F1_CONJUGATOR)


def g2_replacement_image() -> Word:
    """Image of ``g2' = g1 g3 g1^-1 g2 g1 g3^-1 g1^-1`` after free reduction."""
    g1, g2, g3, _ = F1_F2_G_IMAGES
    return g2.conjugate_by(g1 * g3 * g1.inverse())


def check_injectivity(claim_id: str, surface: str, images: tuple[Word, ...]) -> ClaimResult:
    subgroup_rank = rank(fold(images))
    return ClaimResult(
        claim_id=claim_id,
        surface=surface,
        generators=len(images),
        rank=subgroup_rank,
        passed=verify_injectivity(images),
        images=[str(image) for image in images],
    )


def check_generator_nonconjugacy() -> ConjugacyResult:
    """The two generators of the thrice-punctured sphere G are not conjugate."""
    g1, g2 = G_IMAGES
    c1, c2 = cyclic_reduce(g1), cyclic_reduce(g2)
    conjugate = conjugate_test(g1, g2)
    return ConjugacyResult(
        check_id="G-generators",
        cyclic_lengths=(len(c1), len(c2)),
        conjugate=conjugate,
        homology=(abelianize(g1), abelianize(g2)),
        passed=not conjugate and len(c1) != len(c2),
    )


def check_replacement_generator() -> SubstitutionResult:
    g1, g2, g3, g4 = F1_F2_G_IMAGES
    computed = g2_replacement_image()
    replaced = (g1, computed, g3, g4)
    same_subgroup = all(contains(fold(replaced), image) for image in F1_F2_G_IMAGES) and all(
        contains(fold(F1_F2_G_IMAGES), image) for image in replaced
    )
    matches = computed == F1_F2_G_REPLACEMENT_PRINTED
    return SubstitutionResult(
        check_id="F1-F2-G",
        computed=str(computed),
        printed=str(F1_F2_G_REPLACEMENT_PRINTED),
        reduced_matches_printed=matches,
        same_subgroup=same_subgroup,
        passed=matches and same_subgroup,
    )


def claim_suite() -> ClaimSuiteReport:
    """Run every injectivity claim plus the non-conjugacy and substitution checks."""
    g1, _, g3, g4 = F1_F2_G_IMAGES
    report = ClaimSuiteReport(
        claims=[
            check_injectivity("F1", "F1", F1_IMAGES),
            check_injectivity("F2", "F2", F2_IMAGES),
            check_injectivity("G", "G", G_IMAGES),
            check_injectivity("F2-U2-G", "F2 u U2 u G", F2_U2_G_IMAGES),
            check_injectivity(
                "F1-F2-G",
                "F1 u F2 u G",
                (g1, F1_F2_G_REPLACEMENT_PRINTED, g3, g4),
            ),
        ],
        conjugacy=[check_generator_nonconjugacy()],
        substitutions=[check_replacement_generator()],
    )
    logger.info(
        "Claim suite finished",
        passed=report.passed,
        failed=[c.claim_id for c in report.claims if not c.passed],
    )
    return report
