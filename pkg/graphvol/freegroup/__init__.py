"""Free group word calculus and Stallings foldings."""

from graphvol.freegroup.claims import ClaimSuiteReport, claim_suite
from graphvol.freegroup.folding import (
    SubgroupGraph,
    contains,
    fold,
    rank,
    verify_injectivity,
)
from graphvol.freegroup.words import (
    Letter,
    UnknownGeneratorError,
    Word,
    WordSyntaxError,
    abelianize,
    conjugate_test,
    cyclic_reduce,
    identity,
    parse_word,
    reduce,
)

__all__ = [
    "ClaimSuiteReport",
    "Letter",
    "SubgroupGraph",
    "UnknownGeneratorError",
    "Word",
    "WordSyntaxError",
    "abelianize",
    "claim_suite",
    "conjugate_test",
    "contains",
    "cyclic_reduce",
    "fold",
    "identity",
    "parse_word",
    "rank",
    "reduce",
    "verify_injectivity",
]
