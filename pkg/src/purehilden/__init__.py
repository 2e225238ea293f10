"""Verified realization of a finite presentation of the pure Hilden group.

Subpackages cover braid words with an exact word-problem kernel, the
symbolic generating set and its relation schemas, a Temperley-Lieb
cap-state oracle, the framed-braid action on the presentation, a
single-step derivation checker, and the verification suites tying them
together.
"""

from purehilden.braids import (
    BraidWord,
    BudgetExceededError,
    Permutation,
    StrandMismatchError,
    braids_equal,
    concat,
    free_reduce,
    handle_reduce,
    invert,
    is_trivial,
    permutation_of,
)

__all__ = [
    "BraidWord",
    "BudgetExceededError",
    "Permutation",
    "StrandMismatchError",
    "braids_equal",
    "concat",
    "free_reduce",
    "handle_reduce",
    "invert",
    "is_trivial",
    "permutation_of",
]
