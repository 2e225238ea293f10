"""
Braid words and an exact solution to the word problem.

A braid on ``strands`` strands is represented by a word in the Artin
generators: a sequence of nonzero integers, where the letter ``g`` with
``1 <= |g| <= strands - 1`` stands for the half twist of the strands at
positions ``|g|`` and ``|g| + 1``, with sign ``sign(g)``.  A positive
letter crosses the strand at position ``|g|`` over the strand at
position ``|g| + 1``.  The empty word is the identity braid.

Triviality of a word is decided by handle reduction: a word reduces to
the empty word iff it represents the identity; otherwise it reduces to a
word in which the generator of lowest index occurs with only one sign,
which certifies non-triviality.  A permutation pre-filter disposes of
most non-trivial inputs without running the reduction at all.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(Exception):
    """Raised when handle reduction exceeds its step budget.

    This signals the caller to retry with a larger budget; it is never a
    wrong answer.
    """

    def __init__(self, budget: int, context: str | None = None):
        suffix = f" while checking {context}" if context else ""
        super().__init__(f"handle reduction exceeded budget of {budget} steps{suffix}")
        self.budget = budget
        self.context = context


class StrandMismatchError(ValueError):
    """Raised when two words over different strand counts are combined."""


def reduction_budget() -> int:
    """Current step budget, overridable via the HF_BUDGET variable."""
    raw = os.environ.get("HF_BUDGET")
    if raw:
        budget = int(raw)
        if budget <= 0:
            raise ValueError("HF_BUDGET must be positive")
        return budget
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise ValueError(f"letter {g} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def format(self) -> str:
        """Serialize as e.g. ``6 | 1 -2 5`` (strand count, bar, letters)."""
        return f"{self.strands} | {' '.join(str(g) for g in self.letters)}".rstrip()

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """Parse the textual format produced by :meth:`format`."""
        head, bar, tail = text.partition("|")
        if not bar:
            raise ValueError(f"missing '|' separator in braid word {text!r}")
        return cls(int(head.strip()), tuple(int(tok) for tok in tail.split()))

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict) -> BraidWord:
        return cls(int(obj["strands"]), tuple(int(g) for g in obj["letters"]))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n} stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: Permutation) -> Permutation:
        """The composite applying ``self`` first, then ``other``."""
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each rotated to start at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            v = self(start)
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self(v)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"cannot concatenate words on {u.strands} and {v.strands} strands"
        )
    return BraidWord(u.strands, u.letters + v.letters)


def invert(w: BraidWord) -> BraidWord:
    """The inverse word: reversed sequence with all signs flipped."""
    return BraidWord(w.strands, tuple(-g for g in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for g in w.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.strands, tuple(stack))


def permutation_of(w: BraidWord) -> Permutation:
    """Image of ``w`` under the map sending each generator to a transposition.

    The letter of index k maps to the transposition (k, k+1); letters act
    left to right along the word, so the strand starting at position p
    ends at position ``permutation_of(w)(p)``.
    """
    # at_pos[q] is the strand currently occupying position q+1.
    at_pos = list(range(1, w.strands + 1))
    for g in w.letters:
        k = abs(g) - 1
        at_pos[k], at_pos[k + 1] = at_pos[k + 1], at_pos[k]
    images = [0] * w.strands
    for q, strand in enumerate(at_pos, start=1):
        images[strand - 1] = q
    return Permutation(tuple(images))


def _handle_reduce(letters: list[int], budget: int) -> list[int]:
    """Reduce handles until none remain, leftmost-closing handle first.

    The word is kept in a doubly-linked list so a handle can be spliced
    out in time proportional to its own length.  A handle is a factor
    ``g^e ... g^-e`` whose interior contains only letters of strictly
    higher index; reducing it deletes the pair and conjugates the
    interior letters of index |g|+1.  The scan below always finds the
    handle whose closing letter is leftmost, which guarantees the
    interior holds no nested handle and hence that the rewriting
    terminates.
    """
    n = len(letters)
    # Node 0 is a head sentinel; nodes are appended as needed.
    nxt = [0] * (n + 1)
    prv = [0] * (n + 1)
    val = [0] * (n + 1)

    def link(a: int, b: int):
        nxt[a] = b
        prv[b] = a

    def insert_after(a: int, g: int) -> int:
        node = len(val)
        val.append(g)
        nxt.append(0)
        prv.append(0)
        link(node, nxt[a])
        link(a, node)
        return node

    for i, g in enumerate(letters, start=1):
        val[i] = g
        link(i - 1, i)
    nxt[n] = 0  # tail points back at the sentinel

    steps = 0
    while True:
        # Scan for the leftmost-closing handle.  The stack keeps, for a
        # strictly increasing sequence of indices, the most recent letter
        # of each index seen since any lower-index letter.
        stack: list[int] = []
        found = None
        node = nxt[0]
        while node != 0:
            g = val[node]
            i = abs(g)
            while stack and abs(val[stack[-1]]) > i:
                stack.pop()
            if stack and abs(val[stack[-1]]) == i:
                if val[stack[-1]] == -g:
                    found = (stack[-1], node)
                    break
                stack[-1] = node
            else:
                stack.append(node)
            node = nxt[node]
        if found is None:
            break

        steps += 1
        if steps > budget:
            raise BudgetExceededError(budget)

        p, q = found
        e = 1 if val[p] > 0 else -1
        i = abs(val[p])
        # Rewrite interior letters of index i+1: conjugation by the
        # deleted pair turns g^d into g^-e sigma_i^d g^e.
        inner = nxt[p]
        while inner != q:
            following = nxt[inner]
            d = 1 if val[inner] > 0 else -1
            if abs(val[inner]) == i + 1:
                val[inner] = (i + 1) * -e
                a = insert_after(inner, i * d)
                insert_after(a, (i + 1) * e)
            inner = following
        # Splice out the handle pair.
        left = prv[p]
        link(left, nxt[p])
        link(prv[q], nxt[q])
        # Free-reduce around the modified span, cascading outward.
        cursor = left if left != 0 else nxt[0]
        while cursor != 0:
            after = nxt[cursor]
            if after != 0 and val[cursor] == -val[after]:
                back = prv[cursor]
                link(back, nxt[after])
                cursor = back if back != 0 else nxt[0]
            else:
                cursor = after

    out = []
    node = nxt[0]
    while node != 0:
        out.append(val[node])
        node = nxt[node]
    return out


def handle_reduce(w: BraidWord, budget: int | None = None) -> BraidWord:
    """Fully handle-reduce ``w`` (after free reduction)."""
    if budget is None:
        budget = reduction_budget()
    reduced = free_reduce(w)
    return BraidWord(w.strands, tuple(_handle_reduce(list(reduced.letters), budget)))


def is_trivial(w: BraidWord, budget: int | None = None) -> bool:
    """Whether ``w`` represents the identity braid."""
    reduced = free_reduce(w)
    if not reduced.letters:
        return True
    if not permutation_of(reduced).is_identity():
        return False
    return len(handle_reduce(reduced, budget)) == 0


def braids_equal(u: BraidWord, v: BraidWord, budget: int | None = None) -> bool:
    """Whether two words represent the same braid."""
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"cannot compare words on {u.strands} and {v.strands} strands"
        )
    ur, vr = free_reduce(u), free_reduce(v)
    if ur.letters == vr.letters:
        return True
    return is_trivial(concat(ur, invert(vr)), budget)


def random_word(strands: int, length: int, rng) -> BraidWord:
    """A uniformly random word of exactly ``length`` letters."""
    gens = [g for k in range(1, strands) for g in (k, -k)]
    return BraidWord(strands, tuple(rng.choice(gens) for _ in range(length)))
