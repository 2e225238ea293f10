"""
The symbolic alphabet of the presentation and words over it.

Six kinds of letters: ``p``, ``x``, ``y`` carry an unordered pair of cap
indices (stored ascending; the symbol is the same for either order),
``t`` and ``tau`` carry a single cap index, ``sigma`` a single index
below n.  An SWord is a signed sequence of such letters together with
the number of caps n it lives over.

Text format: letters joined by spaces, each ``kind(indices)`` with an
optional ``^-1`` suffix, e.g. ``x(1,2) p(1,3)^-1 t(2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

PAIR_KINDS = ("p", "x", "y")
SINGLE_KINDS = ("t", "tau", "sigma")
KINDS = PAIR_KINDS + SINGLE_KINDS
STAB_KINDS = ("p", "t")  # alphabet of the vertex stabilizer


@dataclass(frozen=True)
class GeneratorSymbol:
    kind: str
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        idx = tuple(self.indices)
        if self.kind in PAIR_KINDS:
            if len(idx) != 2 or idx[0] == idx[1]:
                raise ValueError(f"{self.kind} needs two distinct indices, got {idx}")
            idx = tuple(sorted(idx))
        elif len(idx) != 1:
            raise ValueError(f"{self.kind} needs exactly one index, got {idx}")
        if any(i < 1 for i in idx):
            raise ValueError(f"indices must be positive, got {idx}")
        object.__setattr__(self, "indices", idx)

    def max_cap(self) -> int:
        """Largest cap index the symbol touches (sigma_i touches caps i, i+1)."""
        top = max(self.indices)
        return top + 1 if self.kind == "sigma" else top

    def format(self, sign: int = 1) -> str:
        body = f"{self.kind}({','.join(str(i) for i in self.indices)})"
        return body + ("^-1" if sign < 0 else "")


def p(i: int, j: int) -> GeneratorSymbol:
    return GeneratorSymbol("p", (i, j))


def x(i: int, j: int) -> GeneratorSymbol:
    return GeneratorSymbol("x", (i, j))


def y(i: int, j: int) -> GeneratorSymbol:
    return GeneratorSymbol("y", (i, j))


def t(k: int) -> GeneratorSymbol:
    return GeneratorSymbol("t", (k,))


def tau(k: int) -> GeneratorSymbol:
    return GeneratorSymbol("tau", (k,))


def sigma(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("sigma", (i,))


_LETTER_RE = re.compile(r"^(p|x|y|tau|t|sigma)\((\d+(?:,\d+)*)\)(\^-1)?$")


@dataclass(frozen=True)
class SWord:
    """A signed word over the symbolic alphabet, living over n caps."""

    n: int
    letters: tuple[tuple[GeneratorSymbol, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((s, g) for s, g in self.letters))
        for sym, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"sign must be +-1, got {sign}")
            if sym.max_cap() > self.n:
                raise ValueError(f"symbol {sym.format()} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: SWord) -> SWord:
        if self.n != other.n:
            raise ValueError("cannot concatenate words over different n")
        return SWord(self.n, self.letters + other.letters)

    def inverse(self) -> SWord:
        return SWord(self.n, tuple((s, -g) for s, g in reversed(self.letters)))

    def free_reduced(self) -> SWord:
        stack: list[tuple[GeneratorSymbol, int]] = []
        for sym, sign in self.letters:
            if stack and stack[-1] == (sym, -sign):
                stack.pop()
            else:
                stack.append((sym, sign))
        return SWord(self.n, tuple(stack))

    def kinds(self) -> set[str]:
        return {sym.kind for sym, _ in self.letters}

    def is_over(self, kinds) -> bool:
        return self.kinds() <= set(kinds)

    def format(self) -> str:
        return " ".join(sym.format(sign) for sym, sign in self.letters)

    @classmethod
    def parse(cls, text: str, n: int) -> SWord:
        letters = []
        for token in text.split():
            m = _LETTER_RE.match(token)
            if not m:
                raise ValueError(f"cannot parse letter {token!r}")
            kind, idx, inv = m.groups()
            sym = GeneratorSymbol(kind, tuple(int(v) for v in idx.split(",")))
            letters.append((sym, -1 if inv else 1))
        return cls(n, tuple(letters))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "letters": [
                {"kind": sym.kind, "indices": list(sym.indices), "sign": sign}
                for sym, sign in self.letters
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> SWord:
        letters = tuple(
            (GeneratorSymbol(l["kind"], tuple(l["indices"])), int(l["sign"]))
            for l in obj["letters"]
        )
        return cls(int(obj["n"]), letters)


def word(n: int, *letters) -> SWord:
    """Convenience constructor; bare symbols mean positive letters."""
    out = []
    for item in letters:
        if isinstance(item, GeneratorSymbol):
            out.append((item, 1))
        else:
            out.append((item[0], item[1]))
    return SWord(n, tuple(out))
