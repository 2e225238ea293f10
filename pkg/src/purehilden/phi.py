"""
The action of framed-braid letters on words over the presentation alphabet.

Each letter sigma_i or tau_j (or an inverse) acts as an automorphism of
the free group on the p/x/y/t symbols, given by an explicit table on
positive letters; images of inverse symbol letters are the formal
inverses of the images.  Inverse framed letters carry their own table
rather than being derived, and ``check_phi_inverse`` confirms the two
tables are mutually inverse.

At the braid level the action is conjugation: ``phi(g, w)`` realizes to
the same braid as ``g w g^-1`` (property A).  Words over p and t only
stay over p and t (property B).  Images of the edge words land back in
the edge family up to p/t factors on both sides (property C); the
shipped case fixtures instantiate every row of that case analysis.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources

from purehilden.braids import braids_equal, concat, invert
from purehilden.catalog import realize
from purehilden.symbols import (
    STAB_KINDS,
    GeneratorSymbol,
    SWord,
    p,
    t,
    word,
    x,
    y,
)


class FramedWord(SWord):
    """An SWord restricted to the framed letters sigma and tau."""

    def __post_init__(self):
        super().__post_init__()
        for sym, _ in self.letters:
            if sym.kind not in ("sigma", "tau"):
                raise ValueError(f"framed word cannot contain {sym.format()}")


def _conj(outer: GeneratorSymbol, inner: GeneratorSymbol, n: int) -> SWord:
    return SWord(n, ((outer, 1), (inner, 1), (outer, -1)))


def _phi_sigma(m: int, s: GeneratorSymbol, n: int) -> SWord:
    """Image of a positive letter under the positive sigma_m."""
    if s.kind == "t":
        (j,) = s.indices
        if j == m:
            return word(n, t(m + 1))
        if j == m + 1:
            return word(n, t(m))
        return word(n, s)
    k, l = s.indices
    alpha = s.kind
    if m not in (k - 1, k, l - 1, l):
        return word(n, s)
    if m == k and l == k + 1:
        if alpha == "p":
            return word(n, s)
        if alpha == "x":
            return SWord(n, ((t(l), -1), (y(k, l), 1), (t(l), 1)))
        return word(n, x(k, l))
    if m == k - 1:
        return _conj(p(k - 1, k), GeneratorSymbol(alpha, (k - 1, l)), n)
    if m == k:
        return word(n, GeneratorSymbol(alpha, (k + 1, l)))
    if m == l - 1:
        return _conj(p(l - 1, l), GeneratorSymbol(alpha, (k, l - 1)), n)
    return word(n, GeneratorSymbol(alpha, (k, l + 1)))


def _phi_sigma_inv(m: int, s: GeneratorSymbol, n: int) -> SWord:
    """Image of a positive letter under sigma_m^-1, from its own table."""
    if s.kind == "t":
        (j,) = s.indices
        if j == m:
            return word(n, t(m + 1))
        if j == m + 1:
            return word(n, t(m))
        return word(n, s)
    k, l = s.indices
    alpha = s.kind
    if m not in (k - 1, k, l - 1, l):
        return word(n, s)
    if m == k and l == k + 1:
        if alpha == "p":
            return word(n, s)
        if alpha == "x":
            return word(n, y(k, l))
        return SWord(n, ((t(k), 1), (x(k, l), 1), (t(k), -1)))
    if m == k - 1:
        return word(n, GeneratorSymbol(alpha, (k - 1, l)))
    if m == k:
        sym = GeneratorSymbol(alpha, (k + 1, l))
        return SWord(n, ((p(k, k + 1), -1), (sym, 1), (p(k, k + 1), 1)))
    if m == l - 1:
        return word(n, GeneratorSymbol(alpha, (k, l - 1)))
    sym = GeneratorSymbol(alpha, (k, l + 1))
    return SWord(n, ((p(l, l + 1), -1), (sym, 1), (p(l, l + 1), 1)))


def _phi_tau(m: int, s: GeneratorSymbol, n: int, inverse: bool) -> SWord:
    if s.kind in ("p", "t"):
        return word(n, s)
    k, l = s.indices
    moving = k if s.kind == "x" else l
    if m != moving:
        return word(n, s)
    if inverse:
        return SWord(n, ((p(k, l), 1), (s, -1)))
    return SWord(n, ((s, -1), (p(k, l), 1)))


def phi_letter(g: GeneratorSymbol, g_sign: int, s: GeneratorSymbol,
               s_sign: int, n: int) -> SWord:
    """Image of the signed symbol letter under one signed framed letter."""
    if g.kind not in ("sigma", "tau"):
        raise ValueError(f"{g.format()} is not a framed letter")
    if g.max_cap() > n or s.max_cap() > n:
        raise ValueError("letter out of range for n")
    (m,) = g.indices
    if g.kind == "sigma":
        image = _phi_sigma(m, s, n) if g_sign > 0 else _phi_sigma_inv(m, s, n)
    else:
        image = _phi_tau(m, s, n, inverse=g_sign < 0)
    return image if s_sign > 0 else image.inverse()


def phi(g: SWord, w: SWord) -> SWord:
    """Apply a framed word letter by letter, rightmost letter first."""
    if g.n != w.n:
        raise ValueError("framed word and target live over different n")
    w = w.free_reduced()
    for sym, sign in reversed(g.letters):
        out: list[tuple[GeneratorSymbol, int]] = []
        for s, s_sign in w.letters:
            out.extend(phi_letter(sym, sign, s, s_sign, w.n).letters)
        w = SWord(w.n, tuple(out)).free_reduced()
    return w


def framed_to_sword(g: SWord) -> SWord:
    return SWord(g.n, g.letters)


def check_property_A(g: SWord, w: SWord) -> bool:
    """Braid-level conjugation: phi(g, w) equals g w g^-1."""
    image = realize(phi(g, w))
    gb = realize(g)
    return braids_equal(image, concat(concat(gb, realize(w)), invert(gb)))


def check_property_B(g: SWord, h: SWord) -> bool:
    """Words over p and t stay over p and t, as pure syntax."""
    if not h.is_over(STAB_KINDS):
        raise ValueError(f"{h.format()} is not a word over p and t")
    return phi(g, h).is_over(STAB_KINDS)


def check_phi_inverse(g: GeneratorSymbol, n: int) -> bool:
    """The positive and inverse tables undo each other on every letter."""
    fwd = SWord(n, ((g, 1),))
    bwd = SWord(n, ((g, -1),))
    for s in _all_letters(n):
        target = word(n, s)
        if phi(fwd, phi(bwd, target)) != target:
            return False
        if phi(bwd, phi(fwd, target)) != target:
            return False
    return True


def check_inverse_squared(m: int, kind: str, s: GeneratorSymbol, n: int) -> bool:
    """The square of an inverse framed letter acts as a p- or t-conjugation."""
    if kind == "sigma":
        g = SWord(n, ((GeneratorSymbol("sigma", (m,)), -1),) * 2)
        c = p(m, m + 1)
    elif kind == "tau":
        g = SWord(n, ((GeneratorSymbol("tau", (m,)), -1),) * 2)
        c = t(m)
    else:
        raise ValueError(f"kind must be sigma or tau, got {kind!r}")
    conjugated = SWord(n, ((c, -1), (s, 1), (c, 1)))
    return braids_equal(realize(phi(g, word(n, s))), realize(conjugated))


def _all_letters(n: int) -> list[GeneratorSymbol]:
    letters = [GeneratorSymbol(kind, pair) for kind in ("p", "x", "y")
               for pair in itertools.combinations(range(1, n + 1), 2)]
    letters += [t(k) for k in range(1, n + 1)]
    return letters


@dataclass(frozen=True)
class PhiCase:
    """One row of the edge-image case analysis, at a concrete instantiation."""

    n: int
    g: SWord
    r: SWord
    h1: SWord
    r_target: SWord
    h2: SWord
    paper_case: str

    def __post_init__(self):
        for h in (self.h1, self.h2):
            if not h.is_over(STAB_KINDS):
                raise ValueError(f"conjugating word {h.format()} must be over p and t")

    @classmethod
    def from_json(cls, obj: dict) -> PhiCase:
        n = int(obj["n"])
        return cls(
            n=n,
            g=SWord.parse(obj["g"], n),
            r=SWord.parse(obj["r"], n),
            h1=SWord.parse(obj["h1"], n),
            r_target=SWord.parse(obj["r_target"], n),
            h2=SWord.parse(obj["h2"], n),
            paper_case=str(obj["paper_case"]),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "g": self.g.format(),
            "r": self.r.format(),
            "h1": self.h1.format(),
            "r_target": self.r_target.format(),
            "h2": self.h2.format(),
            "paper_case": self.paper_case,
        }


def check_property_C_case(case: PhiCase) -> bool:
    """The image of the edge word is h1 * target * h2 at the braid level."""
    image = realize(phi(case.g, case.r))
    expected = realize(case.h1 * case.r_target * case.h2)
    return braids_equal(image, expected)


def load_phi_cases() -> list[PhiCase]:
    """The shipped case fixtures, one per row of the case analysis."""
    data = json.loads(
        resources.files("purehilden.fixtures").joinpath("phi_cases.json").read_text()
    )
    return [PhiCase.from_json(obj) for obj in data]


def check_property_D_weak(n: int, letters=None) -> list[str]:
    """Braid-level equality of the images of both sides of every relation.

    Returns descriptions of any failures; sound because equality in the
    presented group implies braid equality.
    """
    from purehilden.catalog import framed_letters
    from purehilden.relations import relation_instances

    failures = []
    for g_sym in letters if letters is not None else framed_letters(n):
        g = SWord(n, ((g_sym, 1),))
        for inst in relation_instances(n):
            if not braids_equal(realize(phi(g, inst.lhs)), realize(phi(g, inst.rhs))):
                failures.append(f"{g_sym.format()} on {inst.describe()}")
    return failures
