"""
Temperley-Lieb action on crossingless matchings, over exact Laurent polynomials.

Each Artin letter acts on formal linear combinations of crossingless
perfect matchings of the points 1..2n by Kauffman smoothing::

    sigma_k      ->  A * id + A^-1 * e_k
    sigma_k^-1   ->  A^-1 * id + A * e_k

where ``e_k`` reconnects the points k, k+1.  If a matching already pairs
k with k+1, ``e_k`` scales it by the loop value ``-A^2 - A^-2``; otherwise
it re-pairs (k, k+1) and the two former partners.  Coefficients are
Laurent polynomials in A with arbitrary-precision integer coefficients;
no floating point is used anywhere.

The cap state is the matching {(1,2), (3,4), ...}.  A braid that fixes
the cap tangle up to isotopy sends the cap state to ``(-A^-3)^m`` times
itself, the exponent absorbing framing kinks; the test for this is a
necessary (not sufficient) condition for membership in the cap
stabilizer subgroup.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from purehilden.braids import BraidWord


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial in A, as a map from exponent to integer coefficient."""

    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c != 0)))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls.from_dict({exponent: coefficient})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls.monomial(0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        coeffs = dict(self.terms)
        for e, c in other.terms:
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPoly.from_dict(coeffs)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        coeffs: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(coeffs)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.terms:
            power = "" if e == 0 else ("A" if e == 1 else f"A^{e}")
            if power and abs(c) == 1:
                chunks.append(("-" if c < 0 else "") + power)
            else:
                chunks.append(f"{c}{power and '*' + power}")
        return " + ".join(chunks).replace("+ -", "- ")


A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
LOOP = LaurentPoly.from_dict({2: -1, -2: -1})
KINK = LaurentPoly.monomial(-3, -1)  # value of an absorbed positive crossing


@dataclass(frozen=True)
class Matching:
    """A crossingless perfect matching of the points 1..2n, as sorted pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        points = [pt for p in pairs for pt in p]
        if sorted(points) != list(range(1, 2 * len(pairs) + 1)):
            raise ValueError(f"{pairs} is not a perfect matching of 1..{2*len(pairs)}")
        for a, b in pairs:
            for c, d in pairs:
                if a < c < b < d:
                    raise ValueError(f"pairs ({a},{b}) and ({c},{d}) cross")

    @property
    def n(self) -> int:
        return len(self.pairs)

    def partner(self, point: int) -> int:
        for a, b in self.pairs:
            if a == point:
                return b
            if b == point:
                return a
        raise ValueError(f"point {point} out of range")

    def apply_e(self, k: int) -> tuple[Matching, bool]:
        """Result of the reconnection e_k, and whether a closed loop formed."""
        a = self.partner(k)
        if a == k + 1:
            return self, True
        b = self.partner(k + 1)
        others = tuple(p for p in self.pairs if k not in p and k + 1 not in p)
        return Matching(others + ((k, k + 1), (a, b))), False


@functools.lru_cache(maxsize=None)
def matchings(n: int) -> tuple[Matching, ...]:
    """All crossingless perfect matchings of 2n points, deterministically ordered."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(Matching(pairs) for pairs in _enumerate_pairings(tuple(range(1, 2 * n + 1))))


def _enumerate_pairings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for split in range(1, len(points), 2):
        inner, outer = points[1:split], points[split + 1 :]
        for left in _enumerate_pairings(inner):
            for right in _enumerate_pairings(outer):
                yield ((first, points[split]),) + left + right


def cap_matching(n: int) -> Matching:
    return Matching(tuple((2 * k - 1, 2 * k) for k in range(1, n + 1)))


@dataclass(frozen=True)
class TLVector:
    """A formal linear combination of matchings with Laurent coefficients."""

    coeffs: tuple[tuple[Matching, LaurentPoly], ...]

    @classmethod
    def from_dict(cls, data: dict[Matching, LaurentPoly]) -> TLVector:
        cleaned = {m: c for m, c in data.items() if not c.is_zero()}
        return cls(tuple(sorted(cleaned.items(), key=lambda mc: mc[0].pairs)))

    @classmethod
    def basis(cls, m: Matching) -> TLVector:
        return cls.from_dict({m: LaurentPoly.one()})

    def as_dict(self) -> dict[Matching, LaurentPoly]:
        return dict(self.coeffs)

    def support_size(self) -> int:
        return len(self.coeffs)

    def scaled(self, factor: LaurentPoly) -> TLVector:
        return TLVector.from_dict({m: c * factor for m, c in self.coeffs})

    def __add__(self, other: TLVector) -> TLVector:
        data = self.as_dict()
        for m, c in other.coeffs:
            data[m] = data.get(m, LaurentPoly.zero()) + c
        return TLVector.from_dict(data)


def cap_state(n: int) -> TLVector:
    """Unit coefficient on the matching {(1,2), (3,4), ..., (2n-1,2n)}."""
    return TLVector.basis(cap_matching(n))


def skein_act_letter(v: TLVector, k: int, sign: int) -> TLVector:
    """Act by a single Artin letter of index k and the given sign."""
    if v.coeffs and not 1 <= k <= 2 * v.coeffs[0][0].n - 1:
        raise ValueError(f"generator index {k} out of range")
    ident, recon = (A, A_INV) if sign > 0 else (A_INV, A)
    out: dict[Matching, LaurentPoly] = {}

    def accumulate(m: Matching, c: LaurentPoly):
        out[m] = out.get(m, LaurentPoly.zero()) + c

    for m, c in v.coeffs:
        accumulate(m, c * ident)
        e_m, closed = m.apply_e(k)
        factor = recon * LOOP if closed else recon
        accumulate(e_m, c * factor)
    return TLVector.from_dict(out)


def act(w: BraidWord, v: TLVector) -> TLVector:
    """Apply a braid word left to right; the empty word is the identity."""
    if v.coeffs and w.strands != 2 * v.coeffs[0][0].n:
        raise ValueError(
            f"word on {w.strands} strands cannot act on matchings of {2*v.coeffs[0][0].n} points"
        )
    for g in w.letters:
        v = skein_act_letter(v, abs(g), 1 if g > 0 else -1)
    return v


@dataclass(frozen=True)
class CapTestResult:
    passed: bool
    writhe: int | None
    support_size: int

    def to_json(self) -> dict:
        return {
            "result": "pass" if self.passed else "fail",
            "writhe": self.writhe,
            "support_size": self.support_size,
        }


def hilden_cap_test(w: BraidWord) -> CapTestResult:
    """Whether ``w`` sends the cap state to ``(-A^-3)^m`` times itself.

    Passing is a necessary condition for stabilizing the cap tangle; the
    returned exponent m is the framing writhe picked up along the way.
    """
    if w.strands % 2:
        raise ValueError("cap test needs an even strand count")
    n = w.strands // 2
    result = act(w, cap_state(n))
    support = result.support_size()
    if support != 1:
        return CapTestResult(False, None, support)
    (m, poly), = result.coeffs
    if m != cap_matching(n) or len(poly.terms) != 1:
        return CapTestResult(False, None, support)
    (exponent, coefficient), = poly.terms
    if exponent % 3:
        return CapTestResult(False, None, support)
    writhe = -exponent // 3
    if coefficient != (-1) ** writhe:
        return CapTestResult(False, None, support)
    return CapTestResult(True, writhe, support)
