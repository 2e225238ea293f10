"""
Instantiation of the relation schemas over a given number of caps.

Nine schemas.  Four commute a pair or t-twist past another letter
(C-pt, C-tt, C-xt, C-yt), three commute loop generators whose index
pairs are unlinked, share a point, or are linked (C1, C2, C3), and two
mix a loop with the twist of its own moving foot (M-x, M-y).  For C2 the
admissible symbol triples depend on which cyclic rotation of the sorted
index triple is used; the three admissible sets of eight triples each
are stored as data and independently re-derivable by brute force (see
``verify.bruteforce_c2``).
"""

from __future__ import annotations

from dataclasses import dataclass

from purehilden.symbols import GeneratorSymbol, SWord, p, t, word, x, y

SCHEMAS = ("C-pt", "C-tt", "C-xt", "C-yt", "C1", "C2", "C3", "M-x", "M-y")

ORDER_CLASSES = ("i<j<k", "j<k<i", "k<i<j")

_C2_TABLE: dict[str, frozenset[tuple[str, str, str]]] = {
    "i<j<k": frozenset(
        [
            ("p", "p", "p"), ("p", "y", "y"), ("x", "p", "p"), ("x", "x", "p"),
            ("x", "y", "y"), ("y", "p", "p"), ("y", "p", "x"), ("y", "y", "y"),
        ]
    ),
    "j<k<i": frozenset(
        [
            ("p", "p", "p"), ("p", "x", "y"), ("x", "p", "p"), ("x", "p", "x"),
            ("x", "x", "y"), ("y", "p", "p"), ("y", "x", "y"), ("y", "y", "p"),
        ]
    ),
    "k<i<j": frozenset(
        [
            ("p", "p", "p"), ("p", "x", "x"), ("x", "p", "p"), ("x", "x", "x"),
            ("x", "y", "p"), ("y", "p", "p"), ("y", "p", "y"), ("y", "x", "x"),
        ]
    ),
}


def c2_triples(order_class: str) -> frozenset[tuple[str, str, str]]:
    """The eight admissible (alpha, beta, gamma) for the given order class."""
    if order_class not in _C2_TABLE:
        raise ValueError(f"unknown order class {order_class!r}")
    return _C2_TABLE[order_class]


def is_cyclically_ordered(indices: tuple[int, ...]) -> bool:
    """Whether some rotation of the tuple is strictly increasing."""
    if len(set(indices)) != len(indices):
        raise ValueError(f"indices must be distinct, got {indices}")
    start = indices.index(min(indices))
    rotated = indices[start:] + indices[:start]
    return all(a < b for a, b in zip(rotated, rotated[1:]))


def order_class(indices: tuple[int, int, int]) -> str:
    """Which role ordering a cyclically ordered triple (i, j, k) realizes."""
    i, j, k = indices
    if i < j < k:
        return "i<j<k"
    if j < k < i:
        return "j<k<i"
    if k < i < j:
        return "k<i<j"
    raise ValueError(f"{indices} is not cyclically ordered")


@dataclass(frozen=True)
class RelationInstance:
    """One instantiated relation, with both sides as SWords."""

    schema: str
    indices: tuple[int, ...]
    symbols: tuple[str, ...]
    lhs: SWord
    rhs: SWord

    def sort_key(self):
        return (SCHEMAS.index(self.schema), self.indices, self.symbols)

    def describe(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        syms = f" [{','.join(self.symbols)}]" if self.symbols else ""
        return f"{self.schema}({idx}){syms}"


def _commuting_instance(schema, indices, symbols, a, b, n) -> RelationInstance:
    return RelationInstance(schema, indices, symbols, word(n, a, b), word(n, b, a))


def make_instance(schema: str, indices: tuple[int, ...],
                  symbols: tuple[str, ...], n: int) -> RelationInstance:
    """Build one relation instance, validating the schema side conditions."""
    if schema == "C-pt":
        i, j, k = indices
        if not (1 <= i < j <= n and 1 <= k <= n):
            raise ValueError(f"bad C-pt indices {indices}")
        return _commuting_instance(schema, indices, (), p(i, j), t(k), n)
    if schema == "C-tt":
        i, j = indices
        if not 1 <= i < j <= n:
            raise ValueError(f"bad C-tt indices {indices}")
        return _commuting_instance(schema, indices, (), t(i), t(j), n)
    if schema == "C-xt":
        i, j, k = indices
        if not (1 <= i < j <= n and 1 <= k <= n and k != i):
            raise ValueError(f"bad C-xt indices {indices}")
        return _commuting_instance(schema, indices, (), x(i, j), t(k), n)
    if schema == "C-yt":
        i, j, k = indices
        if not (1 <= i < j <= n and 1 <= k <= n and k != j):
            raise ValueError(f"bad C-yt indices {indices}")
        return _commuting_instance(schema, indices, (), y(i, j), t(k), n)
    if schema == "C1":
        i, j, k, l = indices
        if not is_cyclically_ordered(indices):
            raise ValueError(f"C1 indices {indices} not cyclically ordered")
        a, b = symbols
        return _commuting_instance(
            schema, indices, symbols,
            GeneratorSymbol(a, (i, j)), GeneratorSymbol(b, (k, l)), n,
        )
    if schema == "C2":
        i, j, k = indices
        if not is_cyclically_ordered(indices):
            raise ValueError(f"C2 indices {indices} not cyclically ordered")
        a, b, c = symbols
        if symbols not in c2_triples(order_class(indices)):
            raise ValueError(f"C2 triple {symbols} not admissible for {indices}")
        sa = GeneratorSymbol(a, (i, j))
        sb = GeneratorSymbol(b, (i, k))
        sc = GeneratorSymbol(c, (j, k))
        return RelationInstance(
            schema, indices, symbols, word(n, sa, sb, sc), word(n, sb, sc, sa)
        )
    if schema == "C3":
        i, j, k, l = indices
        if not is_cyclically_ordered(indices):
            raise ValueError(f"C3 indices {indices} not cyclically ordered")
        a, b = symbols
        sa = GeneratorSymbol(a, (i, k))
        sb = GeneratorSymbol(b, (j, l))
        conj = ((p(j, k), 1), (sb, 1), (p(j, k), -1))
        lhs = SWord(n, ((sa, 1),) + conj)
        rhs = SWord(n, conj + ((sa, 1),))
        return RelationInstance(schema, indices, symbols, lhs, rhs)
    if schema == "M-x":
        i, j = indices
        if not 1 <= i < j <= n:
            raise ValueError(f"bad M-x indices {indices}")
        return RelationInstance(
            schema, indices, (),
            word(n, x(i, j), p(i, j), t(i)), word(n, p(i, j), t(i), x(i, j)),
        )
    if schema == "M-y":
        i, j = indices
        if not 1 <= i < j <= n:
            raise ValueError(f"bad M-y indices {indices}")
        return RelationInstance(
            schema, indices, (),
            word(n, y(i, j), p(i, j), t(j)), word(n, p(i, j), t(j), y(i, j)),
        )
    raise ValueError(f"unknown schema {schema!r}")


def edge_words(n: int) -> list[SWord]:
    """The edge-orbit representative words, closed under formal inversion.

    Four single-loop words per index pair and six two-loop words per
    index triple: for i < j the words x_ij, y_ij and their inverses, and
    for i < j < k the words x_ij x_ik, x_jk y_ij, y_ik y_jk and their
    inverses.
    """
    import itertools

    out: list[SWord] = []
    for i, j in _pairs(n):
        for sym in (x(i, j), y(i, j)):
            base = word(n, sym)
            out.extend([base, base.inverse()])
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        for pair in ((x(i, j), x(i, k)), (x(j, k), y(i, j)), (y(i, k), y(j, k))):
            base = word(n, *pair)
            out.extend([base, base.inverse()])
    return out


def _pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _cyclic_tuples(n, size):
    import itertools

    out = []
    for combo in itertools.combinations(range(1, n + 1), size):
        for r in range(size):
            out.append(combo[r:] + combo[:r])
    return out


def relation_instances(n: int, schemas=SCHEMAS) -> list[RelationInstance]:
    """Every instance of the requested schemas over n caps, sorted."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[RelationInstance] = []
    for schema in schemas:
        if schema == "C-pt":
            for i, j in _pairs(n):
                for k in range(1, n + 1):
                    out.append(make_instance(schema, (i, j, k), (), n))
        elif schema == "C-tt":
            for i, j in _pairs(n):
                out.append(make_instance(schema, (i, j), (), n))
        elif schema == "C-xt":
            for i, j in _pairs(n):
                for k in range(1, n + 1):
                    if k != i:
                        out.append(make_instance(schema, (i, j, k), (), n))
        elif schema == "C-yt":
            for i, j in _pairs(n):
                for k in range(1, n + 1):
                    if k != j:
                        out.append(make_instance(schema, (i, j, k), (), n))
        elif schema == "C1":
            for idx in _cyclic_tuples(n, 4):
                for a in "pxy":
                    for b in "pxy":
                        out.append(make_instance(schema, idx, (a, b), n))
        elif schema == "C2":
            for idx in _cyclic_tuples(n, 3):
                for triple in sorted(c2_triples(order_class(idx))):
                    out.append(make_instance(schema, idx, triple, n))
        elif schema == "C3":
            for idx in _cyclic_tuples(n, 4):
                for a in "pxy":
                    for b in "pxy":
                        out.append(make_instance(schema, idx, (a, b), n))
        elif schema in ("M-x", "M-y"):
            for i, j in _pairs(n):
                out.append(make_instance(schema, (i, j), (), n))
        else:
            raise ValueError(f"unknown schema {schema!r}")
    out.sort(key=RelationInstance.sort_key)
    return out
