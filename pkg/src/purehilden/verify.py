"""
Verification suites over the realized presentation, with reportable results.

Every suite produces a Report: total checks, passes, and a failure list
sorted by (schema, indices, symbols) so identical inputs give identical
output modulo the timing field.  The relation suite runs three oracles
per instance -- induced permutations, the skein action on the cap
state, and the handle-reduction kernel -- and flags any disagreement
between them as an internal-consistency failure, distinct from an
honest relation failure.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from purehilden.braids import (
    BraidWord,
    BudgetExceededError,
    braids_equal,
    permutation_of,
)
from purehilden.catalog import (
    framed_letters,
    generating_set,
    realize,
    realize_symbol,
)
from purehilden.relations import (
    ORDER_CLASSES,
    RelationInstance,
    c2_triples,
    edge_words,
    relation_instances,
)
from purehilden.symbols import GeneratorSymbol, SWord, word
from purehilden.tl import TLVector, act, cap_state, hilden_cap_test, matchings


def worker_count() -> int:
    raw = os.environ.get("HF_WORKERS")
    if raw:
        workers = int(raw)
        if workers < 1:
            raise ValueError("HF_WORKERS must be at least 1")
        return workers
    return 1


@dataclass(frozen=True)
class Failure:
    schema: str
    indices: tuple[int, ...]
    symbols: tuple[str, ...]
    lhs: str
    rhs: str
    oracle: str

    def sort_key(self):
        return (self.schema, self.indices, self.symbols, self.oracle)

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "indices": list(self.indices),
            "symbols": list(self.symbols),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "oracle": self.oracle,
        }


@dataclass
class Report:
    suite: str
    n: int
    total: int
    failures: list[Failure]
    ms: int

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "total": self.total,
            "passed": self.passed,
            "failures": [f.to_json() for f in sorted(self.failures, key=Failure.sort_key)],
            "ms": self.ms,
        }

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"{self.suite}(n={self.n}): {self.passed}/{self.total} passed, {state} [{self.ms}ms]"


def _report(suite: str, n: int, total: int, failures, started: float) -> Report:
    ms = int((time.monotonic() - started) * 1000)
    return Report(suite, n, total, sorted(failures, key=Failure.sort_key), ms)


def _run_checks(items, check, workers: int):
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return [f for f in pool.map(check, items) if f is not None]
    return [f for f in map(check, items) if f is not None]


def check_instance(inst: RelationInstance, override=None) -> Failure | None:
    """Run all three oracles on one relation instance."""
    lhs, rhs = realize(inst.lhs, override), realize(inst.rhs, override)
    n = inst.lhs.n
    perm_ok = permutation_of(lhs) == permutation_of(rhs)
    tl_ok = act(lhs, cap_state(n)) == act(rhs, cap_state(n))
    try:
        kernel_ok = braids_equal(lhs, rhs)
    except BudgetExceededError as exc:
        raise BudgetExceededError(exc.budget, inst.describe()) from exc

    def fail(oracle):
        return Failure(inst.schema, inst.indices, inst.symbols,
                       inst.lhs.format(), inst.rhs.format(), oracle)

    if perm_ok and tl_ok and kernel_ok:
        return None
    if kernel_ok and not (perm_ok and tl_ok):
        return fail("internal-consistency")
    if not perm_ok:
        return fail("permutation")
    if not tl_ok:
        return fail("tl")
    return fail("handle-reduction")


def verify_relations(n: int, instances=None, workers: int | None = None,
                     override=None) -> Report:
    """Check every relation instance under all three oracles."""
    if instances is None:
        if not 2 <= n <= 6:
            raise ValueError("verify_relations supports 2 <= n <= 6")
        instances = relation_instances(n)
    started = time.monotonic()
    failures = _run_checks(
        instances,
        lambda inst: check_instance(inst, override),
        workers if workers is not None else worker_count(),
    )
    return _report("relations", n, len(instances), failures, started)


CLASS_REPRESENTATIVES = {"i<j<k": (1, 2, 3), "j<k<i": (3, 1, 2), "k<i<j": (2, 3, 1)}


def bruteforce_c2(n: int, workers: int | None = None,
                  override=None) -> dict[str, frozenset[tuple[str, str, str]]]:
    """Decide all 27 symbol triples per order class by braid equality.

    The triple (i, j, k) is instantiated on the fixed representative
    rotation of {1, 2, 3}; larger n just adds spectator caps.
    """
    if n < 3:
        raise ValueError("bruteforce_c2 needs n >= 3")

    def decide(job):
        cls, triple = job
        i, j, k = CLASS_REPRESENTATIVES[cls]
        a, b, c = triple
        sa = GeneratorSymbol(a, (i, j))
        sb = GeneratorSymbol(b, (i, k))
        sc = GeneratorSymbol(c, (j, k))
        lhs = realize(word(n, sa, sb, sc), override)
        rhs = realize(word(n, sb, sc, sa), override)
        # The skein action is a representation, so differing on any basis
        # matching certifies inequality before the kernel runs.  The cap
        # state alone cannot separate these (both sides stabilize it), so
        # the certificate probes the whole basis.
        if any(act(lhs, TLVector.basis(m)) != act(rhs, TLVector.basis(m))
               for m in matchings(n)):
            return cls, triple, False
        return cls, triple, braids_equal(lhs, rhs)

    jobs = [(cls, triple) for cls in ORDER_CLASSES
            for triple in itertools.product("pxy", repeat=3)]
    workers = workers if workers is not None else worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(decide, jobs))
    else:
        results = [decide(job) for job in jobs]
    out: dict[str, set] = {cls: set() for cls in ORDER_CLASSES}
    for cls, triple, holds in results:
        if holds:
            out[cls].add(triple)
    return {cls: frozenset(triples) for cls, triples in out.items()}


def c2_table_report(n: int, workers: int | None = None) -> Report:
    """Compare the brute-forced admissible triples against the stored table."""
    started = time.monotonic()
    found = bruteforce_c2(n, workers)
    failures = []
    for cls in ORDER_CLASSES:
        expected = c2_triples(cls)
        for triple in sorted(found[cls] - expected):
            failures.append(Failure("C2-table", CLASS_REPRESENTATIVES[cls], triple,
                                    cls, "unexpected pass", "handle-reduction"))
        for triple in sorted(expected - found[cls]):
            failures.append(Failure("C2-table", CLASS_REPRESENTATIVES[cls], triple,
                                    cls, "missing from brute force", "handle-reduction"))
    return _report("c2-table", n, 3 * 27, failures, started)


def purity_suite(n: int, workers: int | None = None) -> Report:
    """Every generator realizes to a pure braid; framed letters to block moves."""
    if n < 2:
        raise ValueError("purity_suite needs n >= 2")
    started = time.monotonic()
    checks = []
    for sym in generating_set(n):
        checks.append((sym, tuple(range(1, 2 * n + 1))))
    for sym in framed_letters(n):
        if sym.kind == "sigma":
            (i,) = sym.indices
            images = list(range(1, 2 * n + 1))
            images[2 * i - 2], images[2 * i] = images[2 * i], images[2 * i - 2]
            images[2 * i - 1], images[2 * i + 1] = images[2 * i + 1], images[2 * i - 1]
            checks.append((sym, tuple(images)))
        else:
            (j,) = sym.indices
            images = list(range(1, 2 * n + 1))
            images[2 * j - 2], images[2 * j - 1] = images[2 * j - 1], images[2 * j - 2]
            checks.append((sym, tuple(images)))

    def check(item):
        sym, expected = item
        got = permutation_of(realize_symbol(sym, n)).images
        if got != expected:
            return Failure("purity", sym.indices, (sym.kind,), sym.format(),
                           f"expected {expected}, got {got}", "permutation")
        return None

    failures = _run_checks(checks, check,
                           workers if workers is not None else worker_count())
    return _report("purity", n, len(checks), failures, started)


def membership_suite(n: int, workers: int | None = None, samples: int = 12,
                     seed: int = 2024) -> Report:
    """Cap test passes on generators, edge words, and products; controls fail."""
    if n < 2:
        raise ValueError("membership_suite needs n >= 2")
    started = time.monotonic()
    positives: list[tuple[str, BraidWord]] = []
    for sym in generating_set(n) + framed_letters(n):
        positives.append((sym.format(), realize_symbol(sym, n)))
    for w in edge_words(n):
        positives.append((w.format(), realize(w)))
    rng = random.Random(seed)
    gens = generating_set(n)
    for _ in range(samples):
        picks = [(rng.choice(gens), rng.choice((1, -1)))
                 for _ in range(rng.randint(2, 6))]
        sw = SWord(n, tuple(picks))
        positives.append((sw.format(), realize(sw)))

    # Controls: a bare half twist, a clasp of the feet of caps 1 and 2,
    # and a clasp reaching across one cap foot.
    negatives = [
        ("artin-2", BraidWord(2 * n, (2,))),
        ("artin-2-squared", BraidWord(2 * n, (2, 2))),
        ("foot-clasp", BraidWord(2 * n, (3, 2, 2, -3))),
    ]

    def check(item):
        kind, name, braid = item
        result = hilden_cap_test(braid)
        if kind == "positive" and not result.passed:
            return Failure("membership", (), (), name,
                           f"support {result.support_size}", "tl")
        if kind == "negative" and result.passed:
            return Failure("membership", (), (), name,
                           f"unexpected pass, writhe {result.writhe}", "tl")
        return None

    items = [("positive", name, braid) for name, braid in positives]
    items += [("negative", name, braid) for name, braid in negatives]
    failures = _run_checks(items, check,
                           workers if workers is not None else worker_count())
    return _report("membership", n, len(items), failures, started)


def phi_report(prop: str, n: int, workers: int | None = None,
               fixtures=None) -> Report:
    """Check one property of the framed action and report the outcome."""
    import json as _json
    from pathlib import Path

    from purehilden import phi as phimod

    started = time.monotonic()
    workers = workers if workers is not None else worker_count()
    letters = phimod._all_letters(n)
    framed = framed_letters(n)

    if prop == "A":
        items = [(g, sign, s) for g in framed for sign in (1, -1) for s in letters]

        def check(item):
            g, sign, s = item
            gw = SWord(n, ((g, sign),))
            if not phimod.check_property_A(gw, word(n, s)):
                return Failure("phi-A", g.indices + s.indices,
                               (g.kind, s.kind), GeneratorSymbol.format(g, sign),
                               s.format(), "handle-reduction")
            return None
    elif prop == "B":
        stab = [s for s in letters if s.kind in ("p", "t")]
        items = [(g, sign, s) for g in framed for sign in (1, -1) for s in stab]

        def check(item):
            g, sign, s = item
            gw = SWord(n, ((g, sign),))
            if not phimod.check_property_B(gw, word(n, s)):
                return Failure("phi-B", g.indices + s.indices,
                               (g.kind, s.kind), GeneratorSymbol.format(g, sign),
                               s.format(), "syntactic")
            return None
    elif prop == "inv":
        items = framed

        def check(g):
            if not phimod.check_phi_inverse(g, n):
                return Failure("phi-inv", g.indices, (g.kind,), g.format(),
                               "", "free-reduction")
            return None
    elif prop == "sq":
        items = [(kind, m, s)
                 for kind, top in (("sigma", n - 1), ("tau", n))
                 for m in range(1, top + 1) for s in letters]

        def check(item):
            kind, m, s = item
            if not phimod.check_inverse_squared(m, kind, s, n):
                return Failure("phi-sq", (m,) + s.indices, (kind, s.kind),
                               f"{kind}({m})^-2", s.format(), "handle-reduction")
            return None
    elif prop == "C":
        if fixtures is not None:
            data = _json.loads((Path(fixtures) / "phi_cases.json").read_text())
            items = [phimod.PhiCase.from_json(obj) for obj in data]
        else:
            items = phimod.load_phi_cases()

        def check(case):
            if not phimod.check_property_C_case(case):
                return Failure("phi-C", (), (), case.paper_case,
                               case.r.format(), "handle-reduction")
            return None
    else:
        raise ValueError(f"unknown property {prop!r}")

    failures = _run_checks(items, check, workers)
    return _report(f"phi-{prop}", n, len(items), failures, started)


def edge_family_closure(n: int) -> Report:
    """The edge family is closed under formal inversion, syntactically."""
    if n < 3:
        raise ValueError("edge_family_closure needs n >= 3")
    started = time.monotonic()
    family = edge_words(n)
    members = {w.free_reduced().letters for w in family}
    failures = []
    for w in family:
        inv = w.inverse().free_reduced()
        if inv.letters not in members:
            failures.append(Failure("closure", (), (), w.format(),
                                    f"inverse {inv.format()} missing", "syntactic"))
    return _report("edge-closure", n, len(family), failures, started)
