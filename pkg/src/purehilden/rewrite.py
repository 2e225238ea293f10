"""
A checker for single-relation derivations in the presented group.

A step names one relation instance (schema, indices, symbol choice), a
direction, an optional formal inversion, and a position.  Applying it
inserts ``replacement * matched^-1`` at that position and freely
reduces; this is exactly one application of the congruence generated by
the relations, and plain subword replacement is the special case where
the matched side cancels in full.  A step whose insertion does not
cancel a single letter against the host word is rejected, so scripts
cannot smuggle in no-op padding.  Cyclic variants of a relation are
never applied implicitly: conjugated uses appear as their own steps at
explicit positions.

A script replays a chain of such steps from a start word and must land
on the stated end word letter for letter; on success the braid
realizations of the two ends are also compared as a semantic
cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from purehilden.braids import braids_equal
from purehilden.catalog import realize
from purehilden.relations import make_instance
from purehilden.symbols import SWord


class NoMatchError(Exception):
    """The relation side does not interact with the word at the position."""


class UnknownInstanceError(Exception):
    """The step names indices or symbols violating the schema side conditions."""


@dataclass(frozen=True)
class Step:
    schema: str
    indices: tuple[int, ...]
    symbols: tuple[str, ...]
    direction: str = "lr"
    pos: int = 0
    invert: bool = False

    def __post_init__(self):
        if self.direction not in ("lr", "rl"):
            raise ValueError(f"direction must be 'lr' or 'rl', got {self.direction!r}")

    def describe(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        syms = f"[{','.join(self.symbols)}]" if self.symbols else ""
        inv = "^-1" if self.invert else ""
        return f"{self.schema}({idx}){syms}{inv} {self.direction}@{self.pos}"

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "indices": list(self.indices),
            "symbols": list(self.symbols),
            "dir": self.direction,
            "pos": self.pos,
            "invert": self.invert,
        }

    @classmethod
    def from_json(cls, obj: dict) -> Step:
        return cls(
            schema=str(obj["schema"]),
            indices=tuple(int(v) for v in obj["indices"]),
            symbols=tuple(str(s) for s in obj.get("symbols", [])),
            direction=str(obj.get("dir", "lr")),
            pos=int(obj["pos"]),
            invert=bool(obj.get("invert", False)),
        )


def apply_step(w: SWord, step: Step) -> SWord:
    """One relation application at the step's position, freely reduced."""
    try:
        instance = make_instance(step.schema, step.indices, step.symbols, w.n)
    except ValueError as exc:
        raise UnknownInstanceError(str(exc)) from exc
    matched, replacement = instance.lhs, instance.rhs
    if step.direction == "rl":
        matched, replacement = replacement, matched
    if step.invert:
        matched, replacement = matched.inverse(), replacement.inverse()
    if not 0 <= step.pos <= len(w):
        raise NoMatchError(f"position {step.pos} outside word of length {len(w)}")
    relator = (replacement * matched.inverse()).free_reduced()
    prefix = SWord(w.n, w.letters[: step.pos])
    suffix = SWord(w.n, w.letters[step.pos :])
    result = (prefix * relator * suffix).free_reduced()
    if len(result) == len(w) + len(relator):
        raise NoMatchError(
            f"{step.describe()} does not touch the word {w.format()!r}"
        )
    return result


class DerivationError(Exception):
    def __init__(self, step_index: int | None, reason: str):
        where = "end" if step_index is None else f"step {step_index}"
        super().__init__(f"derivation failed at {where}: {reason}")
        self.step_index = step_index
        self.reason = reason


@dataclass(frozen=True)
class DerivationScript:
    n: int
    anchor: str
    start: SWord
    end: SWord
    steps: tuple[Step, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "anchor": self.anchor,
            "start": self.start.format(),
            "end": self.end.format(),
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, obj: dict) -> DerivationScript:
        n = int(obj["n"])
        return cls(
            n=n,
            anchor=str(obj.get("anchor", "")),
            start=SWord.parse(obj["start"], n),
            end=SWord.parse(obj["end"], n),
            steps=tuple(Step.from_json(s) for s in obj.get("steps", [])),
        )

    @classmethod
    def load(cls, path) -> DerivationScript:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def check_derivation(script: DerivationScript) -> None:
    """Replay the script; raise DerivationError on the first failure."""
    current = script.start.free_reduced()
    for index, step in enumerate(script.steps):
        try:
            current = apply_step(current, step)
        except (NoMatchError, UnknownInstanceError) as exc:
            raise DerivationError(index, str(exc)) from exc
    target = script.end.free_reduced()
    if current.letters != target.letters:
        raise DerivationError(
            None,
            f"replay ended at {current.format()!r}, expected {target.format()!r}",
        )
    if not braids_equal(realize(script.start), realize(script.end)):
        raise DerivationError(None, "start and end realize to different braids")


def shipped_scripts() -> dict[str, DerivationScript]:
    """All derivation fixtures bundled with the package, by stem name."""
    out = {}
    root = resources.files("purehilden.fixtures")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.startswith("script_") and entry.name.endswith(".json"):
            script = DerivationScript.from_json(json.loads(entry.read_text()))
            out[entry.name[len("script_") : -len(".json")]] = script
    return out


def find_step(current: SWord, target: SWord, schema: str,
              candidates) -> Step | None:
    """Search for a single step of the given schema sending current to target.

    ``candidates`` is an iterable of (indices, symbols) pairs to try;
    used by the fixture authoring tools, not by the checker itself.
    """
    target = target.free_reduced()
    for indices, symbols in candidates:
        for direction in ("lr", "rl"):
            for inv in (False, True):
                for pos in range(len(current) + 1):
                    step = Step(schema, indices, symbols, direction, pos, inv)
                    try:
                        if apply_step(current, step).letters == target.letters:
                            return step
                    except (NoMatchError, UnknownInstanceError):
                        continue
    return None


def search_chain(start: SWord, end: SWord, instances, max_depth: int = 6,
                 max_frontier: int = 4000) -> list[Step] | None:
    """Bounded breadth-first search for a chain of relation applications.

    An authoring aid only: acceptance rests on replaying shipped scripts,
    never on this search.
    """
    start = start.free_reduced()
    goal = end.free_reduced().letters
    if start.letters == goal:
        return []
    frontier: list[tuple[SWord, list[Step]]] = [(start, [])]
    seen = {start.letters}
    for _ in range(max_depth):
        next_frontier: list[tuple[SWord, list[Step]]] = []
        for current, path in frontier:
            for inst in instances:
                for direction in ("lr", "rl"):
                    for inv in (False, True):
                        for pos in range(len(current) + 1):
                            step = Step(inst.schema, inst.indices, inst.symbols,
                                        direction, pos, inv)
                            try:
                                nxt = apply_step(current, step)
                            except NoMatchError:
                                continue
                            if nxt.letters in seen:
                                continue
                            if nxt.letters == goal:
                                return path + [step]
                            seen.add(nxt.letters)
                            next_frontier.append((nxt, path + [step]))
                            if len(next_frontier) >= max_frontier:
                                break
        frontier = next_frontier
        if not frontier:
            break
    return None
