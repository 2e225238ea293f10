#!/usr/bin/env python3
"""Regenerate the shipped JSON fixtures.

Two fixture families:

* ``phi_cases.json`` -- every row of the case analysis for the images of
  the edge words under single framed letters, instantiated at the
  smallest n admitting the index pattern.  Each case is verified as a
  braid equality before being written.

* ``script_*.json`` -- derivation scripts.  Each chain is given here as
  its sequence of intermediate words plus the schema cited for each
  hop; the concrete step (instance indices, direction, inversion,
  position) is recovered by search and the assembled script is replayed
  through the checker before being written.
"""

import json
import sys
from pathlib import Path

from purehilden.phi import PhiCase, check_property_C_case
from purehilden.relations import relation_instances
from purehilden.rewrite import DerivationScript, check_derivation, find_step
from purehilden.symbols import SWord

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "purehilden" / "fixtures"

# (label, n, framed letter, r, h1, target, h2)
PHI_CASES = [
    ("sigma before-first on xx", 4, "sigma(1)",
     "x(2,3) x(2,4)", "p(1,2)", "x(1,3) x(1,4)", "p(1,2)^-1"),
    ("sigma before-first on xy", 4, "sigma(1)",
     "x(3,4) y(2,3)", "p(1,2)", "x(3,4) y(1,3)", "p(1,2)^-1"),
    ("sigma before-first on yy", 4, "sigma(1)",
     "y(2,4) y(3,4)", "p(1,2)", "y(1,4) y(3,4)", "p(1,2)^-1"),
    ("sigma at-first adjacent on xx", 3, "sigma(1)",
     "x(1,2) x(1,3)", "t(2)^-1 p(2,3)^-1", "x(2,3) y(1,2)", "p(2,3) t(2)"),
    ("sigma at-first adjacent on xy", 3, "sigma(1)",
     "x(2,3) y(1,2)", "p(2,3)^-1", "x(1,2) x(1,3)", "p(2,3)"),
    ("sigma at-first adjacent on yy", 3, "sigma(1)",
     "y(1,3) y(2,3)", "", "y(1,3) y(2,3)", ""),
    ("sigma at-first separated on xx", 4, "sigma(1)",
     "x(1,3) x(1,4)", "", "x(2,3) x(2,4)", ""),
    ("sigma at-first separated on xy", 4, "sigma(1)",
     "x(3,4) y(1,3)", "", "x(3,4) y(2,3)", ""),
    ("sigma at-first separated on yy", 4, "sigma(1)",
     "y(1,4) y(3,4)", "", "y(2,4) y(3,4)", ""),
    ("sigma before-second on xx", 4, "sigma(2)",
     "x(1,3) x(1,4)", "p(2,3)", "x(1,2) x(1,4)", "p(2,3)^-1"),
    ("sigma before-second on xy", 4, "sigma(2)",
     "x(3,4) y(1,3)", "p(2,3)", "x(2,4) y(1,2)", "p(2,3)^-1"),
    ("sigma before-second on yy", 4, "sigma(2)",
     "y(1,4) y(3,4)", "p(2,3)", "y(1,4) y(2,4)", "p(2,3)^-1"),
    ("sigma at-second adjacent on xx", 3, "sigma(2)",
     "x(1,2) x(1,3)", "", "x(1,2) x(1,3)", ""),
    ("sigma at-second adjacent on xy", 3, "sigma(2)",
     "x(2,3) y(1,2)", "p(2,3)", "y(1,3) y(2,3)", "p(2,3)^-1"),
    ("sigma at-second adjacent on yy", 3, "sigma(2)",
     "y(1,3) y(2,3)", "", "x(2,3) y(1,2)", ""),
    ("sigma at-second separated on xx", 4, "sigma(2)",
     "x(1,2) x(1,4)", "", "x(1,3) x(1,4)", ""),
    ("sigma at-second separated on xy", 4, "sigma(2)",
     "x(2,4) y(1,2)", "", "x(3,4) y(1,3)", ""),
    ("sigma at-second separated on yy", 4, "sigma(2)",
     "y(1,4) y(2,4)", "", "y(1,4) y(3,4)", ""),
    ("sigma before-third on xx", 4, "sigma(3)",
     "x(1,2) x(1,4)", "p(3,4)", "x(1,2) x(1,3)", "p(3,4)^-1"),
    ("sigma before-third on xy", 4, "sigma(3)",
     "x(2,4) y(1,2)", "p(3,4)", "x(2,3) y(1,2)", "p(3,4)^-1"),
    ("sigma before-third on yy", 4, "sigma(3)",
     "y(1,4) y(2,4)", "p(3,4)", "y(1,3) y(2,3)", "p(3,4)^-1"),
    ("sigma at-third on xx", 4, "sigma(3)",
     "x(1,2) x(1,3)", "", "x(1,2) x(1,4)", ""),
    ("sigma at-third on xy", 4, "sigma(3)",
     "x(2,3) y(1,2)", "", "x(2,4) y(1,2)", ""),
    ("sigma at-third on yy", 4, "sigma(3)",
     "y(1,3) y(2,3)", "", "y(1,4) y(2,4)", ""),
    ("tau at-first on xx", 3, "tau(1)",
     "x(1,2) x(1,3)", "", "x(1,3)^-1 x(1,2)^-1", "p(1,2) p(1,3)"),
    ("tau at-second on xy", 3, "tau(2)",
     "x(2,3) y(1,2)", "", "y(1,2)^-1 x(2,3)^-1", "p(2,3) p(1,2)"),
    ("tau at-third on yy", 3, "tau(3)",
     "y(1,3) y(2,3)", "", "y(2,3)^-1 y(1,3)^-1", "p(1,3) p(2,3)"),
]

# (name, n, anchor, [words...], [schema per hop])
CHAINS = [
    ("eq8", 3, "two-loop word conjugates the left-block stabilizer word",
     ["x(1,2) x(1,3) p(1,2) p(1,3) t(1)",
      "x(1,2) x(1,3) p(1,3) p(2,3) p(1,2) p(2,3)^-1 t(1)",
      "x(1,2) x(1,3) p(1,3) p(2,3) p(1,2) t(1) p(2,3)^-1",
      "x(1,2) x(1,3) p(1,3) p(2,3) t(1) p(1,2) p(2,3)^-1",
      "x(1,2) x(1,3) p(1,3) t(1) p(2,3) p(1,2) p(2,3)^-1",
      "x(1,2) p(1,3) t(1) x(1,3) p(2,3) p(1,2) p(2,3)^-1",
      "x(1,2) p(1,3) t(1) p(2,3) p(1,2) x(1,3) p(2,3)^-1",
      "x(1,2) p(1,3) p(2,3) t(1) p(1,2) x(1,3) p(2,3)^-1",
      "x(1,2) p(1,3) p(2,3) p(1,2) t(1) x(1,3) p(2,3)^-1",
      "p(1,3) p(2,3) x(1,2) p(1,2) t(1) x(1,3) p(2,3)^-1",
      "p(1,3) p(2,3) p(1,2) t(1) x(1,2) x(1,3) p(2,3)^-1",
      "p(1,3) p(2,3) p(1,2) t(1) p(2,3)^-1 x(1,2) x(1,3)",
      "p(1,3) p(2,3) p(1,2) p(2,3)^-1 t(1) x(1,2) x(1,3)",
      "p(1,2) p(1,3) t(1) x(1,2) x(1,3)"],
     ["C2", "C-pt", "C-pt", "C-pt", "M-x", "C2", "C-pt", "C-pt",
      "C2", "M-x", "C2", "C-pt", "C2"]),
    ("eq9a", 4, "second loop letter passes the triple-product stabilizer word",
     ["x(1,3) p(1,4) p(2,4) p(3,4)",
      "p(1,4) p(3,4) x(1,3) p(3,4)^-1 p(2,4) p(3,4)",
      "p(1,4) p(3,4) x(1,3) p(2,3) p(2,4) p(2,3)^-1",
      "p(1,4) p(3,4) p(2,3) p(2,4) p(2,3)^-1 x(1,3)",
      "p(1,4) p(2,4) p(3,4) x(1,3)"],
     ["C2", "C2", "C3", "C2"]),
    ("eq9b", 4, "first loop letter passes the triple-product stabilizer word",
     ["x(1,2) p(1,4) p(2,4) p(3,4)",
      "p(1,4) p(2,4) x(1,2) p(3,4)",
      "p(1,4) p(2,4) p(3,4) x(1,2)"],
     ["C2", "C1"]),
    ("eq9", 4, "two-loop word conjugates the triple-product stabilizer word",
     ["x(1,2) x(1,3) p(1,4) p(2,4) p(3,4)",
      "x(1,2) p(1,4) p(3,4) x(1,3) p(3,4)^-1 p(2,4) p(3,4)",
      "x(1,2) p(1,4) p(3,4) x(1,3) p(2,3) p(2,4) p(2,3)^-1",
      "x(1,2) p(1,4) p(3,4) p(2,3) p(2,4) p(2,3)^-1 x(1,3)",
      "x(1,2) p(1,4) p(2,4) p(3,4) x(1,3)",
      "p(1,4) p(2,4) x(1,2) p(3,4) x(1,3)",
      "p(1,4) p(2,4) p(3,4) x(1,2) x(1,3)"],
     ["C2", "C2", "C3", "C2", "C2", "C1"]),
    ("face_triangle", 3, "triangular face boundary is freely trivial",
     ["x(1,3)^-1 x(1,2)^-1 x(1,2) x(1,3)", ""], []),
    ("face_rectangle", 4, "disjoint-pair rectangle boundary",
     ["x(3,4)^-1 x(1,2)^-1 x(3,4) x(1,2)", ""], ["C1"]),
    ("face_nested", 3, "nested rectangle boundary",
     ["x(1,3)^-1 x(1,2)^-1 x(2,3)^-1 x(1,2) x(1,3) x(2,3)", ""], ["C2"]),
    ("edge_image_sigma_adjacent_xx", 3,
     "image of the xx edge word under the adjacent block swap",
     ["t(2)^-1 y(1,2) t(2) x(2,3)",
      "t(2)^-1 y(1,2) p(2,3)^-1 x(2,3) p(2,3) t(2)",
      "t(2)^-1 p(2,3)^-1 p(1,3)^-1 y(1,2) p(1,3) x(2,3) p(2,3) t(2)",
      "t(2)^-1 p(2,3)^-1 x(2,3) y(1,2) p(2,3) t(2)"],
     ["M-x", "C2", "C2"]),
    ("edge_image_sigma_adjacent_xy", 3,
     "image of the xy edge word under the adjacent block swap",
     ["p(1,2) x(1,3) p(1,2)^-1 x(1,2)",
      "p(2,3)^-1 x(1,3) p(2,3) x(1,2)",
      "p(2,3)^-1 x(1,2) x(1,3) p(2,3)"],
     ["C2", "C2"]),
    ("edge_image_sigma_adjacent_yy", 3,
     "image of the yy edge word under the adjacent block swap",
     ["y(2,3) p(1,2) y(1,3) p(1,2)^-1",
      "y(1,3) y(2,3)"],
     ["C2"]),
    ("edge_image_tau_first_xx", 3, "image of the xx edge word under a half twist",
     ["x(1,2)^-1 p(1,2) x(1,3)^-1 p(1,3)",
      "x(1,2)^-1 p(2,3)^-1 x(1,3)^-1 p(2,3) p(1,2) p(1,3)",
      "x(1,3)^-1 x(1,2)^-1 p(1,2) p(1,3)"],
     ["C2", "C2"]),
    ("edge_image_tau_second_xy", 3, "image of the xy edge word under a half twist",
     ["x(2,3)^-1 p(2,3) y(1,2)^-1 p(1,2)",
      "x(2,3)^-1 p(1,3)^-1 y(1,2)^-1 p(1,3) p(2,3) p(1,2)",
      "y(1,2)^-1 x(2,3)^-1 p(2,3) p(1,2)"],
     ["C2", "C2"]),
    ("edge_image_tau_third_yy", 3, "image of the yy edge word under a half twist",
     ["y(1,3)^-1 p(1,3) y(2,3)^-1 p(2,3)",
      "y(1,3)^-1 p(1,2)^-1 y(2,3)^-1 p(1,2) p(1,3) p(2,3)",
      "y(2,3)^-1 y(1,3)^-1 p(1,3) p(2,3)"],
     ["C2", "C2"]),
    ("xt_commute_image_sigma_before_i", 3,
     "x-t commutation survives the block swap left of the pair",
     ["p(1,2) x(1,3) p(1,2)^-1 t(2)",
      "p(1,2) x(1,3) t(2) p(1,2)^-1",
      "p(1,2) t(2) x(1,3) p(1,2)^-1",
      "t(2) p(1,2) x(1,3) p(1,2)^-1"],
     ["C-pt", "C-xt", "C-pt"]),
    ("xt_commute_image_sigma_adjacent", 3,
     "x-t commutation survives the swap of the pair itself",
     ["t(2)^-1 y(1,2) t(2) t(3)",
      "t(2)^-1 y(1,2) t(3) t(2)",
      "t(2)^-1 t(3) y(1,2) t(2)",
      "t(3) t(2)^-1 y(1,2) t(2)"],
     ["C-tt", "C-yt", "C-tt"]),
    ("xt_commute_image_sigma_before_j", 3,
     "x-t commutation survives the block swap inside the pair",
     ["p(2,3) x(1,2) p(2,3)^-1 t(3)",
      "p(2,3) x(1,2) t(3) p(2,3)^-1",
      "p(2,3) t(3) x(1,2) p(2,3)^-1",
      "t(3) p(2,3) x(1,2) p(2,3)^-1"],
     ["C-pt", "C-xt", "C-pt"]),
    ("xt_commute_image_tau", 2,
     "x-t commutation survives the half twist of the moving cap",
     ["x(1,2)^-1 p(1,2) t(2)",
      "x(1,2)^-1 t(2) p(1,2)",
      "t(2) x(1,2)^-1 p(1,2)"],
     ["C-pt", "C-xt"]),
]


def build_phi_cases() -> list[PhiCase]:
    cases = []
    for label, n, g, r, h1, target, h2 in PHI_CASES:
        case = PhiCase(
            n=n,
            g=SWord.parse(g, n),
            r=SWord.parse(r, n),
            h1=SWord.parse(h1, n),
            r_target=SWord.parse(target, n),
            h2=SWord.parse(h2, n),
            paper_case=label,
        )
        if not check_property_C_case(case):
            raise SystemExit(f"case {label!r} fails the braid-level check")
        cases.append(case)
    return cases


def build_script(name, n, anchor, words, schemas) -> DerivationScript:
    parsed = [SWord.parse(w, n).free_reduced() for w in words]
    steps = []
    for hop, schema in enumerate(schemas):
        candidates = [(inst.indices, inst.symbols)
                      for inst in relation_instances(n, (schema,))]
        step = find_step(parsed[hop], parsed[hop + 1], schema, candidates)
        if step is None:
            raise SystemExit(
                f"{name}: no {schema} step found for hop {hop}: "
                f"{parsed[hop].format()!r} -> {parsed[hop + 1].format()!r}"
            )
        steps.append(step)
    script = DerivationScript(
        n=n, anchor=anchor,
        start=SWord.parse(words[0], n),
        end=SWord.parse(words[-1], n),
        steps=tuple(steps),
    )
    check_derivation(script)
    return script


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    cases = build_phi_cases()
    path = FIXTURES / "phi_cases.json"
    path.write_text(json.dumps([c.to_json() for c in cases], indent=1) + "\n")
    print(f"wrote {path.name}: {len(cases)} cases")
    for name, n, anchor, words, schemas in CHAINS:
        script = build_script(name, n, anchor, words, schemas)
        path = FIXTURES / f"script_{name}.json"
        path.write_text(json.dumps(script.to_json(), indent=1) + "\n")
        print(f"wrote {path.name}: {len(script.steps)} steps")
    return 0


if __name__ == "__main__":
    sys.exit(main())
