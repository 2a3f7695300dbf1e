"""Conflicting obligations of increasing strength, checked at n = 1 and n = 2.

Illustration only; nothing here is part of the test suite. Read s as "save
the child" and q as an arbitrary obligation. Requires the swapdeon module on
PYTHONPATH (build/python, or an installed wheel).
"""

import json
import pathlib

import swapdeon

MAX_WORLDS = 3


def main():
    queries = json.loads((pathlib.Path(__file__).with_name("dilemma.json")).read_text())
    for q in queries:
        v = swapdeon.find_countermodel(
            q["logic"], q["premises"], q["conclusion"], n=q.get("n"), max_worlds=MAX_WORLDS
        )
        explodes = v["verdict"] == "no_counterexample_within_bounds"
        gamma = ", ".join(q["premises"])
        status = "no countermodel up to %d worlds (bounded, not a proof)" % MAX_WORLDS if explodes else (
            "no explosion (countermodel at %s)" % v["world"]
        )
        print("%-22s {%s} |- %s: %s" % (q["name"], gamma, q["conclusion"], status))
        print("%-22s %s" % ("", q["note"]))


if __name__ == "__main__":
    main()
