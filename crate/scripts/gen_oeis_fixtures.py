#!/usr/bin/env python3
"""Regenerate crates/mmp132/fixtures/oeis/*.json from each sequence's definition."""

import json
import pathlib

TERMS = 25
OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "mmp132" / "fixtures" / "oeis"


def linear(init, coeffs, count=TERMS):
    a = list(init)
    while len(a) < count:
        a.append(sum(c * a[-1 - i] for i, c in enumerate(coeffs)))
    return a[:count]


def a000129():
    return linear([0, 1], [2, 1])


def a052963():
    return linear([1, 2, 5], [3, 0, -1])


def a077938():
    return linear([1, 2, 5], [2, 1, 2])


def a000337():
    return [(n - 1) * 2**n + 1 for n in range(TERMS)]


def a083329():
    return [1] + [3 * 2 ** (n - 1) - 1 for n in range(1, TERMS)]


def a116731():
    # Terms follow n(n^2 - 3n + 5)/3 for n >= 1.
    return [1] + [n * (n * n - 3 * n + 5) // 3 for n in range(1, TERMS)]


SEQUENCES = {
    "A000129": a000129,
    "A052963": a052963,
    "A077938": a077938,
    "A000337": a000337,
    "A083329": a083329,
    "A116731": a116731,
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for ident, gen in SEQUENCES.items():
        data = {"id": ident, "offset": 0, "terms": [str(v) for v in gen()]}
        (OUT / f"{ident}.json").write_text(json.dumps(data) + "\n")
        print(ident, data["terms"][:10])


if __name__ == "__main__":
    main()
