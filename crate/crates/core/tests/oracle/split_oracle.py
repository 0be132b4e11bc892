#!/usr/bin/env python3
"""Brute-force oracle for the seven-segment split tables and series goldens.

Independent of the Rust implementation: glyphs are built geometrically as
sets of unit-square edges, generated from the L and U templates by rotating
edge midpoints with (x, y) -> (-y, x), and halves are matched against that
set by enumeration.

Usage: python3 split_oracle.py > split_tables.json
"""
import json

# Edge midpoints of the unit square centred at the origin, y axis up.
TOP, BOTTOM, LEFT, RIGHT = (0, 1), (0, -1), (-1, 0), (1, 0)
NAMES = {TOP: "T", BOTTOM: "B", LEFT: "L", RIGHT: "R"}


def rot(p):
    x, y = p
    return (-y, x)


def rot_shape(shape):
    return frozenset(rot(p) for p in shape)


def build_glyphs():
    """Map frozenset-of-edges (plus 'center' for a lone bar) -> digit."""
    glyphs = {}
    glyphs[frozenset([TOP, BOTTOM, LEFT, RIGHT])] = 0
    # Bar: a single vertical stroke, wherever it sits.
    glyphs[frozenset([LEFT])] = 1
    glyphs[frozenset([RIGHT])] = 1
    glyphs[frozenset(["center"])] = 1
    corner = frozenset([BOTTOM, LEFT])  # L
    cup = frozenset([LEFT, BOTTOM, RIGHT])  # U
    for i, digit in enumerate([2, 4, 6, 8]):
        glyphs[corner] = digit
        corner = rot_shape(corner)
    for digit in [3, 5, 7, 9]:
        glyphs[cup] = digit
        cup = rot_shape(cup)
    return glyphs


SEGMENTS = {
    0: "abcdef", 1: "bc", 2: "abged", 3: "abgcd", 4: "fgbc", 5: "afgcd",
    6: "afgecd", 7: "abc", 8: "abcdefg", 9: "abcdfg", 10: "abcefg",
    11: "cdefg", 12: "adef", 13: "bcdeg", 14: "adefg", 15: "aefg",
}
UPPER = {"a": TOP, "f": LEFT, "b": RIGHT, "g": BOTTOM}
LOWER = {"g": TOP, "e": LEFT, "c": RIGHT, "d": BOTTOM}


def halves(digit, strategy):
    segs = set(SEGMENTS[digit])
    up_segs = set(segs)
    lo_segs = set(segs)
    if strategy == "B":
        lo_segs.discard("g")
    elif strategy == "C":
        up_segs.discard("g")
    upper = frozenset(UPPER[s] for s in up_segs if s in UPPER)
    lower = frozenset(LOWER[s] for s in lo_segs if s in LOWER)
    return upper, lower


GLYPHS = build_glyphs()


def classify(shape):
    return GLYPHS.get(shape)


def raw_pair(digit, strategy):
    up, lo = halves(digit, strategy)
    return classify(up), classify(lo)


def table(strategy, base):
    raws = {d: raw_pair(d, strategy) for d in range(base)}
    out = []
    for d in range(base):
        up, lo = raws[d]
        extra = up is None or lo is None
        collides = (not extra) and any(
            e != d and raws[e] == raws[d] for e in range(base))
        if extra or collides:
            a_up, a_lo = raw_pair(d, "A")
            out.append({"digit": d, "upper": a_up, "lower": a_lo,
                        "replaced": True})
        else:
            out.append({"digit": d, "upper": up, "lower": lo,
                        "replaced": False})
    pairs = [(r["upper"], r["lower"]) for r in out]
    assert len(set(pairs)) == len(pairs), (strategy, base, pairs)
    return out


def split_string(text, strategy, base):
    tab = {r["digit"]: r for r in table(strategy, base)}
    return "".join(f'{tab[int(c, 16)]["upper"]}{tab[int(c, 16)]["lower"]}'
                   for c in text)


def main():
    assert sum(len(SEGMENTS[d]) for d in range(10)) == 49
    assert len(set(GLYPHS.values())) == 10
    for d in range(16):
        assert None not in raw_pair(d, "A"), d
    tables = {}
    for s in "ABC":
        for base in (10, 16):
            tables[f"{s}{base}"] = table(s, base)
    series = ["8"]
    for _ in range(4):
        series.append(split_string(series[-1], "A", 10))
    json.dump({"tables": tables, "series_8_split_a": series}, fp=__import__("sys").stdout,
              indent=1, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
