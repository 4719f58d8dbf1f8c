#!/usr/bin/env python3
"""Print an oriented PD code for the closure of a braid word.

Usage: braid_to_pd.py STRANDS GENERATORS...
  e.g. braid_to_pd.py 3 1 2 1 2 1 2 1 2 1 2     # (s1 s2)^5, the (3,5) torus knot

Generators are 1-based; a negative number is an inverse generator. Strands
run downward; the closure returns on the right without crossings. For a
positive generator s_i the strand moving from position i to i+1 passes over.
Edge labels increase along the orientation and each crossing is listed
counterclockwise from the incoming under-edge.
"""

import sys


def closure_pd(strands, word):
    levels = len(word)
    visits = []  # (crossing, is_over, (dx, dy))
    start = 0
    pos = start
    while True:
        for j, g in enumerate(word):
            i = abs(g) - 1
            if pos not in (i, i + 1):
                continue
            nxt = i + 1 if pos == i else i
            over = (pos == i) if g > 0 else (pos == i + 1)
            visits.append((j, over, (nxt - pos, -1)))
            pos = nxt
        if pos == start:
            break
    if len(visits) != 2 * levels:
        raise SystemExit("closure is not a knot")

    n = len(visits)
    ends = {}
    for idx, (j, over, vec) in enumerate(visits):
        e_in = (idx - 1) % n + 1
        e_out = idx % n + 1
        ends.setdefault(j, {})["over" if over else "under"] = (e_in, e_out, vec)

    out = []
    for j in range(levels):
        ui, uo, u = ends[j]["under"]
        oi, oo, v = ends[j]["over"]
        # Counterclockwise from the incoming under-edge (at -u) is rot90(-u).
        mx, my = -u[0], -u[1]
        rx, ry = -my, mx
        if v[0] * rx + v[1] * ry > 0:
            b, d = oo, oi
        else:
            b, d = oi, oo
        out.append((ui, b, uo, d))
    return out


def main(argv):
    if len(argv) < 3:
        raise SystemExit(__doc__)
    strands = int(argv[1])
    word = [int(x) for x in argv[2:]]
    if any(x == 0 or abs(x) >= strands for x in word):
        raise SystemExit("generator out of range")
    print(", ".join("X[%d,%d,%d,%d]" % x for x in closure_pd(strands, word)))


if __name__ == "__main__":
    main(sys.argv)
