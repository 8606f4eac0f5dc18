#!/usr/bin/env python3
"""Tour of the basic objects: Dyck paths, Shi tableaux, and their statistics.

A Dyck path is a balanced U/D word whose prefixes never dip below zero.
Every path of semilength n+1 encodes a Shi tableau of size n (a staircase
filling), a 2 x (n+1) standard Young tableau, and an alternating run form;
this script walks through the four encodings and the classic statistics.
"""

from shipat import (
    area_vector,
    bounce_path,
    height,
    irreducible_decomposition,
    parse_path,
    path_to_syt,
    path_to_tableau,
    peaks,
    region_inequalities,
    return_points,
    run_form,
    strongly_irreducible_decomposition,
    valleys,
)

p = parse_path("UUDUUDUDDUDD")
print("path:", p.word, "semilength:", p.semilength)

# The area vector records the empty boxes per tableau row; it determines
# the path and vice versa.
print("area vector:", area_vector(p))
tableau = path_to_tableau(p)
print("tableau size:", tableau.size)

syt = path_to_syt(p)
print("standard tableau top:   ", syt.top)
print("standard tableau bottom:", syt.bottom)

print("run form:", run_form(p).runs)

# Height, peaks and valleys read straight off the word.
print("height:", height(p))
print("peaks (index, height):  ", peaks(p))
print("valleys (index, height):", valleys(p))

# The bounce path travels up along the path, then drops to the diagonal.
q = parse_path("UDUUDUDUDD")
print("\nbounce of", q.word, "is", bounce_path(q).word)
print("its return points:", return_points(q))

# Decompositions split a path at diagonal returns, or an irreducible path
# at touches of the shifted diagonal.
r = parse_path("UUDDUDUUDD")
d = irreducible_decomposition(r)
print("\ncomponents of", r.word)
for part in d.parts:
    label = part.kind if part.peak_count is None else f"{part.kind}({part.peak_count})"
    print("   ", label, part.component.word or "(empty)")
print("connecting components:", d.k_prime)

s = parse_path("UUUDDUDD")
sd = strongly_irreducible_decomposition(s)
print("interior components of", s.word, "=",
      [(part.kind, part.component.word) for part in sd.parts])

# A tableau of size n describes a dominant region of the Shi arrangement
# on n + 1 coordinates.
t = path_to_tableau(parse_path("UUDUDD"))
print("\nregion of the tableau with area", t.area)
for line in region_inequalities(t):
    print("   ", line)
