"""Print every triangle family for one parameter pair, with its meaning.

The second-kind triangles change monomials into generalized falling
factorials, the first-kind ones go back, and the Lah triangle connects the
rising to the falling basis directly.  The row-reversed Eulerian triangle
carries the numerator polynomials of the power generating functions.
"""

from apsums import Progression
from apsums.eulerian import reu_triangle
from apsums.lah import lah_inverse, lah_triangle
from apsums.stirling import (
    s1_triangle,
    s1phat_triangle,
    s2_triangle,
    s2fac_triangle,
    s2hat_triangle,
)

prog = Progression(d=2, a=1)
N = 4

GALLERY = [
    ("s2", "operator reordering weights", s2_triangle),
    ("s2hat", "complete homogeneous symmetric functions", s2hat_triangle),
    ("s2fac", "column-factorial scaling, rows sum the surjection way", s2fac_triangle),
    ("s1", "signed fractional inverse of s2", s1_triangle),
    ("s1phat", "elementary symmetric functions / cuboid volumes", s1phat_triangle),
    ("reu", "row-reversed generalized Eulerian numbers", reu_triangle),
    ("lah", "rising factorials in the falling basis", lah_triangle),
    ("lahinv", "the same with checkerboard signs", lah_inverse),
]

print(f"progression: a={prog.a}, d={prog.d}; rows 0..{N}")
for name, meaning, builder in GALLERY:
    tri = builder(prog, N)
    print(f"\n{name}  ({meaning})")
    for line in tri.text().splitlines():
        print("   " + line)
