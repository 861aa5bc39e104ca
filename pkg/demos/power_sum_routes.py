"""Walk one power sum through all five formula routes.

The sum of squares of the first odd numbers, PS(2,1; n=2, m) for a few m,
is computed by direct summation, the two Faulhaber-style formulas, and
coefficient extraction from the exponential and ordinary generating
functions.  All six columns must agree exactly; if they ever disagree, one
of the underlying triangles or series operations is wrong.
"""

from apsums import Progression
from apsums.powersum import METHOD_NAMES, evaluate_method

prog = Progression(d=2, a=1)
n = 2

print(f"power sums of the progression {prog.a}, {prog.a + prog.d}, ... with exponent {n}")
print()
header = "m".rjust(3) + "".join(name.rjust(14) for name in METHOD_NAMES)
print(header)
for m in range(8):
    values = [evaluate_method(name, prog, n, m) for name in METHOD_NAMES]
    assert len(set(values)) == 1, f"route disagreement at m={m}: {values}"
    print(str(m).rjust(3) + "".join(str(v).rjust(14) for v in values))

print()
print("all routes agree; the m-th row is 1^2 + 3^2 + ... + (2m+1)^2")
