"""Run every closed-form claim for one hook against exact brute force.

The report covers the Hilbert series, dimension, number of generators, colon
sizes, the Euler identity, Krull dimension, Alexander duality, the regular
sequence (within a degree window) and regularity.
"""

import sys

from dpideals import Hook, verify_hook

a, b = (int(x) for x in sys.argv[1:3]) if len(sys.argv) >= 3 else (2, 2)
report = verify_hook(Hook(a, b))
print(report.render())
print("all checks pass:", report.passed)
