"""
The full verification report
============================

Every closed form in the package is paired with an oracle that recomputes it
from first principles: definition-level Apery enumeration, pairwise
S-polynomial reduction, elimination kernels, staircase counting, series
truncation, and matrix arithmetic on the stored resolutions. One call runs
them all.
"""

from apsemigroups import Vec2, build_family, full_report

for label, family in [
    ("base k=3", build_family(Vec2(5, 4), Vec2(4, 9), 3)),
    ("base k=2", build_family(Vec2(2, 1), Vec2(1, 2), 2)),
    ("glued k=3", build_family(Vec2(2, 3), Vec2(2, 2), 3, Vec2(9, 11))),
]:
    report = full_report(family)
    print(f"== {label}: {family}")
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        extra = f"  <- {check.witness}" if check.witness else ""
        print(f"  [{status}] {check.name}{extra}")
    print("  flags:", report.flags)
    print("  all passed:", report.ok)
    print()
