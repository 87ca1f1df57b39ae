"""Run the claim verifiers and show their reports.

The proven claims (t1, t6, t7, t8, t9) must pass on any grid; a failure
there means a bug in this package.  The conjectured ones (c10, c11, c12
and the modular patterns) are checked over finite ranges only, and their
reports carry an explicit caveat saying so.
"""

import time

from hankelshift import GridRange, verify_claim

claims = ("t1", "t6", "t7", "t8", "t9", "c10", "c11", "c12", "patterns")

for claim in claims:
    started = time.monotonic()
    report = verify_claim(claim)
    elapsed = time.monotonic() - started
    print(report.render_text())
    print(f"({elapsed:.2f} s)")
    print()

print("custom grids are one call away; here is a deeper modular-pattern scan:")
report = verify_claim("patterns", GridRange(n_max=30, k_list=(5,)))
print(report.render_text())

print()
print("reports serialize to a stable JSON schema; the first cells of c11:")
report = verify_claim("c11", GridRange(m_min=0, m_max=0, n_max=4, k_list=(2,)))
print(report.to_json())
