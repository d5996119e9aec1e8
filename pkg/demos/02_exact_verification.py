"""Exact verification of the built-in identity corpus.

Each identity is a vanishing linear combination of theta-constant products;
verify_exact expands every term as an exact truncated series and checks that
the coefficients cancel.  One catalog entry is a suspected misprint: its
printed form fails with explicit nonzero residual coefficients while the
corrected form passes.
"""

import time

from theta5 import ExpectedStatus, builtin_catalog, verify_all, verify_exact

cat = builtin_catalog()
print(f"corpus: {len(cat)} identities")

t0 = time.perf_counter()
reports = verify_all(cat, 6)
elapsed = time.perf_counter() - t0

by_status = {}
for r in reports:
    by_status.setdefault(r.status, []).append(r.id)
print(f"verified at cutoff 6 in {elapsed:.1f}s: "
      f"{len(by_status.get('pass', []))} pass, "
      f"{len(by_status.get('fail', []))} fail")
print("failing ids:", by_status.get("fail", []))

suspect = next(i for i in cat if i.expected is ExpectedStatus.SUSPECT_TYPO)
rep = verify_exact(suspect, 4)
print(f"\nthe printed form of {suspect.id} leaves residual terms:")
for e, c in rep.residuals[:3]:
    print(f"  x^({e.xExp})  coeff {c.to_string()}")

corrected = next(i for i in cat if i.id == "quintic-epsp35-corrected")
print(f"the corrected form passes: {verify_exact(corrected, 4).passed}")
