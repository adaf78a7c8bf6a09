"""Invariants of one cyclic resolution, end to end.

The worked cell: three planes in P^3, n = 7, multiplicities (1, 2, 4).  The
degree-7 cover branched at D = H_1 + 2 H_2 + 4 H_3 resolves to a smooth
3-fold with chi = 1, K^3 = -14, e = 18, so the Chern slopes are
(-K^3/24chi, e/24chi) = (7/12, 3/4).
"""

import json

from rootcover import (
    Partition,
    chi_eigenspace_oracle,
    chi_root_cover,
    closed_forms_p4,
    euler_root_cover,
    invariant_report,
    k3_root_cover,
    log_chern_numbers,
    make_preset,
    report_to_json_dict,
)

pair = make_preset("planes_p3", 3)
part = Partition(7, (1, 2, 4))

print("=== chi, with its R-term breakdown ===")
chi = chi_root_cover(pair, part)
print(f"chi = {chi.chi}   (R1, R2, R3) = ({chi.r1}, {chi.r2}, {chi.r3})")
print("independent eigenspace summation:", chi_eigenspace_oracle(pair, part))
print()

print("=== K^3 and e ===")
print("K^3 =", k3_root_cover(pair, part, "minimal"))
print("e   =", euler_root_cover(pair, part))
print()

print("=== the full report ===")
rep = invariant_report(pair, part)
print(json.dumps(report_to_json_dict(rep), indent=2))
print()

print("=== a degree-6 hypersurface pair, same partition ===")
hp = make_preset("hypersurface_p4", (6, 3))
print("chi(O_Z) =", hp.chi, "  log Chern numbers:", log_chern_numbers(hp))
print("K^3 =", k3_root_cover(hp, part), " (closed form:",
      closed_forms_p4(6, 7, part).k3, ")")
print("chi =", chi_root_cover(hp, part).chi, " (closed form:",
      closed_forms_p4(6, 7, part).chi, ")")
