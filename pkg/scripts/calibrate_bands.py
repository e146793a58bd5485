"""Recompute the calibration behind CLAIM_RHO_BAND and the order-N missed-area band.

Run once; the printed band is frozen in hyperhull.cap_analysis and is not re-tuned.
"""

import math

from hyperhull import area_engine as ae
from hyperhull import cap_analysis as ca
from hyperhull import hull_chain as hc


def half_chord_ratios(N):
    out = []
    for p1, p2 in hc.chain_vertices(N).edges():
        cap = ca.cap_from_edge(p1, p2, N)
        if cap.x_p >= math.sqrt(N):
            out.append(cap.half_chord / cap.rho)
    return out


if __name__ == "__main__":
    r = half_chord_ratios(10**4)
    print(f"N=10^4 half-chord/rho: min {min(r):.7f} max {max(r):.7f}")
    print(f"band (min/2, 2*max): ({min(r) / 2:.4f}, {2 * max(r):.4f})  frozen: {ca.CLAIM_RHO_BAND}")
    for k in range(4, 10):
        N = 10**k
        print(f"N=10^{k}: full missed area / N = {ae.missed_area_range(N, 1, N).value / N:.6f}")
