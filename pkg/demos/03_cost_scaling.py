"""
Element counts versus a spatial-only mesh
=========================================

Realizing an N x N unitary on N spatial modes takes N(N-1)/2 beamsplitters.
Splitting the same N = n_s * n_p dimensions across n_s spatial and n_p
internal modes cuts the beamsplitter count to n_s(n_s - 1), a reduction by
eta > n_p^2/2 once n_p >= 2, at the price of roughly doubling the internal
element count (the factor xi below).
"""

from modemix import ModeSpace, cost_report

print(f"{'n_s':>4} {'n_p':>4} {'dim':>5} {'mesh BS':>8} {'ours BS':>8} {'eta':>7} {'xi':>7}")
for n_s in (2, 3, 4, 6, 8):
    for n_p in (1, 2, 3, 4):
        r = cost_report(ModeSpace(n_s, n_p))
        print(
            f"{r.n_s:>4} {r.n_p:>4} {r.n_s * r.n_p:>5} {r.reck_beamsplitters:>8} "
            f"{r.beamsplitters:>8} {r.eta:>7.2f} {r.xi:>7.3f}"
        )

# the polarization workhorse: a 2n x 2n unitary on n spatial modes
print("\npolarization (n_p = 2): realizing a 2n x 2n unitary")
print(f"{'n':>4} {'balanced BS':>12} {'phase shifters':>15} {'wave plates':>12}")
for n in (2, 4, 8, 16):
    r = cost_report(ModeSpace(n, 2))
    wave_plates = 3 * r.internal_phase_blocks // 2
    print(f"{n:>4} {r.beamsplitters:>12} {r.internal_arbitrary:>15} {wave_plates:>12}")

# xi approaches 2 as the internal space grows
print("\nxi -> 2 with growing n_p (n_s = 8):")
for n_p in (1, 2, 5, 10, 50):
    print(f"  n_p={n_p:<3} xi={cost_report(ModeSpace(8, n_p)).xi:.4f}")
