"""
Cosine-sine decomposition of a unitary matrix
=============================================

The CSD splits any (m+n) x (m+n) unitary U into block-diagonal unitaries
and one real orthogonal mixing layer:

    U = (L ⊕ L') · S(θ) · (R† ⊕ R'†)

The mixing layer S(θ) carries m angles; everything else acts inside the
top m or bottom n coordinates separately. This script decomposes a random
6 x 6 unitary with m = 2 and inspects the pieces.
"""

import numpy as np

from modemix import cs_matrix, csd, haar_random_unitary, unitarity_defect

np.set_printoptions(precision=4, suppress=True, linewidth=120)

u = haar_random_unitary(6, seed=3)
result = csd(u, m=2)

print("mixing angles (radians):", result.thetas)
print("cosines, non-increasing:", np.cos(result.thetas))

# every corner factor is unitary
for name in ("left_top", "left_bottom", "right_top", "right_bottom"):
    factor = getattr(result, name)
    print(f"{name}: {factor.shape[0]}x{factor.shape[1]}, "
          f"unitarity defect {unitarity_defect(factor):.2e}")

# conjugating U by the corner factors exposes the bare cosine-sine layer
left = np.zeros((6, 6), complex)
left[:2, :2] = result.left_top
left[2:, 2:] = result.left_bottom
right = np.zeros((6, 6), complex)
right[:2, :2] = result.right_top
right[2:, 2:] = result.right_bottom
middle = left.conj().T @ u @ right

print("\nmiddle factor L† U R (real part):")
print(middle.real)
print("\ntarget cosine-sine matrix S(θ):")
print(cs_matrix(result.thetas, 6))

error = np.max(np.abs(result.assemble() - u))
print(f"\nreassembly error: {error:.2e}")
