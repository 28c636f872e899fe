import numpy as np

from modemix import cs_matrix, haar_random_unitary


def max_abs(a, b) -> float:
    """Largest entrywise deviation between two matrices."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def block_diag_unitary(top: np.ndarray, bottom: np.ndarray) -> np.ndarray:
    m, n = top.shape[0], bottom.shape[0]
    out = np.zeros((m + n, m + n), dtype=complex)
    out[:m, :m] = top
    out[m:, m:] = bottom
    return out


def cs_conjugated(thetas, m: int, n: int, seed: int) -> np.ndarray:
    """Unitary with prescribed mixing angles: (L ⊕ L') S(θ) (R† ⊕ R'†).

    Sorting the angles keeps the cosines non-increasing, so the returned
    matrix has a known canonical decomposition.
    """
    thetas = np.sort(np.asarray(thetas, dtype=float))
    left = block_diag_unitary(haar_random_unitary(m, seed), haar_random_unitary(n, seed + 1))
    right = block_diag_unitary(
        haar_random_unitary(m, seed + 2).conj().T,
        haar_random_unitary(n, seed + 3).conj().T,
    )
    return left @ cs_matrix(thetas, m + n) @ right
