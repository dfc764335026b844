"""Circulant encoding, the Goethals-Seidel array, and Hadamard checks.

Sign matrices are plain ``int8`` numpy arrays holding +1/-1.  The Hadamard
check packs rows into bits (-1 -> 1) so that a row inner product is
``m - 2 * popcount(r XOR s)``; :func:`verify_hadamard_dense` keeps the naive
integer product around as a reference.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .families import Block, _common_modulus, autocorrelation


class OrderMismatch(ValueError):
    pass


if hasattr(np, "bitwise_count"):
    _popcount = np.bitwise_count
else:  # numpy < 2
    _POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _popcount(a):
        return _POP8[a]


def encode(b: Block) -> np.ndarray:
    """The +-1 row with -1 exactly at the members of ``b``."""
    a = np.ones(b.n, dtype=np.int8)
    a[list(b.elements)] = -1
    return a


def circulant(first_row: np.ndarray) -> np.ndarray:
    """Matrix whose entry (r, c) is ``first_row[(c - r) % n]``."""
    row = np.asarray(first_row)
    n = len(row)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return row[idx]


def back_diagonal(n: int) -> np.ndarray:
    """Dense reversal permutation R.  Only used for inspection and tests;
    multiplication by R is done with :func:`times_r`."""
    if n < 1:
        raise ValueError("order must be positive")
    return np.eye(n, dtype=np.int8)[::-1].copy()


def times_r(P: np.ndarray) -> np.ndarray:
    """P @ R, i.e. P with its columns reversed."""
    return P[:, ::-1]


def goethals_seidel(P1: np.ndarray, P2: np.ndarray, P3: np.ndarray, P4: np.ndarray) -> np.ndarray:
    """Assemble the order-4n Goethals-Seidel matrix from four n x n blocks."""
    ps = [np.asarray(P) for P in (P1, P2, P3, P4)]
    shapes = {P.shape for P in ps}
    if len(shapes) != 1 or ps[0].ndim != 2 or ps[0].shape[0] != ps[0].shape[1]:
        raise OrderMismatch(f"blocks must be square of one order, got {sorted(shapes)}")
    P1, P2, P3, P4 = ps
    R = times_r
    return np.block(
        [
            [P1, R(P2), R(P3), R(P4)],
            [-R(P2), P1, -R(P4.T), R(P3.T)],
            [-R(P3), R(P4.T), P1, -R(P2.T)],
            [-R(P4), -R(P3.T), R(P2.T), P1],
        ]
    ).astype(np.int8)


def matrix_from_blocks(blocks: Sequence[Block]) -> np.ndarray:
    """Goethals-Seidel matrix with the circulants of four blocks plugged in."""
    if len(blocks) != 4:
        raise ValueError("need exactly four blocks")
    _common_modulus(blocks)
    return goethals_seidel(*(circulant(encode(b)) for b in blocks))


def pack_rows(A: np.ndarray) -> np.ndarray:
    """Bit-pack each row, one bit per entry, set where the entry is -1."""
    return np.packbits(np.asarray(A) < 0, axis=1)


def verify_hadamard(A: np.ndarray) -> bool:
    """A @ A.T == m I, checked row against later rows with early exit."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    if not np.all(np.abs(A) == 1):
        return False
    m = A.shape[0]
    if m > 2 and m % 4:
        return False
    if m == 1:
        return True
    if m % 2:
        return False
    packed = pack_rows(A)
    half = m // 2
    for r in range(m - 1):
        diff = _popcount(packed[r + 1 :] ^ packed[r]).sum(axis=1, dtype=np.int64)
        if np.any(diff != half):
            return False
    return True


def verify_hadamard_dense(A: np.ndarray) -> bool:
    """Reference check through the full integer product."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or not np.all(np.abs(A) == 1):
        return False
    m = A.shape[0]
    return bool(np.array_equal(A @ A.T, m * np.eye(m, dtype=np.int64)))


def verify_skew(A: np.ndarray) -> bool:
    """Diagonal all +1 and A[r, c] == -A[c, r] off the diagonal."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    m = A.shape[0]
    return bool(np.array_equal(A + A.T, 2 * np.eye(m, dtype=np.int64)))


def paf(a: np.ndarray) -> np.ndarray:
    """Periodic autocorrelation of a +-1 sequence, shifts 0..n-1."""
    return autocorrelation(np.asarray(a, dtype=np.int64))


def paf_verify(blocks: Sequence[Block]) -> bool:
    """Sum of the four encoded PAFs vanishes at every nonzero shift.

    For circulant blocks this is equivalent to the assembled Goethals-Seidel
    matrix being Hadamard, without building it.
    """
    n = _common_modulus(blocks)
    total = np.zeros(n, dtype=np.int64)
    for b in blocks:
        total += paf(encode(b))
    return bool(np.all(total[1:] == 0))
