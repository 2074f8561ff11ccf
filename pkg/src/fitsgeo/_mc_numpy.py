"""Pure-numpy Monte Carlo membership kernel.

Mirrors ``_mc_numba`` operation for operation; both backends must produce
bit-identical hit counts, so expressions here stay elementwise (no dot/sum
reductions, whose summation order could differ from the scalar loop).
"""

from __future__ import annotations

import numpy as np

from ._mc_common import (
    GOLDEN,
    INV_2_53,
    KIND_BOX,
    KIND_P,
    KIND_PX,
    KIND_PY,
    KIND_PZ,
    KIND_RCC,
    KIND_REC,
    KIND_RPP,
    KIND_SPH,
    KIND_TRC,
    KIND_TX,
    KIND_TY,
    KIND_TZ,
    KIND_WED,
    OP_AND,
    OP_NOT,
    OP_SENSE,
)

CHUNK = 1 << 18

_U = np.uint64
_GOLDEN = _U(GOLDEN)
_MIX1 = _U(0xBF58476D1CE4E5B9)
_MIX2 = _U(0x94D049BB133111EB)


def _u01(seed: np.uint64, k: np.ndarray) -> np.ndarray:
    z = seed + (k + _U(1)) * _GOLDEN
    z = (z ^ (z >> _U(30))) * _MIX1
    z = (z ^ (z >> _U(27))) * _MIX2
    z = z ^ (z >> _U(31))
    return (z >> _U(11)) * INV_2_53


def _axis_locals(prm, x, y, z):
    wx = x - prm[0]
    wy = y - prm[1]
    wz = z - prm[2]
    h = wx * prm[3] + wy * prm[4] + wz * prm[5]
    dx = wx - h * prm[3]
    dy = wy - h * prm[4]
    dz = wz - h * prm[5]
    rho2 = dx * dx + dy * dy + dz * dz
    return wx, wy, wz, h, rho2


def _neg_mask(code: int, prm: np.ndarray, x, y, z) -> np.ndarray:
    """Boolean mask of points strictly on the negative (interior) side."""
    if code == KIND_P:
        return prm[0] * x + prm[1] * y + prm[2] * z - prm[3] < 0.0
    if code == KIND_PX:
        return x - prm[0] < 0.0
    if code == KIND_PY:
        return y - prm[0] < 0.0
    if code == KIND_PZ:
        return z - prm[0] < 0.0
    if code == KIND_SPH:
        dx = x - prm[0]
        dy = y - prm[1]
        dz = z - prm[2]
        return dx * dx + dy * dy + dz * dz < prm[3]
    if code == KIND_BOX:
        wx = x - prm[0]
        wy = y - prm[1]
        wz = z - prm[2]
        u = wx * prm[3] + wy * prm[4] + wz * prm[5]
        v = wx * prm[7] + wy * prm[8] + wz * prm[9]
        t = wx * prm[11] + wy * prm[12] + wz * prm[13]
        return ((u > 0.0) & (u < prm[6]) & (v > 0.0) & (v < prm[10])
                & (t > 0.0) & (t < prm[14]))
    if code == KIND_RPP:
        return ((x > prm[0]) & (x < prm[1]) & (y > prm[2]) & (y < prm[3])
                & (z > prm[4]) & (z < prm[5]))
    if code == KIND_RCC:
        _, _, _, h, rho2 = _axis_locals(prm, x, y, z)
        return (h > 0.0) & (h < prm[6]) & (rho2 < prm[7])
    if code == KIND_TRC:
        _, _, _, h, rho2 = _axis_locals(prm, x, y, z)
        r_at = prm[7] + prm[8] * h
        return (h > 0.0) & (h < prm[6]) & (rho2 < r_at * r_at)
    if code in (KIND_TX, KIND_TY, KIND_TZ):
        qx = x - prm[0]
        qy = y - prm[1]
        qz = z - prm[2]
        if code == KIND_TX:
            s = np.sqrt(qy * qy + qz * qz)
            ax = qx
        elif code == KIND_TY:
            s = np.sqrt(qx * qx + qz * qz)
            ax = qy
        else:
            s = np.sqrt(qx * qx + qy * qy)
            ax = qz
        t1 = (s - prm[3]) * prm[5]
        t2 = ax * prm[4]
        return t1 * t1 + t2 * t2 < 1.0
    if code == KIND_REC:
        wx = x - prm[0]
        wy = y - prm[1]
        wz = z - prm[2]
        h = wx * prm[3] + wy * prm[4] + wz * prm[5]
        u = (wx * prm[7] + wy * prm[8] + wz * prm[9]) * prm[10]
        v = (wx * prm[11] + wy * prm[12] + wz * prm[13]) * prm[14]
        return (h > 0.0) & (h < prm[6]) & (u * u + v * v < 1.0)
    if code == KIND_WED:
        wx = x - prm[0]
        wy = y - prm[1]
        wz = z - prm[2]
        u = wx * prm[3] + wy * prm[4] + wz * prm[5]
        v = wx * prm[7] + wy * prm[8] + wz * prm[9]
        t = wx * prm[11] + wy * prm[12] + wz * prm[13]
        return ((u > 0.0) & (v > 0.0) & (u * prm[6] + v * prm[10] < 1.0)
                & (t > 0.0) & (t < prm[14]))
    raise ValueError(f"unknown kind code {code}")


def count_hits(kinds, params, ops, a0, a1, max_stack, box6, n, seed) -> int:
    seed_u = _U(seed)
    hits = 0
    for start in range(0, n, CHUNK):
        cnt = min(CHUNK, n - start)
        base = np.arange(start, start + cnt, dtype=np.uint64) * _U(3)
        x = box6[0] + _u01(seed_u, base) * box6[3]
        y = box6[1] + _u01(seed_u, base + _U(1)) * box6[4]
        z = box6[2] + _u01(seed_u, base + _U(2)) * box6[5]
        neg = [_neg_mask(int(kinds[s]), params[s], x, y, z)
               for s in range(kinds.shape[0])]
        stack: list[np.ndarray] = []
        for j in range(ops.shape[0]):
            op = ops[j]
            if op == OP_SENSE:
                mask = neg[a0[j]]
                stack.append(mask if a1[j] < 0 else ~mask)
            elif op == OP_AND:
                k = int(a0[j])
                acc = stack[-k]
                for t in range(1, k):
                    acc = acc & stack[-k + t]
                del stack[-k:]
                stack.append(acc)
            elif op == OP_NOT:
                stack[-1] = ~stack[-1]
            else:  # OP_OR
                k = int(a0[j])
                acc = stack[-k]
                for t in range(1, k):
                    acc = acc | stack[-k + t]
                del stack[-k:]
                stack.append(acc)
        hits += int(np.count_nonzero(stack[0]))
    return hits
