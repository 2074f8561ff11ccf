"""Numba-compiled Monte Carlo membership kernel (per-sample loop).

Keep every arithmetic expression in the same order as ``_mc_numpy``: the two
backends are required to produce bit-identical hit counts. fastmath stays
off so LLVM cannot contract or reorder float operations.
"""

from __future__ import annotations

import numba as nb
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

_GOLDEN = np.uint64(GOLDEN)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U3 = np.uint64(3)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)


@nb.njit(cache=True)
def _u01(seed, k):
    z = seed + (k + _U1) * _GOLDEN
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    z = z ^ (z >> _S31)
    return np.float64(z >> _S11) * INV_2_53


@nb.njit(cache=True)
def _surface_neg(code, prm, x, y, z):
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
        return (u > 0.0 and u < prm[6] and v > 0.0 and v < prm[10]
                and t > 0.0 and t < prm[14])
    if code == KIND_RPP:
        return (x > prm[0] and x < prm[1] and y > prm[2] and y < prm[3]
                and z > prm[4] and z < prm[5])
    if code == KIND_RCC:
        wx = x - prm[0]
        wy = y - prm[1]
        wz = z - prm[2]
        h = wx * prm[3] + wy * prm[4] + wz * prm[5]
        dx = wx - h * prm[3]
        dy = wy - h * prm[4]
        dz = wz - h * prm[5]
        rho2 = dx * dx + dy * dy + dz * dz
        return h > 0.0 and h < prm[6] and rho2 < prm[7]
    if code == KIND_TRC:
        wx = x - prm[0]
        wy = y - prm[1]
        wz = z - prm[2]
        h = wx * prm[3] + wy * prm[4] + wz * prm[5]
        dx = wx - h * prm[3]
        dy = wy - h * prm[4]
        dz = wz - h * prm[5]
        rho2 = dx * dx + dy * dy + dz * dz
        r_at = prm[7] + prm[8] * h
        return h > 0.0 and h < prm[6] and rho2 < r_at * r_at
    if code == KIND_TX or code == KIND_TY or code == KIND_TZ:
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
        return h > 0.0 and h < prm[6] and u * u + v * v < 1.0
    if code == KIND_WED:
        wx = x - prm[0]
        wy = y - prm[1]
        wz = z - prm[2]
        u = wx * prm[3] + wy * prm[4] + wz * prm[5]
        v = wx * prm[7] + wy * prm[8] + wz * prm[9]
        t = wx * prm[11] + wy * prm[12] + wz * prm[13]
        return (u > 0.0 and v > 0.0 and u * prm[6] + v * prm[10] < 1.0
                and t > 0.0 and t < prm[14])
    return False


@nb.njit(cache=True)
def count_hits(kinds, params, ops, a0, a1, max_stack, box6, n, seed):
    seed_u = np.uint64(seed)
    nsurf = kinds.shape[0]
    nops = ops.shape[0]
    neg = np.empty(nsurf, np.bool_)
    stack = np.empty(max_stack, np.bool_)
    hits = 0
    for i in range(n):
        base = _U3 * np.uint64(i)
        x = box6[0] + _u01(seed_u, base) * box6[3]
        y = box6[1] + _u01(seed_u, base + _U1) * box6[4]
        z = box6[2] + _u01(seed_u, base + _U2) * box6[5]
        for s in range(nsurf):
            neg[s] = _surface_neg(kinds[s], params[s], x, y, z)
        sp = 0
        for j in range(nops):
            op = ops[j]
            if op == OP_SENSE:
                val = neg[a0[j]]
                if a1[j] > 0:
                    val = not val
                stack[sp] = val
                sp += 1
            elif op == OP_AND:
                k = a0[j]
                acc = True
                for t in range(k):
                    acc = acc and stack[sp - k + t]
                sp -= k
                stack[sp] = acc
                sp += 1
            elif op == OP_NOT:
                stack[sp - 1] = not stack[sp - 1]
            else:
                k = a0[j]
                acc = False
                for t in range(k):
                    acc = acc or stack[sp - k + t]
                sp -= k
                stack[sp] = acc
                sp += 1
        if stack[0]:
            hits += 1
    return hits
