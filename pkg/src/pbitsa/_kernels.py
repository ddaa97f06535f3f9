"""Compiled inner loops for the annealer.

Data-layout notes, chosen so numba can emit tight machine code:

- couplings arrive as CSR arrays (indptr/indices/values); one p-bit's raw
  input is a single contiguous row scan, and dense n x n storage is never
  built,
- spins are int8, field accumulation is float64, cut accumulation int64,
- all randomness is the splitmix-style counter hash from
  :mod:`pbitsa.streams`, mirrored here on uint64 (a test keeps the two in
  lockstep), so a draw depends only on (key, tag, p-bit, sub-step).

Within one sub-step every updating p-bit reads the spin vector as it stood
at the start of that sub-step: new values are staged and written only after
all raw inputs of the sub-step are computed.  fastmath stays off so float
accumulation order is reproducible against the pure-Python reference.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

U64 = np.uint64

_GAMMA = U64(0x9E3779B97F4A7C15)
_M1 = U64(0xBF58476D1CE4E5B9)
_M2 = U64(0x94D4A04C32684F87)
_INV_2_53 = 2.0 ** -53

# Must match pbitsa.streams tags.
TAG_SPIN = U64(2)
TAG_R = U64(3)
TAG_STALL = U64(4)

# Algorithm codes shared with pbitsa.annealer.
ALGO_PSA = 0
ALGO_TAPSA = 1
ALGO_SPSA = 2


@njit(inline="always")
def _mix64(z):
    z = (z ^ (z >> U64(30))) * _M1
    z = (z ^ (z >> U64(27))) * _M2
    return z ^ (z >> U64(31))


@njit(inline="always")
def _absorb(h, w):
    return _mix64((h + _GAMMA) ^ w)


@njit(inline="always")
def _u01(key, tag, a, b):
    h = _absorb(_absorb(_absorb(key, tag), a), b)
    return (h >> U64(11)) * _INV_2_53


@njit(cache=True, nogil=True)
def _stream_u01(key, tag, a, b):
    """Python-callable hook used by the stream-equivalence test."""
    return _u01(U64(key), U64(tag), U64(a), U64(b))


@njit(cache=True, nogil=True)
def anneal_loop(
    indptr,
    indices,
    values,
    h,
    me_i,
    me_j,
    me_w,
    ge_i,
    ge_j,
    ge_w,
    lam,
    delta,
    period,
    i0_min,
    beta,
    cycles,
    t_res,
    algo,
    alpha,
    p_stall,
    key,
):
    n = h.size

    spins = np.empty(n, np.int8)
    for i in range(n):
        u = _u01(key, TAG_SPIN, U64(i), U64(0))
        spins[i] = 1 if u < 0.5 else -1

    inputs = np.zeros(n, np.float64)
    hist = np.zeros((n, alpha), np.float64)
    counts = np.zeros(n, np.int64)
    stage_idx = np.empty(n, np.int64)
    stage_val = np.empty(n, np.int8)

    trace_i0 = np.empty(cycles, np.float64)
    trace_energy = np.empty(cycles, np.float64)
    trace_cut = np.zeros(cycles, np.int64)
    best_cut = np.int64(-(2**62))

    # With no timing spread every period equals t_res, so updates can only
    # land on sub-step 0; skip the scan elsewhere.
    uniform_timing = True
    for i in range(n):
        if period[i] != t_res:
            uniform_timing = False
            break

    i0 = i0_min
    for c in range(cycles):
        for s in range(t_res):
            if uniform_timing and s != 0:
                continue
            count = c * t_res + s
            n_active = 0
            for i in range(n):
                if count % period[i] != 0:
                    continue
                raw = h[i]
                for k in range(indptr[i], indptr[i + 1]):
                    raw += values[k] * spins[indices[k]]
                if algo == ALGO_TAPSA:
                    cnt = counts[i]
                    hist[i, cnt % alpha] = raw
                    filled = cnt + 1 if cnt + 1 < alpha else alpha
                    acc = 0.0
                    for q in range(filled):
                        acc += hist[i, q]
                    inp = i0 * (acc / filled)
                elif algo == ALGO_SPSA:
                    if counts[i] == 0:
                        inp = i0 * raw
                    else:
                        u = _u01(key, TAG_STALL, U64(i), U64(count))
                        inp = inputs[i] if u < p_stall else i0 * raw
                else:
                    inp = i0 * raw
                inputs[i] = inp
                counts[i] += 1
                r = 2.0 * _u01(key, TAG_R, U64(i), U64(count)) - 1.0
                act = r + math.tanh(lam[i] * (inp + delta[i]))
                stage_idx[n_active] = i
                stage_val[n_active] = 1 if act >= 0.0 else -1
                n_active += 1
            for a in range(n_active):
                spins[stage_idx[a]] = stage_val[a]

        e = 0.0
        for i in range(n):
            e -= h[i] * spins[i]
        for t in range(me_i.size):
            e -= me_w[t] * spins[me_i[t]] * spins[me_j[t]]
        cut = np.int64(0)
        for t in range(ge_i.size):
            if spins[ge_i[t]] != spins[ge_j[t]]:
                cut += ge_w[t]

        trace_i0[c] = i0
        trace_energy[c] = e
        trace_cut[c] = cut
        if cut > best_cut:
            best_cut = cut
        if c < cycles - 1:
            i0 = i0 / beta

    return spins, inputs, hist, counts, trace_i0, trace_energy, trace_cut, best_cut
