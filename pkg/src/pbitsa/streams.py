"""Counter-based random streams.

Every random draw made during a simulation is a pure function of a 64-bit
key and a (stream tag, index, counter) triple, obtained by absorbing the
words into a splitmix-style finalizer.  Nothing is stateful, so any draw
can be reproduced in isolation: trial results do not depend on execution
order, thread count, or how many draws other p-bits consumed.

The compiled kernels in :mod:`pbitsa._kernels` carry a uint64 mirror of
these functions; a test pins the two implementations to each other.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_INV_2_53 = 2.0 ** -53

# Stream tags. Fixed for life: changing any of these silently changes every
# simulation result downstream of a seed.
TAG_RUN = 1      # run seed -> kernel key
TAG_SPIN = 2     # initial spin draw, indexed by p-bit
TAG_R = 3        # per-update activation noise r, indexed by (p-bit, sub-step)
TAG_STALL = 4    # per-update stall draw u, indexed by (p-bit, sub-step)
TAG_TRIAL = 5    # (base seed, trial index) -> trial seed
TAG_PROFILE = 6  # trial seed -> variability sampling seed


def mix64(z: int) -> int:
    """Finalizing 64-bit avalanche (splitmix64's output stage)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D4A04C32684F87) & MASK64
    return (z ^ (z >> 31)) & MASK64


def absorb(h: int, w: int) -> int:
    return mix64(((h + _GAMMA) & MASK64) ^ (w & MASK64))


def stream_u64(key: int, tag: int, a: int = 0, b: int = 0) -> int:
    """Hash (key, tag, a, b) to a uniform 64-bit word."""
    h = absorb(key & MASK64, tag)
    h = absorb(h, a)
    return absorb(h, b)


def uniform01(key: int, tag: int, a: int = 0, b: int = 0) -> float:
    """Uniform draw in [0, 1) for the given stream coordinates."""
    return (stream_u64(key, tag, a, b) >> 11) * _INV_2_53


def uniform_signed(key: int, tag: int, a: int = 0, b: int = 0) -> float:
    """Uniform draw in [-1, 1) for the given stream coordinates."""
    return 2.0 * uniform01(key, tag, a, b) - 1.0


def run_key(seed: int) -> int:
    """Kernel key for one annealing run; accepts any Python int seed."""
    return stream_u64(seed & MASK64, TAG_RUN)


def trial_seed(base_seed: int, index: int) -> int:
    """Per-trial seed. Depends only on (base_seed, index), so changing the
    trial count or execution order never perturbs other trials."""
    if index < 0:
        raise ValueError("trial index must be >= 0")
    return stream_u64(base_seed & MASK64, TAG_TRIAL, index)


def profile_seed(seed: int) -> int:
    """Seed for variability sampling, decoupled from the in-run streams."""
    return stream_u64(seed & MASK64, TAG_PROFILE)
