"""Small shared helpers: dyadic grids, log-log fits, hashing, parallel map."""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

FNV64_OFFSET = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash of a byte string."""
    h = FNV64_OFFSET
    for b in data:
        h ^= b
        h = (h * FNV64_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def dyadic_range(lo: int, hi: int) -> list[int]:
    """Powers of two from lo to hi inclusive; both must themselves be dyadic."""
    if lo < 1 or lo & (lo - 1) or hi & (hi - 1) or hi < lo:
        raise ValueError(f"bad dyadic range [{lo}, {hi}]")
    out = []
    n = lo
    while n <= hi:
        out.append(n)
        n *= 2
    return out


def is_dyadic(n) -> bool:
    return float(n).is_integer() and int(n) >= 1 and int(n) & (int(n) - 1) == 0


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(y) against log(x)."""
    xs = np.log(np.asarray(xs, dtype=float))
    ys = np.log(np.asarray(ys, dtype=float))
    if len(xs) < 2:
        raise ValueError("need at least two points for a slope")
    return float(np.polyfit(xs, ys, 1)[0])


def worker_count() -> int:
    """Parallelism cap; DIFFCODEC_THREADS overrides (default 1, deterministic)."""
    raw = os.environ.get("DIFFCODEC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """Order-preserving map honoring the DIFFCODEC_THREADS cap."""
    items = list(items)
    workers = min(worker_count(), len(items)) if items else 1
    if workers <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
