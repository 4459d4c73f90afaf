"""Deterministic sub-seed derivation.

Every random draw in the package (weight init, data shuffles, sampler
construction, synthetic data) flows from one configured base seed through
named sub-seeds, so runs are reproducible and resumable without carrying
mutable RNG state around.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def derive_seed(base: int, label: str) -> int:
    """Derive a stable 64-bit sub-seed from a base seed and a label."""
    key = (int(base) & _MASK64).to_bytes(8, "little")
    digest = hashlib.blake2b(label.encode("utf-8"), key=key, digest_size=8).digest()
    return int.from_bytes(digest, "little")


def rng_for(base: int, label: str) -> np.random.Generator:
    """Seeded generator for a named purpose."""
    return np.random.Generator(np.random.PCG64(derive_seed(base, label)))
