"""Hierarchical seeded random-number streams.

Every stochastic component draws from its own ``numpy.random.Generator``
derived from a master seed plus a key path, e.g.::

    rng = derive_rng(master_seed, "noise", ebn0_index, block_index)

Derivation is counter-based, not sequential: the stream for one key is a
pure function of ``(master_seed, key path)`` and cannot be perturbed by how
many draws another component made.  The exact construction, fixed for
reproducibility across releases:

- string keys hash to ``int.from_bytes(sha256(utf8)[:8], "little")``
- the entropy list ``[master_seed, k1, k2, ...]`` feeds
  ``numpy.random.SeedSequence``, which spawns a ``PCG64`` generator
"""

from __future__ import annotations

import hashlib

import numpy as np


def _key_int(key) -> int:
    if isinstance(key, str):
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "little")
    if isinstance(key, (int, np.integer)):
        return int(key)
    raise TypeError(f"rng keys must be str or int, got {type(key).__name__}")


def derive_seed_sequence(master_seed: int, *keys) -> np.random.SeedSequence:
    entropy = [int(master_seed)] + [_key_int(k) for k in keys]
    return np.random.SeedSequence(entropy)


def derive_rng(master_seed: int, *keys) -> np.random.Generator:
    """Return an independent generator for ``(master_seed, *keys)``."""
    return np.random.Generator(np.random.PCG64(derive_seed_sequence(master_seed, *keys)))
