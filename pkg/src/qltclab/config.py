"""Enumeration caps.

The cap bounds both codeword enumeration (2^k) and coset-table size
(2^rank).  Resolution order: an explicit ``cap=`` argument, then
:func:`set_cap`, then the ``QLTC_CAP`` environment variable, then 2^24.
"""

from __future__ import annotations

import os

DEFAULT_CAP = 1 << 24

_override: int | None = None


def set_cap(cap: int | None) -> None:
    global _override
    _override = None if cap is None else int(cap)


def get_cap(cap: int | None = None) -> int:
    if cap is not None:
        return int(cap)
    if _override is not None:
        return _override
    env = os.environ.get("QLTC_CAP")
    if env:
        return int(env, 0)
    return DEFAULT_CAP
