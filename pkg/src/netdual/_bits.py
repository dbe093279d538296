"""Bitmask helpers for squarefree supports.

A vertex subset of ``{0, ..., n-1}`` is stored as a Python ``int`` whose bit
``i`` is set iff vertex ``i`` belongs to the subset.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative index {i}")
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: by size, then lexicographically on the index tuple."""
    return (mask.bit_count(), indices_of(mask))


def sort_masks(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=canonical_key))


def minimal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of a family, canonically sorted."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sort_masks(kept)


def maximal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of a family, canonically sorted."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sort_masks(kept)


def minimal_transversals(family: Iterable[int]) -> tuple[int, ...]:
    """Minimal hitting sets of ``family`` (Berge's incremental algorithm).

    The empty family has the single transversal 0. A family containing the
    empty set has none.
    """
    current = [0]
    for edge in sorted(set(family), key=int.bit_count):
        if edge == 0:
            return ()
        hit = [t for t in current if t & edge]
        miss = [t for t in current if not t & edge]
        grown = {t | (1 << v) for t in miss for v in iter_bits(edge)}
        # a grown set survives only if no already-hitting set sits inside it
        candidates = hit + [g for g in grown if not any(h & g == h for h in hit)]
        current = list(minimal_sets(candidates))
    return sort_masks(current)
