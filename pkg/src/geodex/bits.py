"""Vertex sets as int bit masks.

A vertex set over ``0..n-1`` is an ``int`` whose bit ``v`` marks membership.
Union, intersection and subset tests are the usual ``|``, ``&`` and
``a & ~b == 0``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def full_mask(n: int) -> VertexSet:
    return (1 << n) - 1


def members(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0
