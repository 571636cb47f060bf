"""Exact integer echelon accumulators used by the brute-force oracles.

All reduction is cross-multiplication (a*vec - b*pivot), so every
intermediate value is an exact integer; vectors are divided by their gcd
only when entries grow past a word-size threshold.  Rank is the number of
pivots collected.
"""
from __future__ import annotations

from math import gcd

_BIG = 1 << 64


def _normalize_dict(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        return {k: v // g for k, v in vec.items()}
    return vec


class SparseIntEchelon:
    """Incremental echelon basis of sparse integer vectors.

    Keys are orderable coordinate labels; the leading coordinate of a vector
    is its minimal key.  insert() reduces against the pivots found so far and
    either records a new pivot (returning True) or exhausts the vector as an
    exact linear dependency (returning False).
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def insert(self, vec):
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            lead = min(vec)
            piv = self.pivots.get(lead)
            if piv is None:
                self.pivots[lead] = _normalize_dict(vec)
                return True
            a, b = piv[lead], vec[lead]
            out = {k: a * v for k, v in vec.items()}
            for k, w in piv.items():
                nv = out.get(k, 0) - b * w
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            if out and max(map(abs, out.values())) > _BIG:
                out = _normalize_dict(out)
            vec = out
        return False


class DenseIntEchelon:
    """Same idea with list vectors over coordinates 0..n-1.

    Keeps the reduced pivot vectors accessible (pivot_vectors), which the
    initial-ideal oracles reuse as a spanning set for the next degree.
    """

    def __init__(self, length):
        self.length = length
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def pivot_rows(self):
        return sorted(self.pivots)

    def pivot_vectors(self):
        return [self.pivots[k] for k in sorted(self.pivots)]

    def insert(self, vec):
        vec = list(vec)
        lead = _first_nonzero(vec)
        while lead is not None:
            piv = self.pivots.get(lead)
            if piv is None:
                self.pivots[lead] = _normalize_list(vec)
                return True
            a, b = piv[lead], vec[lead]
            vec = [a * x - b * y for x, y in zip(vec, piv)]
            if max(map(abs, vec)) > _BIG:
                vec = _normalize_list(vec)
            lead = _first_nonzero(vec)
        return False


def _first_nonzero(vec):
    for i, v in enumerate(vec):
        if v:
            return i
    return None


def _normalize_list(vec):
    g = 0
    for v in vec:
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        return [v // g for v in vec]
    return vec
