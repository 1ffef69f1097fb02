"""Lusztig data: coordinate vectors relative to a long word.

A reduced word (i_1, ..., i_N) for the longest Weyl group element orders the
positive roots as beta_1, ..., beta_N.  The Lusztig datum of a crystal
element with respect to that word is the vector of multiplicities of the
beta_j in its Kostant partition; conversion in either direction is pure
re-indexing.  The nz statistic counts nonzero coordinates and does not
depend on the chosen word.
"""

from __future__ import annotations

from typing import NamedTuple

from .cartan import DomainError, beta_sequence
from .segments import check_partition, xi


class LusztigDatum(NamedTuple):
    word: tuple
    coords: tuple

    def to_json_dict(self):
        return {"word": list(self.word), "coords": list(self.coords)}


def kostant_to_lusztig(lie, kp, word):
    """Coordinates of the partition in the root order cut out by the word."""
    check_partition(lie, kp)
    seq = beta_sequence(lie, word)
    coords = tuple(kp.get(root.label, 0) for root in seq)
    return LusztigDatum(tuple(word), coords)


def lusztig_to_kostant(lie, datum):
    """The Kostant partition with the datum's coordinates as multiplicities."""
    seq = beta_sequence(lie, datum.word)
    if len(datum.coords) != len(seq):
        raise DomainError(
            f"datum has {len(datum.coords)} coordinates, expected {len(seq)}"
        )
    kp = {}
    for root, c in zip(seq, datum.coords):
        if not isinstance(c, int) or c < 0:
            raise DomainError(
                f"coordinate for {root.label} must be a nonnegative integer, got {c!r}"
            )
        if c:
            kp[root.label] = c
    return kp


def theta(tab, word):
    """The Lusztig datum of a tableau: its Kostant partition, re-indexed."""
    return kostant_to_lusztig(tab.lie, xi(tab), word)


def nz(datum):
    """Number of nonzero coordinates (accepts a datum or a bare vector)."""
    coords = datum.coords if isinstance(datum, LusztigDatum) else datum
    return sum(1 for c in coords if c)
