"""Sparse d-dimensional (0,1) matrices of order n, their hyperplanes and diagonals.

A tensor of dimension d and order n is indexed by tuples of d coordinates,
each in {0, ..., n-1}.  Only the unit entries are stored (adjacency tensors
of hypergraphs are sparse).  All values are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class BoolTensor:
    """A d-dimensional (0,1) matrix of order n, stored as the set of its unit entries."""

    dim: int
    order: int
    ones: frozenset[MultiIndex]


@dataclass(frozen=True)
class Diagonal:
    """n index tuples that pairwise differ in every coordinate.

    Equivalently, for each axis the coordinates of the entries form a
    permutation of {0, ..., n-1}.  Entries are stored sorted by their first
    coordinate, which is canonical because first coordinates are distinct.
    """

    dim: int
    order: int
    entries: tuple[MultiIndex, ...]


def _check_index(idx: Sequence[int], dim: int, order: int) -> MultiIndex:
    entry = tuple(int(c) for c in idx)
    if len(entry) != dim:
        raise ValidationError(f"index {entry!r} has length {len(entry)}, expected {dim}")
    for c in entry:
        if not 0 <= c < order:
            raise ValidationError(
                f"index {entry!r} has coordinate {c} outside 0..{order - 1}"
            )
    return entry


def make_tensor(dim: int, order: int, ones: Iterable[Sequence[int]]) -> BoolTensor:
    """Build a tensor with exactly the given unit entries (duplicates collapsed)."""
    if dim < 2:
        raise ValidationError(f"tensor dimension must be at least 2, got {dim}")
    if order < 1:
        raise ValidationError(f"tensor order must be at least 1, got {order}")
    entries = frozenset(_check_index(idx, dim, order) for idx in ones)
    return BoolTensor(dim, order, entries)


def hyperplane_ones(tensor: BoolTensor, axis: int, index: int) -> int:
    """Number of unit entries whose axis-th coordinate equals index."""
    if not 0 <= axis < tensor.dim:
        raise ValidationError(f"axis {axis} outside 0..{tensor.dim - 1}")
    if not 0 <= index < tensor.order:
        raise ValidationError(f"hyperplane index {index} outside 0..{tensor.order - 1}")
    return sum(1 for entry in tensor.ones if entry[axis] == index)


def hyperplane_counts(tensor: BoolTensor, axis: int) -> tuple[int, ...]:
    """Unit-entry counts of all n hyperplanes of one direction."""
    if not 0 <= axis < tensor.dim:
        raise ValidationError(f"axis {axis} outside 0..{tensor.dim - 1}")
    counts = [0] * tensor.order
    for entry in tensor.ones:
        counts[entry[axis]] += 1
    return tuple(counts)


def is_diagonal(dim: int, order: int, entries: Iterable[Sequence[int]]) -> bool:
    """True iff the entries form a diagonal for the given dimension and order.

    Checked against the definition: exactly ``order`` valid indices with
    pairwise Hamming distance equal to ``dim``.
    """
    items = list(entries)
    if len(set(map(tuple, items))) != len(items) or len(items) != order:
        return False
    try:
        idxs = [_check_index(e, dim, order) for e in items]
    except ValidationError:
        return False
    for i in range(len(idxs)):
        for j in range(i + 1, len(idxs)):
            if any(a == b for a, b in zip(idxs[i], idxs[j])):
                return False
    return True


def make_diagonal(dim: int, order: int, entries: Iterable[Sequence[int]]) -> Diagonal:
    items = [tuple(int(c) for c in e) for e in entries]
    if not is_diagonal(dim, order, items):
        raise ValidationError(
            f"{len(items)} entries do not form a diagonal of a "
            f"{dim}-dimensional matrix of order {order}"
        )
    return Diagonal(dim, order, tuple(sorted(items)))


def parse_tensor(text: str) -> BoolTensor:
    """Read the sparse text format: "d n" header, one entry of d coordinates per line.

    '#' starts a comment; blank lines are ignored.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ValidationError("empty tensor input")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ValidationError(f"line {lineno}: expected 'd n' header, got {' '.join(header)!r}")
    try:
        dim, order = int(header[0]), int(header[1])
    except ValueError:
        raise ValidationError(f"line {lineno}: non-integer header {' '.join(header)!r}") from None
    entries = []
    for lineno, parts in rows[1:]:
        if len(parts) != dim:
            raise ValidationError(f"line {lineno}: expected {dim} coordinates, got {len(parts)}")
        try:
            entries.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValidationError(f"line {lineno}: non-integer coordinate in {' '.join(parts)!r}") from None
    return make_tensor(dim, order, entries)


def format_tensor(tensor: BoolTensor) -> str:
    lines = [f"{tensor.dim} {tensor.order}"]
    lines.extend(" ".join(map(str, entry)) for entry in sorted(tensor.ones))
    return "\n".join(lines) + "\n"
