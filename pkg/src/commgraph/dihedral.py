"""Generalized dihedral group D(G) = G semidirect C2, with C2 acting by inversion.

Elements are (g, s) with g in the abelian base group and s in {+1, -1}.
Multiplication, commutation, the center, and the three-part vertex partition
(center / remaining sign-+1 elements / sign--1 blocks of equal square) live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import NamedTuple

from .abelian import AbelianGroup


class ElementaryAbelian2Error(ValueError):
    """The omega partition and the closed-form invariants need a non-abelian D(G)."""


class DihedralElement(NamedTuple):
    g: tuple[int, ...]
    s: int


OMEGA1 = "omega1"
OMEGA2 = "omega2"


def block_label(i: int) -> str:
    """Label of the i-th sign--1 block, 1-based."""
    return f"block{i}"


def part_kind(label: str) -> str:
    """Collapse a vertex label to one of omega1 / omega2 / omega3."""
    if label in (OMEGA1, OMEGA2, "omega3"):
        return label
    if label.startswith("block"):
        return "omega3"
    raise ValueError(f"unknown part label {label!r}")


def d_identity(group: AbelianGroup) -> DihedralElement:
    return DihedralElement(group.identity, 1)


def all_elements(group: AbelianGroup) -> tuple[DihedralElement, ...]:
    """The 2n elements: sign +1 in lexicographic order, then sign -1."""
    gs = list(group.elements())
    return tuple(
        [DihedralElement(g, 1) for g in gs] + [DihedralElement(g, -1) for g in gs]
    )


def _check(group: AbelianGroup, x: DihedralElement) -> None:
    group.check_element(x.g)
    if x.s not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {x.s!r}")


def d_mul(group: AbelianGroup, x: DihedralElement, y: DihedralElement) -> DihedralElement:
    """(g1, s1) * (g2, s2) = (g1 + s1*g2, s1*s2)."""
    _check(group, x)
    _check(group, y)
    g = group.add(x.g, y.g) if x.s == 1 else group.sub(x.g, y.g)
    return DihedralElement(g, x.s * y.s)


def commutes(group: AbelianGroup, x: DihedralElement, y: DihedralElement) -> bool:
    """Commutation test via the closed criteria, no multiplication performed.

    Two sign-+1 elements always commute; two sign--1 elements commute iff
    their base elements have equal squares; a mixed pair commutes iff the
    sign-+1 element is central (its base squares to the identity).
    """
    _check(group, x)
    _check(group, y)
    if x.s == 1 and y.s == 1:
        return True
    if x.s == -1 and y.s == -1:
        return group.square(x.g) == group.square(y.g)
    plus = x if x.s == 1 else y
    return group.square(plus.g) == group.identity


def commutes_by_multiplication(
    group: AbelianGroup, x: DihedralElement, y: DihedralElement
) -> bool:
    """Definitional check d_mul(x, y) == d_mul(y, x); cross-validates commutes()."""
    return d_mul(group, x, y) == d_mul(group, y, x)


def center(group: AbelianGroup) -> tuple[DihedralElement, ...]:
    """Central elements of D(G), in canonical order.

    For non-abelian D(G) these are exactly the sign-+1 involutions, 2**r of
    them. When G is an elementary abelian 2-group, D(G) is abelian and the
    center is all 2n elements.
    """
    if group.is_elementary_abelian_2():
        return all_elements(group)
    return tuple(DihedralElement(g, 1) for g in group.involutions())


@dataclass(frozen=True)
class OmegaPartition:
    """Vertex partition of D(G): center, other sign-+1 elements, sign--1 blocks.

    Blocks are the classes of sign--1 elements whose bases share a square,
    ordered by lexicographically smallest square value; members are in
    lexicographic order. vertices() fixes the canonical vertex order used by
    every graph built downstream: omega1, omega2, then the blocks in order.
    """

    omega1: tuple[DihedralElement, ...]
    omega2: tuple[DihedralElement, ...]
    blocks: tuple[tuple[DihedralElement, ...], ...]

    def vertices(self) -> tuple[DihedralElement, ...]:
        return self.omega1 + self.omega2 + tuple(chain.from_iterable(self.blocks))

    def part_labels(self) -> tuple[str, ...]:
        labels = [OMEGA1] * len(self.omega1) + [OMEGA2] * len(self.omega2)
        for i, block in enumerate(self.blocks, start=1):
            labels.extend([block_label(i)] * len(block))
        return tuple(labels)


def omega_partition(group: AbelianGroup) -> OmegaPartition:
    """Partition D(G) into omega1 / omega2 / blocks; rejects abelian D(G)."""
    if group.is_elementary_abelian_2():
        spec = "x".join(f"Z{m}" for m in group.moduli)
        raise ElementaryAbelian2Error(
            f"D({spec}) is abelian (G elementary abelian 2-group); no omega partition"
        )
    invs = group.involutions()
    inv_set = set(invs)
    omega1 = tuple(DihedralElement(g, 1) for g in invs)
    omega2 = tuple(DihedralElement(g, 1) for g in group.elements() if g not in inv_set)
    by_square: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for g in group.elements():
        by_square.setdefault(group.square(g), []).append(g)
    blocks = tuple(
        tuple(DihedralElement(g, -1) for g in by_square[sq]) for sq in sorted(by_square)
    )
    return OmegaPartition(omega1, omega2, blocks)


def format_element(x: DihedralElement) -> str:
    """Text form '(g1,g2,...;s)', e.g. '(3,1;-)'."""
    return "({};{})".format(",".join(str(c) for c in x.g), "+" if x.s == 1 else "-")
