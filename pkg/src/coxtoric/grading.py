"""Pic-graded Cox-ring presentations: degree matrices and Gale duality.

A presentation is a polynomial ring with one generator per column of an
integer degree matrix. The Gale dual (the saturated integer kernel of the
matrix, read columnwise) gives the rays of the associated toric one-skeleton.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import IntMat, invariant_factors, kernel_lattice, rank

Vec = tuple[int, ...]


@dataclass(frozen=True)
class DegreeMatrix:
    """Degree matrix of a graded polynomial ring: one column per generator."""

    columns: tuple[Vec, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.columns:
            raise ValueError("degree matrix needs at least one column")
        r = len(self.columns[0])
        if r < 1:
            raise ValueError("grading group rank must be positive")
        if any(len(c) != r for c in self.columns):
            raise ValueError("degree columns of unequal length")
        if len(self.labels) != len(self.columns):
            raise ValueError("one label per generator required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("generator labels must be distinct")

    @classmethod
    def make(cls, columns, labels=None) -> "DegreeMatrix":
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        if labels is None:
            labels = tuple(f"x{i + 1}" for i in range(len(cols)))
        return cls(cols, tuple(labels))

    @property
    def pic_rank(self) -> int:
        return len(self.columns[0])

    @property
    def num_gens(self) -> int:
        return len(self.columns)

    def as_intmat(self) -> IntMat:
        """The matrix with generator degrees as columns (pic_rank x num_gens)."""
        return IntMat.from_rows(
            [[c[i] for c in self.columns] for i in range(self.pic_rank)])


@dataclass(frozen=True)
class GaleDual:
    """Rays of the toric one-skeleton: one primitive ray per generator."""

    rays: tuple[Vec, ...]

    @property
    def ambient_dim(self) -> int:
        return len(self.rays[0])

    @property
    def num_rays(self) -> int:
        return len(self.rays)


def gale_dual(q: DegreeMatrix) -> GaleDual:
    """Gale duality: the columns of a kernel basis of the degree matrix.

    The kernel basis is saturated, so the rays span the cocharacter lattice
    and the ray matrix has the degree matrix as its own cokernel pairing.
    """
    m = q.as_intmat()
    if rank(m.to_rows()) < q.pic_rank:
        raise ValueError("grading not of full rank")
    k = kernel_lattice(m)
    if k.rows != q.num_gens - q.pic_rank:
        raise RuntimeError("kernel dimension mismatch")
    if not m.mul(k.transpose()).is_zero():
        raise RuntimeError("kernel verification failed")
    if k.rows and invariant_factors(k) != (1,) * k.rows:
        raise RuntimeError("kernel basis not saturated")
    return GaleDual(rays=tuple(k.col(j) for j in range(k.cols)))


@dataclass(frozen=True)
class DelPezzo4:
    """The degree-five del Pezzo presentation: ten generators graded by
    Pic = Z^5 in the basis (hyperplane, four exceptional classes)."""

    degrees: DegreeMatrix
    ample: Vec
    anti_canonical: Vec
    heft: Vec


def delpezzo4() -> DelPezzo4:
    columns = (
        (1, -1, -1, 0, 0),
        (1, -1, 0, -1, 0),
        (1, -1, 0, 0, -1),
        (1, 0, -1, -1, 0),
        (1, 0, -1, 0, -1),
        (1, 0, 0, -1, -1),
        (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1),
    )
    return DelPezzo4(
        degrees=DegreeMatrix.make(columns),
        ample=(11, -5, -3, -2, -1),
        anti_canonical=(3, -1, -1, -1, -1),
        heft=(3, 1, 1, 1, 1),
    )
