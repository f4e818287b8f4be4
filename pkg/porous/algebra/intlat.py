#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧮 Intlat - Álgebra de reticulados inteiros

Reticulados em forma normal de Hermite (HNF) por colunas, pertinência por
retro-substituição triangular e as operações sobre cosets (conjuntos
Z-lineares) usadas pela síntese de invariantes: cobertura, imagem por
matriz, inclusão e interseção.

Toda a aritmética é inteira de precisão arbitrária.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from porous.core.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

IntVec = Tuple[int, ...]
IntMat = Tuple[Tuple[int, ...], ...]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Retorna (x, y, g) com x*a + y*b == g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def _check_dim(operation: str, expected: int, vectors: Iterable[Sequence[int]]) -> None:
    for v in vectors:
        if len(v) != expected:
            raise DimensionMismatchError(operation, expected, len(v))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> IntVec:
    _check_dim("vec_sub", len(u), [v])
    return tuple(a - b for a, b in zip(u, v))


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMat:
    """Converte linhas em matriz imutável, exigindo formato quadrado."""
    matrix = tuple(tuple(int(x) for x in row) for row in rows)
    _check_dim("as_matrix", len(matrix), matrix)
    return matrix


def mat_vec(m: IntMat, v: Sequence[int]) -> IntVec:
    _check_dim("mat_vec", len(v), m)
    if len(m) != len(v):
        raise DimensionMismatchError("mat_vec", len(m), len(v))
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def identity(dim: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


@dataclass(frozen=True)
class Lattice:
    """
    🔷 Reticulado inteiro em forma normal de Hermite

    A base é triangular inferior por colunas: cada vetor tem um pivô
    positivo na primeira coordenada não nula, os pivôs aparecem em linhas
    estritamente crescentes e, na linha de cada pivô, as entradas dos
    vetores anteriores ficam em [0, pivô). Base vazia denota {0}.
    """

    dim: int
    basis: Tuple[IntVec, ...] = ()
    pivots: Tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full(self) -> bool:
        return self.rank == self.dim

    @property
    def volume(self) -> int:
        """Produto dos pivôs (volume do paralelepípedo fundamental no posto)."""
        result = 1
        for vector, row in zip(self.basis, self.pivots):
            result *= vector[row]
        return result

    def __contains__(self, v: Sequence[int]) -> bool:
        return lattice_member(self, v)


def hnf(vectors: Iterable[Sequence[int]], dim: Optional[int] = None) -> Lattice:
    """
    Calcula a forma normal de Hermite do reticulado gerado pelos vetores

    Args:
        vectors: Geradores (todos da mesma dimensão)
        dim: Dimensão, obrigatória quando não há geradores

    Returns:
        Reticulado canônico: dois conjuntos geradores do mesmo reticulado
        produzem o mesmo valor
    """
    cols: List[List[int]] = [list(v) for v in vectors]
    if dim is None:
        if not cols:
            raise DimensionMismatchError("hnf", 1, 0, suggestion="Informe a dimensão para conjuntos vazios")
        dim = len(cols[0])
    _check_dim("hnf", dim, cols)

    cols = [c for c in cols if any(c)]
    n = len(cols)
    k = 0
    pivots: List[int] = []
    for row in range(dim):
        if k >= n:
            break
        # Euclides por colunas: concentra o mdc da linha na coluna k
        for j in range(k + 1, n):
            while cols[j][row] != 0:
                q = cols[k][row] // cols[j][row]
                if q:
                    cols[k] = [a - q * b for a, b in zip(cols[k], cols[j])]
                cols[k], cols[j] = cols[j], cols[k]
        pivot = cols[k][row]
        if pivot == 0:
            continue
        if pivot < 0:
            cols[k] = [-a for a in cols[k]]
            pivot = -pivot
        for j in range(k):
            q = cols[j][row] // pivot
            if q:
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[k])]
        pivots.append(row)
        k += 1

    basis = tuple(tuple(c) for c in cols[:k])
    return Lattice(dim=dim, basis=basis, pivots=tuple(pivots))


def _reduce(lattice: Lattice, v: Sequence[int]) -> Tuple[IntVec, bool]:
    """Reduz v módulo o reticulado; retorna (resto, pertence)."""
    r = list(v)
    member = True
    next_basis = 0
    for row in range(lattice.dim):
        if next_basis < lattice.rank and lattice.pivots[next_basis] == row:
            b = lattice.basis[next_basis]
            q = r[row] // b[row]
            if q:
                r = [x - q * y for x, y in zip(r, b)]
            if r[row] != 0:
                member = False
            next_basis += 1
        elif r[row] != 0:
            member = False
    return tuple(r), member


def lattice_member(lattice: Lattice, v: Sequence[int]) -> bool:
    """Verdadeiro sse v é combinação inteira da base."""
    _check_dim("lattice_member", lattice.dim, [v])
    return _reduce(lattice, v)[1]


def reduce_modulo(lattice: Lattice, v: Sequence[int]) -> IntVec:
    """Representante canônico de v + L: cada coordenada de pivô em [0, pivô)."""
    _check_dim("reduce_modulo", lattice.dim, [v])
    return _reduce(lattice, v)[0]


def lattice_join(*lattices: Lattice) -> Lattice:
    dim = lattices[0].dim
    vectors: List[IntVec] = []
    for lat in lattices:
        if lat.dim != dim:
            raise DimensionMismatchError("lattice_join", dim, lat.dim)
        vectors.extend(lat.basis)
    return hnf(vectors, dim)


@dataclass(frozen=True)
class LatticeCoset:
    """
    🔶 Conjunto Z-linear {base + L}

    Sempre construído por `LatticeCoset.make`, que coloca o reticulado em
    HNF e reduz a base; igualdade estrutural coincide com igualdade de
    conjuntos.
    """

    base: IntVec
    lattice: Lattice

    @classmethod
    def make(cls, base: Sequence[int], periods: Iterable[Sequence[int]] = ()) -> "LatticeCoset":
        base_vec = tuple(int(x) for x in base)
        lattice = hnf(periods, len(base_vec))
        return cls(base=reduce_modulo(lattice, base_vec), lattice=lattice)

    @classmethod
    def from_lattice(cls, base: Sequence[int], lattice: Lattice) -> "LatticeCoset":
        return cls(base=reduce_modulo(lattice, tuple(base)), lattice=lattice)

    @property
    def dim(self) -> int:
        return self.lattice.dim

    @property
    def periods(self) -> Tuple[IntVec, ...]:
        return self.lattice.basis

    def __contains__(self, v: Sequence[int]) -> bool:
        return coset_member(self, v)

    def render(self) -> str:
        return render_coset(self)

    def __str__(self) -> str:
        return render_coset(self)


def _require_same_dim(operation: str, a: LatticeCoset, b: LatticeCoset) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(operation, a.dim, b.dim)


def coset_member(coset: LatticeCoset, v: Sequence[int]) -> bool:
    _check_dim("coset_member", coset.dim, [v])
    return lattice_member(coset.lattice, vec_sub(v, coset.base))


def coset_covering(first: LatticeCoset, second: LatticeCoset) -> LatticeCoset:
    """
    Menor conjunto Z-linear contendo os dois cosets

    Base do primeiro; reticulado gerado pelos períodos de ambos mais a
    diferença entre as bases.
    """
    _require_same_dim("coset_covering", first, second)
    generators = list(first.periods) + list(second.periods)
    generators.append(vec_sub(second.base, first.base))
    return LatticeCoset.make(first.base, generators)


def coset_image(m: IntMat, coset: LatticeCoset) -> LatticeCoset:
    """Imagem exata {M q + (M p_1) Z + ...} do coset pela matriz."""
    if len(m) != coset.dim:
        raise DimensionMismatchError("coset_image", coset.dim, len(m))
    return LatticeCoset.make(mat_vec(m, coset.base), [mat_vec(m, p) for p in coset.periods])


def coset_subset(first: LatticeCoset, second: LatticeCoset) -> bool:
    _require_same_dim("coset_subset", first, second)
    if not lattice_member(second.lattice, vec_sub(first.base, second.base)):
        return False
    return all(lattice_member(second.lattice, p) for p in first.periods)


def coset_intersects(first: LatticeCoset, second: LatticeCoset) -> bool:
    """Cosets se intersectam sse a diferença das bases está em L1 + L2."""
    _require_same_dim("coset_intersects", first, second)
    joined = lattice_join(first.lattice, second.lattice)
    return lattice_member(joined, vec_sub(first.base, second.base))


def _format_period(coefficient: int, suffix: str) -> str:
    return f"+{suffix}" if coefficient == 1 else f"+{coefficient}{suffix}"


def render_coset(coset: LatticeCoset) -> str:
    """
    Renderização canônica: {3 +5Z} em dimensão 1, {(1, 1) +(1, 0)Z} acima
    """
    if coset.dim == 1:
        head = str(coset.base[0])
        tail = [_format_period(p[0], "Z") for p in coset.periods]
    else:
        head = _format_vec(coset.base)
        tail = [f"+{_format_vec(p)}Z" for p in coset.periods]
    return "{" + " ".join([head] + tail) + "}"


def _format_vec(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def format_matrix(m: IntMat) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in m) + "]"
