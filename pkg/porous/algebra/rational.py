#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
➗ Rational - Álgebra linear racional exata

Posto por eliminação livre de frações (Bareiss), independência afim por
homogeneização e eliminação de Fourier-Motzkin com recuperação de solução.
Nada aqui usa ponto flutuante.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

# coeficientes · x <= lado direito
Inequality = Tuple[Tuple[Fraction, ...], Fraction]


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Posto de uma matriz inteira via eliminação de Bareiss."""
    matrix = [list(r) for r in rows if any(r)]
    if not matrix:
        return 0
    n_cols = len(matrix[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = next((i for i in range(rank, len(matrix)) if matrix[i][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for i in range(rank + 1, len(matrix)):
            factor = matrix[i][col]
            matrix[i] = [(pivot * matrix[i][j] - factor * matrix[rank][j]) // prev for j in range(n_cols)]
        prev = pivot
        rank += 1
        if rank == len(matrix):
            break
    return rank


def homogenize(points: Sequence[Sequence[int]]) -> List[List[int]]:
    return [[1] + list(p) for p in points]


def affinely_independent(points: Sequence[Sequence[int]]) -> bool:
    """Pontos são afimente independentes sse os homogeneizados têm posto cheio."""
    return integer_rank(homogenize(points)) == len(points)


def in_affine_span(points: Sequence[Sequence[int]], candidate: Sequence[int]) -> bool:
    base = homogenize(points)
    return integer_rank(base + homogenize([candidate])) == integer_rank(base)


def _normalized(coeffs: Sequence[Fraction], rhs: Fraction) -> Inequality:
    lead = next((abs(c) for c in coeffs if c != 0), None)
    if lead is None or lead == 1:
        return tuple(coeffs), rhs
    return tuple(c / lead for c in coeffs), rhs / lead


def fourier_motzkin(constraints: Sequence[Inequality], n_vars: int) -> Optional[List[Fraction]]:
    """
    Decide factibilidade de um sistema de desigualdades racionais

    Args:
        constraints: Lista de (coeficientes, rhs) significando coef · x <= rhs
        n_vars: Número de variáveis

    Returns:
        Um ponto factível, ou None se o sistema é infactível
    """
    current: Dict[Inequality, None] = {}
    for coeffs, rhs in constraints:
        current[_normalized([Fraction(c) for c in coeffs], Fraction(rhs))] = None

    stages: List[Tuple[int, List[Inequality]]] = []
    for var in reversed(range(n_vars)):
        items = list(current)
        stages.append((var, items))
        upper = [c for c in items if c[0][var] > 0]
        lower = [c for c in items if c[0][var] < 0]
        nxt: Dict[Inequality, None] = {c: None for c in items if c[0][var] == 0}
        for up_coeffs, up_rhs in upper:
            for lo_coeffs, lo_rhs in lower:
                scale_up = -lo_coeffs[var]
                scale_lo = up_coeffs[var]
                coeffs = tuple(scale_up * a + scale_lo * b for a, b in zip(up_coeffs, lo_coeffs))
                nxt[_normalized(coeffs, scale_up * up_rhs + scale_lo * lo_rhs)] = None
        current = nxt
        logger.debug(f"FM: variável {var} eliminada, {len(current)} restrições")

    if any(rhs < 0 for _, rhs in current):
        return None

    values: List[Fraction] = [Fraction(0)] * n_vars
    for var, items in reversed(stages):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, rhs in items:
            a = coeffs[var]
            if a == 0:
                continue
            bound = (rhs - sum(coeffs[j] * values[j] for j in range(var))) / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None:
            values[var] = lo
        elif hi is not None:
            values[var] = hi
    return values


def nonnegative_combination(
    generators: Sequence[Sequence[Fraction]],
    target: Sequence[Fraction],
    upper: Optional[Fraction] = None,
) -> Optional[List[Fraction]]:
    """
    Encontra λ >= 0 (e λ <= upper, se dado) com Σ λ_i g_i = target

    Returns:
        Coeficientes λ, ou None se não existem
    """
    n = len(generators)
    dim = len(target)
    zero = Fraction(0)
    constraints: List[Inequality] = []
    for i in range(n):
        unit = tuple(Fraction(1) if j == i else zero for j in range(n))
        constraints.append((tuple(-c for c in unit), zero))
        if upper is not None:
            constraints.append((unit, Fraction(upper)))
    for row in range(dim):
        coeffs = tuple(Fraction(g[row]) for g in generators)
        constraints.append((coeffs, Fraction(target[row])))
        constraints.append((tuple(-c for c in coeffs), -Fraction(target[row])))
    if n == 0:
        return [] if all(t == 0 for t in target) else None
    return fourier_motzkin(constraints, n)
