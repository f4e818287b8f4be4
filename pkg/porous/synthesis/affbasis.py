#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧭 Affbasis - Base afim de pontos alcançáveis

Busca em largura podada: um filho só entra na base (e na fila) quando é
afimente independente dos pontos já escolhidos. Quando a fila esvazia, o
fecho afim da base é invariante por todas as matrizes e contém a órbita.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, List, Tuple

from porous.algebra.intlat import IntVec, vec_sub
from porous.algebra.rational import affinely_independent
from porous.core.models import LinearSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineBasis:
    """Pontos alcançáveis afimente independentes; o primeiro é x0."""

    points: Tuple[IntVec, ...]

    @property
    def periods(self) -> Tuple[IntVec, ...]:
        """Diferenças r_i − x0, geradoras iniciais do reticulado."""
        origin = self.points[0]
        return tuple(vec_sub(p, origin) for p in self.points[1:])

    @property
    def affine_rank(self) -> int:
        return len(self.points) - 1


def reachable_affine_basis(sys: LinearSystem) -> AffineBasis:
    """
    Calcula uma base afim da órbita do sistema

    Args:
        sys: Sistema linear inteiro

    Returns:
        Base cujo fecho afim coincide com o da órbita
    """
    points: List[IntVec] = [sys.x0]
    queue: Deque[IntVec] = deque([sys.x0])
    while queue and len(points) <= sys.dim:
        current = queue.popleft()
        for index in range(len(sys.matrices)):
            child = sys.step(index, current)
            if affinely_independent(points + [child]):
                points.append(child)
                queue.append(child)
                if len(points) > sys.dim:
                    break

    logger.debug(f"Base afim com {len(points)} pontos em dimensão {sys.dim}")
    return AffineBasis(points=tuple(points))
