#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🔒 Zinv - Invariante Z-linear mais forte de um LDS inteiro

Parte do coset gerado pela base afim alcançável e satura pela cobertura
com as imagens de cada matriz até o ponto fixo. A cada rodada o volume do
reticulado (produto dos pivôs) só diminui, o que garante término.
"""

import logging
from typing import Iterator

from porous.algebra.intlat import LatticeCoset, coset_covering, coset_image
from porous.core.models import LinearSystem
from porous.synthesis.affbasis import reachable_affine_basis

logger = logging.getLogger(__name__)


def iterate_saturation(sys: LinearSystem) -> Iterator[LatticeCoset]:
    """
    Gera L_0, L_1, ... até o ponto fixo (inclusive)

    L_{i+1} é a cobertura de L_i com M_j(L_i) para todas as matrizes.
    """
    basis = reachable_affine_basis(sys)
    current = LatticeCoset.make(sys.x0, basis.periods)
    yield current

    rounds = 0
    while True:
        following = current
        for m in sys.matrices:
            following = coset_covering(following, coset_image(m, current))
        rounds += 1
        if following == current:
            logger.debug(f"Saturação estável após {rounds} rodadas (volume {current.lattice.volume})")
            return
        current = following
        yield current


def strongest_zlinear_invariant(sys: LinearSystem) -> LatticeCoset:
    """
    Invariante indutivo Z-linear mais forte contendo a órbita

    Args:
        sys: Sistema linear inteiro

    Returns:
        Coset I com x0 em I, M_i(I) ⊆ I e I contido em todo invariante
        Z-linear indutivo
    """
    invariant = None
    for invariant in iterate_saturation(sys):
        pass
    return invariant
