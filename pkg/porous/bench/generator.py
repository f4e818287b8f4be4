#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🎲 Generator - Instâncias aleatórias reprodutíveis para o benchmark

Sete tipos de função; cada combinação não vazia de tipos é uma família.
Para cada tipo incluído o número de funções segue uma geométrica de
parâmetro 1/2 truncada em [1, 9]. O gerador é determinístico em
(seed, size, combinação).
"""

import itertools
import random
from enum import Enum
from typing import FrozenSet, Iterable, List, Tuple

from porous.core.exceptions import PreconditionError
from porous.core.models import AffineFn, AffineSystem, PointTarget

MAX_PER_TYPE = 9


class FunctionType(Enum):
    """Tipos de função do gerador"""
    POS_COUNTER = "pos_counter"              # x + b
    NEG_COUNTER = "neg_counter"              # x - b
    GROWING = "growing"                      # a·x ± b
    INVERTING_GROWING = "inverting_growing"  # -a·x ± b
    INVERTER_POS = "inverter_pos"            # -x + b
    INVERTER_NEG = "inverter_neg"            # -x - b
    PURE_INVERTER = "pure_inverter"          # -x


ALL_TYPES: Tuple[FunctionType, ...] = tuple(FunctionType)

Combo = FrozenSet[FunctionType]


def combo_mask(combo: Iterable[FunctionType]) -> int:
    """Máscara de bits na ordem de declaração dos tipos."""
    members = set(combo)
    return sum(1 << i for i, t in enumerate(ALL_TYPES) if t in members)


def all_combos() -> List[Combo]:
    """As 127 combinações não vazias, em ordem de máscara."""
    combos = [
        frozenset(c)
        for r in range(1, len(ALL_TYPES) + 1)
        for c in itertools.combinations(ALL_TYPES, r)
    ]
    return sorted(combos, key=combo_mask)


def _count(rng: random.Random) -> int:
    count = 1
    while count < MAX_PER_TYPE and rng.random() < 0.5:
        count += 1
    return count


def _sample(kind: FunctionType, size: int, rng: random.Random) -> AffineFn:
    b = rng.randint(1, size)
    if kind is FunctionType.POS_COUNTER:
        return AffineFn(1, b)
    if kind is FunctionType.NEG_COUNTER:
        return AffineFn(1, -b)
    if kind is FunctionType.INVERTER_POS:
        return AffineFn(-1, b)
    if kind is FunctionType.INVERTER_NEG:
        return AffineFn(-1, -b)
    if kind is FunctionType.PURE_INVERTER:
        return AffineFn(-1, 0)

    a = rng.randint(2, max(2, size))
    sign = rng.choice((1, -1))
    if kind is FunctionType.GROWING:
        return AffineFn(a, sign * b)
    return AffineFn(-a, sign * b)


def gen_random(seed: int, size: int, combo: Iterable[FunctionType]) -> AffineSystem:
    """
    Gera uma instância 1-D com alvo pontual

    Args:
        seed: Semente
        size: Parâmetro de tamanho (limita coeficientes, início e alvo)
        combo: Tipos de função incluídos (não vazio)

    Returns:
        AffineSystem com ao menos uma função por tipo, início em [1, size]
        e alvo em [1, 4·size]
    """
    kinds = [t for t in ALL_TYPES if t in set(combo)]
    if not kinds:
        raise PreconditionError("gen_random", "a combinação de tipos não pode ser vazia")
    if size < 1:
        raise PreconditionError("gen_random", f"size deve ser positivo, recebido {size}")

    rng = random.Random(f"{seed}:{size}:{combo_mask(kinds)}")
    fns: List[AffineFn] = []
    for kind in kinds:
        fns.extend(_sample(kind, size, rng) for _ in range(_count(rng)))

    start = rng.randint(1, size)
    target = rng.randint(1, 4 * size)
    return AffineSystem(start=start, fns=tuple(fns), target=PointTarget(target))
