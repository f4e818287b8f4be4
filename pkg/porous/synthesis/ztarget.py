#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🎯 Ztarget - Alcançabilidade de alvos Z-lineares de dimensão cheia

O alvo é reescrito como união de classes residuais módulo m (m·e_i no
reticulado do alvo para todo i). Como a dinâmica respeita congruências,
a busca em largura sobre os resíduos de x0 decide a alcançabilidade; no
caso negativo, as classes visitadas formam o invariante separador.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from math import lcm
from typing import Callable, Deque, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from porous.algebra.intlat import IntVec, LatticeCoset, lattice_member, mat_vec, vec_sub
from porous.algebra.semilinear import SemiLinearSet
from porous.config.settings import get_settings
from porous.core.exceptions import NotFullDimensionalError, PreconditionError, ResourceLimitError
from porous.core.models import Decision, LinearSystem, Reachability, Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HybridTarget:
    """
    🧮 Alvo como união de classes residuais

    A união de {b + m·e_1 Z + ... + m·e_d Z} sobre os resíduos b é igual
    ao alvo original.
    """

    m: int
    residues: FrozenSet[IntVec]
    dim: int

    def components(self) -> List[LatticeCoset]:
        return [residue_coset(b, self.m) for b in sorted(self.residues)]


@dataclass(frozen=True)
class ResidueSearch:
    """Resultado da busca sobre resíduos: estados visitados e, se houver, a palavra até o alvo."""

    visited: FrozenSet[Hashable]
    word: Optional[Tuple[int, ...]] = None


def residue_coset(residue: Sequence[int], m: int) -> LatticeCoset:
    dim = len(residue)
    return LatticeCoset.make(residue, [tuple(m if i == j else 0 for j in range(dim)) for i in range(dim)])


def _minimal_axis_multiple(target: LatticeCoset, axis: int) -> int:
    volume = target.lattice.volume
    unit = [0] * target.dim
    for divisor in range(1, volume + 1):
        if volume % divisor:
            continue
        unit[axis] = divisor
        if lattice_member(target.lattice, unit):
            return divisor
    return volume


def _check_state_space(states: int, cap: int) -> None:
    if states > cap:
        raise ResourceLimitError(
            "ztarget_states",
            f"espaço de resíduos com {states} estados",
            limit=cap,
            suggestion="Aumente POROUS_ZTARGET_STATE_CAP ou use um alvo com módulo menor",
        )


def hybridize_target(target: LatticeCoset, state_cap: Optional[int] = None) -> HybridTarget:
    """
    Reescreve um alvo de dimensão cheia como classes residuais módulo m

    Args:
        target: Coset Z-linear de dimensão cheia
        state_cap: Limite para m^d (padrão da configuração)

    Returns:
        HybridTarget com o menor m da forma mmc dos m_i mínimos por eixo
    """
    if not target.lattice.is_full:
        raise NotFullDimensionalError(target.lattice.rank, target.dim)
    cap = get_settings().ztarget_state_cap if state_cap is None else state_cap

    m = lcm(*(_minimal_axis_multiple(target, i) for i in range(target.dim)))
    _check_state_space(m ** target.dim, cap)

    residues = frozenset(
        v for v in itertools.product(range(m), repeat=target.dim)
        if lattice_member(target.lattice, vec_sub(v, target.base))
    )
    logger.debug(f"Alvo hibridizado: m={m}, {len(residues)} resíduos")
    return HybridTarget(m=m, residues=residues, dim=target.dim)


def residue_closure(
    start: Hashable,
    steps: Sequence[Callable[[Hashable], Hashable]],
    is_target: Optional[Callable[[Hashable], bool]] = None,
    cap: Optional[int] = None,
) -> ResidueSearch:
    """
    Fecho de um estado finito sob funções de transição, em largura

    Args:
        start: Estado inicial
        steps: Funções de transição (o índice vira a letra da palavra)
        is_target: Predicado de parada; quando satisfeito retorna a palavra
        cap: Número máximo de estados visitados

    Returns:
        Estados visitados e palavra até o alvo (se encontrado)
    """
    parents: Dict[Hashable, Optional[Tuple[Hashable, int]]] = {start: None}
    queue: Deque[Hashable] = deque([start])

    def word_to(state: Hashable) -> Tuple[int, ...]:
        letters: List[int] = []
        while parents[state] is not None:
            state, letter = parents[state]
            letters.append(letter)
        return tuple(reversed(letters))

    if is_target is not None and is_target(start):
        return ResidueSearch(visited=frozenset(parents), word=())

    while queue:
        state = queue.popleft()
        for index, step in enumerate(steps):
            nxt = step(state)
            if nxt in parents:
                continue
            parents[nxt] = (state, index)
            if cap is not None and len(parents) > cap:
                raise ResourceLimitError("residue_states", f"mais de {cap} resíduos visitados", limit=cap)
            if is_target is not None and is_target(nxt):
                return ResidueSearch(visited=frozenset(parents), word=word_to(nxt))
            queue.append(nxt)

    return ResidueSearch(visited=frozenset(parents))


def replay_word(sys: LinearSystem, word: Iterable[int]) -> Tuple[IntVec, ...]:
    """Reexecuta uma palavra de matrizes a partir de x0; retorna o traço."""
    trace = [sys.x0]
    for index in word:
        trace.append(sys.step(index, trace[-1]))
    return tuple(trace)


def _matrix_step(matrix, m: int) -> Callable[[IntVec], IntVec]:
    def step(r: IntVec) -> IntVec:
        return tuple(x % m for x in mat_vec(matrix, r))
    return step


def decide_zlinear_targets(
    sys: LinearSystem,
    targets: Sequence[LatticeCoset],
    state_cap: Optional[int] = None,
) -> Decision:
    """
    Decide alcançabilidade de uma união de alvos Z-lineares de dimensão cheia

    Cada componente é hibridizado; o módulo comum é o mmc dos módulos.
    """
    for target in targets:
        if target.dim != sys.dim:
            raise PreconditionError(
                "decide_zlinear_target",
                f"alvo de dimensão {target.dim} para sistema de dimensão {sys.dim}",
            )
    cap = get_settings().ztarget_state_cap if state_cap is None else state_cap
    hybrids = [hybridize_target(t, cap) for t in targets]
    m = lcm(*(h.m for h in hybrids))
    _check_state_space(m ** sys.dim, cap)

    def is_target(r: IntVec) -> bool:
        return any(tuple(x % h.m for x in r) in h.residues for h in hybrids)

    start = tuple(x % m for x in sys.x0)
    steps = [_matrix_step(matrix, m) for matrix in sys.matrices]
    search = residue_closure(start, steps, is_target, cap)

    if search.word is not None:
        trace = replay_word(sys, search.word)
        logger.debug(f"Alvo alcançado por palavra de comprimento {len(search.word)}")
        return Decision(
            status=Reachability.REACHABLE,
            witness=Witness(word=search.word, trace=trace),
        )

    invariant = SemiLinearSet.of(residue_coset(r, m) for r in search.visited)
    logger.debug(f"Alvo inalcançável: {len(search.visited)} classes residuais módulo {m}")
    return Decision(status=Reachability.UNREACHABLE, invariant=invariant)


def decide_zlinear_target(sys: LinearSystem, target: LatticeCoset, state_cap: Optional[int] = None) -> Decision:
    """
    Decide alcançabilidade de um alvo Z-linear de dimensão cheia

    Args:
        sys: Sistema linear inteiro
        target: Coset de dimensão cheia
        state_cap: Limite de estados residuais (padrão da configuração)

    Returns:
        REACHABLE com testemunha concreta, ou UNREACHABLE com invariante
        formado pelas classes residuais alcançáveis
    """
    return decide_zlinear_targets(sys, [target], state_cap)
