#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📜 Cert - Verificação independente de certificados e busca de testemunhas

O verificador usa apenas imagem e inclusão de componentes (semilinear e
intlat), nunca o código de síntese. Cada par (componente, função) precisa
de um único componente do invariante que contenha a imagem.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Deque, Dict, List, Optional, Tuple, Union

from porous.algebra.intlat import LatticeCoset, coset_image, coset_intersects, coset_member, format_matrix
from porous.algebra.semilinear import (
    Component,
    ComponentIndex,
    SemiLinearSet,
    component_contains,
    image_1d,
    intersect_empty_1d,
    render_component,
)
from porous.config.settings import get_settings
from porous.core.models import AffineFn, AffineSystem, LinearSystem, Witness

logger = logging.getLogger(__name__)

System = Union[AffineSystem, LinearSystem]


@dataclass(frozen=True)
class ProofRow:
    """Linha da tabela de prova: fn(source) = image ⊆ within."""

    source: Component
    fn: Any
    image: Component
    within: Component


@dataclass(frozen=True)
class Certificate:
    """
    ✅ Prova de invariância

    Uma linha por par (componente, função); `start_member` é o componente
    que contém o início e `target_disjoint` indica se o alvo foi verificado
    disjunto (None quando não verificado).
    """

    invariant: SemiLinearSet
    rows: Tuple[ProofRow, ...]
    start_member: Component
    target_disjoint: Optional[bool] = None


@dataclass(frozen=True)
class CertificateFailure:
    """
    ❌ Falha de verificação

    reason: 'closure' (par não coberto), 'start' ou 'target'.
    """

    reason: str
    component: Optional[Component] = None
    fn: Any = None
    image: Optional[Component] = None

    def describe(self) -> str:
        if self.reason == "closure":
            return f"{render_component(self.image)} não está contido em nenhum componente ({render_component(self.component)} sob {render_fn(self.fn)})"
        if self.reason == "start":
            return "o início não pertence ao invariante"
        return f"o alvo intersecta {render_component(self.component)}"


def render_fn(fn: Any) -> str:
    if isinstance(fn, AffineFn):
        return fn.render()
    return format_matrix(fn)


def _functions(sys: System) -> List[Any]:
    if isinstance(sys, AffineSystem):
        return list(sys.fns)
    return list(sys.matrices)


def _image(fn: Any, component: Component) -> Component:
    if isinstance(component, LatticeCoset):
        return coset_image(fn, component)
    return image_1d(fn, component)


def _start(sys: System):
    return sys.start if isinstance(sys, AffineSystem) else sys.x0


def _meets_target(sys: System, component: Component) -> bool:
    if isinstance(sys, AffineSystem):
        return not intersect_empty_1d(component, sys.target.as_set())
    if isinstance(sys.target, LatticeCoset):
        return coset_intersects(component, sys.target)
    return coset_member(component, sys.target)


def check_inductive(
    invariant: SemiLinearSet,
    sys: System,
    check_target: bool = True,
) -> Union[Certificate, CertificateFailure]:
    """
    Verifica que um conjunto semi-linear é um invariante indutivo do sistema

    Args:
        invariant: Conjunto candidato
        sys: Sistema afim 1-D (componentes LinearSet1D) ou LDS (cosets)
        check_target: Também exigir disjunção com o alvo, se houver

    Returns:
        Certificate com a tabela de prova, ou CertificateFailure com o
        primeiro par não coberto
    """
    start = _start(sys)
    start_member = next((c for c in invariant.components if component_contains(c, start)), None)
    if start_member is None:
        return CertificateFailure(reason="start")

    index = ComponentIndex(invariant.components)
    rows: List[ProofRow] = []
    for component in invariant.components:
        for fn in _functions(sys):
            image = _image(fn, component)
            within = index.first_covering(image)
            if within is None:
                logger.debug(f"Par não coberto: {render_component(component)} sob {render_fn(fn)}")
                return CertificateFailure(reason="closure", component=component, fn=fn, image=image)
            rows.append(ProofRow(source=component, fn=fn, image=image, within=within))

    target_disjoint: Optional[bool] = None
    if check_target and sys.target is not None:
        for component in invariant.components:
            if _meets_target(sys, component):
                return CertificateFailure(reason="target", component=component)
        target_disjoint = True

    return Certificate(
        invariant=invariant,
        rows=tuple(rows),
        start_member=start_member,
        target_disjoint=target_disjoint,
    )


def _hits_target(sys: System, value) -> bool:
    if isinstance(sys, AffineSystem):
        return sys.target is not None and sys.target.contains(value)
    return sys.target_contains(value)


def _successor(sys: System, index: int, value):
    if isinstance(sys, AffineSystem):
        return sys.fns[index](value)
    return sys.step(index, value)


def find_witness(sys: System, budget: Optional[int] = None) -> Optional[Witness]:
    """
    Busca em largura pela palavra mais curta do início até o alvo

    Args:
        sys: Sistema com alvo
        budget: Máximo de nós visitados (padrão da configuração)

    Returns:
        Witness com a menor palavra (índice de função como desempate),
        ou None se o orçamento esgotar ou a órbita terminar sem alvo
    """
    limit = get_settings().witness_budget if budget is None else budget
    start = _start(sys)
    count = len(_functions(sys))
    parents: Dict[Any, Optional[Tuple[Any, int]]] = {start: None}

    def build(value) -> Witness:
        word: List[int] = []
        trace = [value]
        while parents[value] is not None:
            value, index = parents[value]
            word.append(index)
            trace.append(value)
        return Witness(word=tuple(reversed(word)), trace=tuple(reversed(trace)))

    if _hits_target(sys, start):
        return build(start)

    queue: Deque[Any] = deque([start])
    while queue:
        value = queue.popleft()
        for index in range(count):
            nxt = _successor(sys, index, value)
            if nxt in parents:
                continue
            parents[nxt] = (value, index)
            if _hits_target(sys, nxt):
                return build(nxt)
            if len(parents) >= limit:
                logger.debug(f"Orçamento de testemunha esgotado ({limit} nós)")
                return None
            queue.append(nxt)
    return None


def replay(sys: System, word: Tuple[int, ...]) -> Tuple:
    """Recalcula o traço de uma palavra a partir do início."""
    trace = [_start(sys)]
    for index in word:
        trace.append(_successor(sys, index, trace[-1]))
    return tuple(trace)


def witness_is_valid(sys: System, witness: Witness) -> bool:
    return replay(sys, witness.word) == tuple(witness.trace) and _hits_target(sys, witness.trace[-1])


def orbit_sample(sys: System, budget: Optional[int] = None) -> List[Any]:
    """Pontos da órbita em ordem de largura, até o orçamento."""
    limit = get_settings().orbit_check_budget if budget is None else budget
    start = _start(sys)
    seen = {start}
    order = [start]
    queue: Deque[Any] = deque([start])
    while queue and len(order) < limit:
        value = queue.popleft()
        for index in range(len(_functions(sys))):
            nxt = _successor(sys, index, value)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
                if len(order) >= limit:
                    break
    return order
