#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📈 Affine1d - Síntese de invariantes para sistemas afins unidimensionais

Decide alcançabilidade para qualquer conjunto finito de funções
x ↦ a·x + b e produz invariantes N-semi-lineares. A síntese despacha por
família de funções presente no núcleo normalizado:

- contadores opostos: união de classes residuais módulo d
- um único inversor puro: a órbita finita {x0, −x0 + b}
- crescentes sem contadores (com ou sem um inversor): duas caudas
  N-lineares e a órbita interior a uma janela
- contadores de um só sinal: mínimos por classe residual, com promoção a
  classe Z quando a órbita desce indefinidamente
"""

import heapq
import logging
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Deque, Dict, List, Optional, Sequence, Set, Tuple

from porous.algebra.semilinear import LinearSet1D, SemiLinearSet
from porous.core.exceptions import PreconditionError
from porous.core.models import (
    AffineFn,
    AffineSystem,
    Decision,
    FnClass,
    PointTarget,
    Reachability,
    Witness,
    ZClassTarget,
)
from porous.synthesis.ztarget import residue_closure

logger = logging.getLogger(__name__)


def classify(f: AffineFn) -> FnClass:
    if f.a == 0 or f.is_identity:
        return FnClass.REDUNDANT
    if f.a == 1:
        return FnClass.COUNTER_POS if f.b > 0 else FnClass.COUNTER_NEG
    if f.a == -1:
        return FnClass.PURE_INVERTER
    if f.a >= 2:
        return FnClass.GROWING
    return FnClass.GROWING_INVERTING


@dataclass(frozen=True)
class GrowthBound:
    """|x| >= value implica |f(x)| >= |x| + M para a função e o M do cálculo."""

    value: int


@dataclass(frozen=True)
class NormalizationRecord:
    """
    📋 Transformações aplicadas pela normalização

    mirrored[i] indica se o núcleo i foi espelhado (x ↦ −x) e precisa ter
    o invariante negado de volta.
    """

    mirrored: Tuple[bool, ...]
    dropped: Tuple[AffineFn, ...] = ()
    constants: Tuple[int, ...] = ()
    derived: Tuple[AffineFn, ...] = ()


def growth_bound(f: AffineFn, margin: int = 0) -> GrowthBound:
    """
    Limite a partir do qual f afasta pontos da origem por pelo menos `margin`

    Args:
        f: Função com |a| >= 2
        margin: M >= 0

    Returns:
        GrowthBound com valor ceil((|b| + M) / (|a| − 1))
    """
    if abs(f.a) < 2:
        raise PreconditionError("growth_bound", f"|a| deve ser >= 2, recebido a={f.a}")
    if margin < 0:
        raise PreconditionError("growth_bound", f"M deve ser >= 0, recebido {margin}")
    numerator = abs(f.b) + margin
    denominator = abs(f.a) - 1
    return GrowthBound(value=-(-numerator // denominator))


def _pure_inverters(fns: Sequence[AffineFn]) -> List[AffineFn]:
    seen: List[AffineFn] = []
    for f in fns:
        if classify(f) is FnClass.PURE_INVERTER and f not in seen:
            seen.append(f)
    return seen


def _derived_counters(fns: Sequence[AffineFn]) -> Tuple[AffineFn, ...]:
    """Composições dos dois primeiros inversores puros distintos: x + (b − c) e x + (c − b)."""
    inverters = _pure_inverters(fns)
    if len(inverters) < 2:
        return ()
    b, c = inverters[0].b, inverters[1].b
    return (AffineFn(1, b - c), AffineFn(1, c - b))


def normalize(sys: AffineSystem) -> Tuple[List[AffineSystem], NormalizationRecord]:
    """
    Normaliza um sistema em núcleos independentes

    1. remove identidades
    2. cada constante c gera um núcleo extra com início c
    3. núcleos com início negativo são espelhados
    4. com dois inversores puros distintos, acrescenta os contadores opostos
       obtidos por composição

    Returns:
        (núcleos, registro das transformações)
    """
    dropped: List[AffineFn] = []
    constants: List[int] = []
    kept: List[AffineFn] = []
    for f in sys.fns:
        if f.is_identity:
            dropped.append(f)
        elif f.is_constant:
            if f.b not in constants:
                constants.append(f.b)
            dropped.append(f)
        elif f not in kept:
            kept.append(f)

    derived = _derived_counters(kept)
    kept.extend(d for d in derived if d not in kept)

    cores: List[AffineSystem] = []
    mirrored: List[bool] = []
    for start in [sys.start] + [c for c in constants if c != sys.start]:
        core = AffineSystem(start=start, fns=tuple(kept), target=sys.target)
        if start < 0:
            core = _mirror(core)
            mirrored.append(True)
        else:
            mirrored.append(False)
        cores.append(core)

    record = NormalizationRecord(
        mirrored=tuple(mirrored),
        dropped=tuple(dropped),
        constants=tuple(constants),
        derived=derived,
    )
    logger.debug(f"Normalização: {len(cores)} núcleo(s), {len(dropped)} função(ões) redundante(s)")
    return cores, record


def _mirror(sys: AffineSystem) -> AffineSystem:
    target = sys.target.negated() if sys.target is not None else None
    return AffineSystem(start=-sys.start, fns=tuple(f.mirrored() for f in sys.fns), target=target)


def _target_radius(sys: AffineSystem) -> int:
    if isinstance(sys.target, PointTarget):
        return abs(sys.target.value) + 1
    return 1


def _window_orbit(start: int, fns: Sequence[AffineFn], low: int, high: int) -> List[int]:
    """Órbita exata restrita à janela aberta (low, high); pontos fora não são expandidos."""
    if not low < start < high:
        return []
    seen = {start}
    queue: Deque[int] = deque([start])
    while queue:
        x = queue.popleft()
        for f in fns:
            y = f(x)
            if low < y < high and y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def _opposing_counters(sys: AffineSystem, pos: AffineFn, neg: AffineFn) -> SemiLinearSet:
    d = gcd(pos.b, neg.b)
    search = residue_closure(sys.start % d, [lambda r, f=f: (f.a * r + f.b) % d for f in sys.fns])
    logger.debug(f"Contadores opostos: d={d}, {len(search.visited)} classe(s)")
    return SemiLinearSet.of(LinearSet1D.residue_class(r, d) for r in search.visited)


def _growing_tails(sys: AffineSystem, growing: Sequence[AffineFn]) -> SemiLinearSet:
    bound = max([growth_bound(f, 0).value for f in growing] + [_target_radius(sys)])
    interior = _window_orbit(sys.start, sys.fns, -bound, bound)
    logger.debug(f"Crescentes: janela C={bound}, {len(interior)} ponto(s) interior(es)")
    components = [LinearSet1D.nat(-bound, -1), LinearSet1D.nat(bound, 1)]
    components.extend(LinearSet1D.point(x) for x in interior)
    return SemiLinearSet.of(components)


def _growing_with_inverter(sys: AffineSystem, growing: Sequence[AffineFn], inverter: AffineFn) -> SemiLinearSet:
    d = inverter.b
    bound = max([growth_bound(f, abs(d)).value for f in growing] + [_target_radius(sys)]) + abs(d)
    interior = _window_orbit(sys.start, sys.fns, -bound, bound + d)
    logger.debug(f"Crescentes com inversor: janela ({-bound}, {bound + d}), {len(interior)} ponto(s)")
    components = [LinearSet1D.nat(-bound, -1), LinearSet1D.nat(bound + d, 1)]
    components.extend(LinearSet1D.point(x) for x in interior)
    return SemiLinearSet.of(components)


def _single_sign_counters(sys: AffineSystem, counters: Sequence[AffineFn]) -> SemiLinearSet:
    reference = min(counters, key=lambda f: abs(f.b))
    if reference.b < 0:
        return _single_sign_counters(_mirror(sys), [f.mirrored() for f in counters]).negated()

    d = reference.b
    # nós: (valor, pai); só guardam atualizações de mínimo por funções não inversoras
    nodes: List[Tuple[int, Optional[int]]] = [(sys.start, None)]
    minima: Dict[int, int] = {sys.start % d: sys.start}
    whole: Set[int] = set()
    pending: Deque[int] = deque()
    heap: List[Tuple[int, int]] = [(sys.start, 0)]

    def promote(residue: int) -> None:
        if residue not in whole:
            whole.add(residue)
            pending.append(residue)

    def chain_contains(node: Optional[int], residue: int) -> bool:
        while node is not None:
            value, parent = nodes[node]
            if value % d == residue:
                return True
            node = parent
        return False

    while heap or pending:
        while pending:
            r = pending.popleft()
            for f in sys.fns:
                promote((f.a * r + f.b) % d)
        if not heap:
            break
        value, node = heapq.heappop(heap)
        r = value % d
        if r in whole or minima.get(r) != value:
            continue
        for f in sys.fns:
            y = f(value)
            target_class = y % d
            if f.a < 0:
                promote(target_class)
                continue
            if target_class in whole:
                continue
            current = minima.get(target_class)
            if current is not None and y >= current:
                continue
            if chain_contains(node, target_class):
                logger.debug(f"Classe {target_class} mod {d} desce indefinidamente, promovida a Z")
                promote(target_class)
                continue
            minima[target_class] = y
            nodes.append((y, node))
            heapq.heappush(heap, (y, len(nodes) - 1))

    components = [LinearSet1D.residue_class(r, d) for r in whole]
    components.extend(LinearSet1D.nat(v, d) for r, v in minima.items() if r not in whole)
    logger.debug(f"Contadores de um sinal: d={d}, {len(whole)} classe(s) Z, {len(components) - len(whole)} progressão(ões)")
    return SemiLinearSet.of(components)


def synthesize(sys: AffineSystem) -> SemiLinearSet:
    """
    Sintetiza um invariante indutivo contendo o início de um núcleo normalizado

    Args:
        sys: Núcleo sem identidades nem constantes

    Returns:
        Invariante N-semi-linear; igual ao conjunto alcançável exceto nos
        casos de funções crescentes sem contadores, onde é exato dentro da
        janela parametrizada pelo alvo
    """
    for f in sys.fns:
        if f.is_identity or f.is_constant:
            raise PreconditionError("synthesize", f"função redundante {f.render()}; normalize o sistema antes")

    fns = list(dict.fromkeys(sys.fns))
    fns.extend(d for d in _derived_counters(fns) if d not in fns)
    core = AffineSystem(start=sys.start, fns=tuple(fns), target=sys.target)

    classes = [classify(f) for f in fns]
    positive = [f for f, c in zip(fns, classes) if c is FnClass.COUNTER_POS]
    negative = [f for f, c in zip(fns, classes) if c is FnClass.COUNTER_NEG]
    growing = [f for f, c in zip(fns, classes) if c in (FnClass.GROWING, FnClass.GROWING_INVERTING)]
    inverters = _pure_inverters(fns)

    if positive and negative:
        return _opposing_counters(core, positive[0], negative[0])
    if positive or negative:
        return _single_sign_counters(core, positive or negative)
    if growing and inverters:
        return _growing_with_inverter(core, growing, inverters[0])
    if growing:
        return _growing_tails(core, growing)
    if inverters:
        return SemiLinearSet.of([LinearSet1D.point(sys.start), LinearSet1D.point(inverters[0](sys.start))])
    return SemiLinearSet.of([LinearSet1D.point(sys.start)])


def invariant_for(sys: AffineSystem) -> SemiLinearSet:
    """União dos invariantes (desespelhados) de todos os núcleos."""
    cores, record = normalize(sys)
    invariant = SemiLinearSet()
    for core, mirrored in zip(cores, record.mirrored):
        partial = synthesize(core)
        invariant = invariant.union(partial.negated() if mirrored else partial)
    return invariant


def _decide_class_target(sys: AffineSystem, target: ZClassTarget) -> Decision:
    p = target.modulus
    steps = [lambda r, f=f: (f.a * r + f.b) % p for f in sys.fns]
    search = residue_closure(sys.start % p, steps, lambda r: r == target.residue)
    if search.word is None:
        invariant = SemiLinearSet.of(LinearSet1D.residue_class(r, p) for r in search.visited)
        return Decision(status=Reachability.UNREACHABLE, invariant=invariant)

    trace = [sys.start]
    for index in search.word:
        trace.append(sys.fns[index](trace[-1]))
    # a busca parou no alvo; o fecho completo vira o invariante relatado
    closure = residue_closure(sys.start % p, steps)
    invariant = SemiLinearSet.of(LinearSet1D.residue_class(r, p) for r in closure.visited)
    return Decision(
        status=Reachability.REACHABLE,
        invariant=invariant,
        witness=Witness(word=search.word, trace=tuple(trace)),
    )


def decide(sys: AffineSystem) -> Decision:
    """
    Decide alcançabilidade do alvo de um sistema afim 1-D

    Args:
        sys: Sistema com alvo pontual ou classe residual

    Returns:
        Decision; alvos pontuais trazem sempre o invariante (separador
        quando inalcançável); classes residuais alcançáveis trazem a
        testemunha da busca modular e o fecho dos resíduos como invariante
    """
    if sys.target is None:
        raise PreconditionError("decide", "o sistema não tem alvo", suggestion="Informe 'target:' na instância")
    if isinstance(sys.target, ZClassTarget):
        return _decide_class_target(sys, sys.target)

    invariant = invariant_for(sys)
    status = Reachability.REACHABLE if invariant.contains(sys.target.value) else Reachability.UNREACHABLE
    logger.debug(f"Decisão: {status.value} com {len(invariant)} componente(s)")
    return Decision(status=status, invariant=invariant)
