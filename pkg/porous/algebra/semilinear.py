#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧩 Semilinear - Conjuntos lineares e semi-lineares

Conjuntos lineares unidimensionais {b + pK} com K em {N, Z}, uniões
semi-lineares em forma canônica (anticadeia ordenada), renderização
ASCII/Unicode e extração dos pontos inteiros de cones racionais.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import floor, isqrt, lcm
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from porous.algebra.intlat import IntVec, LatticeCoset, coset_member, coset_subset, render_coset, xgcd
from porous.algebra.rational import nonnegative_combination
from porous.config.settings import get_settings
from porous.core.exceptions import PreconditionError, ResourceLimitError

if TYPE_CHECKING:
    from porous.core.models import AffineFn

logger = logging.getLogger(__name__)

UNION_ASCII = " U "
UNION_UNICODE = " ∪ "


class SpanKind(Enum):
    """Domínio dos coeficientes de um conjunto linear"""
    NAT = "N"
    INT = "Z"


@dataclass(frozen=True)
class LinearSet1D:
    """
    📏 Conjunto linear unidimensional {base + period·K}

    - period == 0: singleton {base}
    - NAT com period > 0: progressão ascendente; period < 0: descendente
    - INT: period > 0 e 0 <= base < period

    Use `LinearSet1D.make` (ou os atalhos) para obter a forma normalizada.
    """

    base: int
    period: int = 0
    kind: SpanKind = SpanKind.NAT

    @classmethod
    def make(cls, base: int, period: int = 0, kind: SpanKind = SpanKind.NAT) -> "LinearSet1D":
        if period == 0:
            return cls(base=base, period=0, kind=SpanKind.NAT)
        if kind is SpanKind.INT:
            period = abs(period)
            return cls(base=base % period, period=period, kind=SpanKind.INT)
        return cls(base=base, period=period, kind=SpanKind.NAT)

    @classmethod
    def point(cls, value: int) -> "LinearSet1D":
        return cls.make(value)

    @classmethod
    def nat(cls, base: int, period: int) -> "LinearSet1D":
        return cls.make(base, period, SpanKind.NAT)

    @classmethod
    def residue_class(cls, residue: int, modulus: int) -> "LinearSet1D":
        return cls.make(residue, modulus, SpanKind.INT)

    @property
    def is_singleton(self) -> bool:
        return self.period == 0

    def __contains__(self, y: int) -> bool:
        return member_1d(self, y)

    def negated(self) -> "LinearSet1D":
        return LinearSet1D.make(-self.base, -self.period, self.kind)

    def render(self) -> str:
        if self.is_singleton:
            return f"{{{self.base}}}"
        magnitude = abs(self.period)
        coefficient = "" if magnitude == 1 else str(magnitude)
        sign = "-" if self.period < 0 else "+"
        return f"{{{self.base} {sign}{coefficient}{self.kind.value}}}"

    def __str__(self) -> str:
        return self.render()


def member_1d(s: LinearSet1D, y: int) -> bool:
    if s.is_singleton:
        return y == s.base
    diff = y - s.base
    if diff % s.period != 0:
        return False
    if s.kind is SpanKind.INT:
        return True
    return diff // s.period >= 0


def image_1d(f: "AffineFn", s: LinearSet1D) -> LinearSet1D:
    """Imagem exata {a·b + c + (a·p)K} de s por f(x) = a·x + c."""
    return LinearSet1D.make(f.a * s.base + f.b, f.a * s.period, s.kind)


def subset_1d(first: LinearSet1D, second: LinearSet1D) -> bool:
    if first.is_singleton:
        return member_1d(second, first.base)
    if second.is_singleton:
        return False
    if second.kind is SpanKind.INT:
        return (first.base - second.base) % second.period == 0 and first.period % second.period == 0
    if first.kind is SpanKind.INT:
        return False
    if (first.period > 0) != (second.period > 0):
        return False
    step = abs(second.period)
    if first.period % step != 0 or (first.base - second.base) % step != 0:
        return False
    if second.period > 0:
        return first.base >= second.base
    return first.base <= second.base


def crt(r1: int, m1: int, r2: int, m2: int) -> Optional[Tuple[int, int]]:
    """Resolve x ≡ r1 (mod m1), x ≡ r2 (mod m2); retorna (r, lcm) ou None."""
    x, _, g = xgcd(m1, m2)
    g = abs(g)
    if (r2 - r1) % g != 0:
        return None
    modulus = lcm(m1, m2)
    t = ((r2 - r1) // g * x) % (m2 // g)
    return (r1 + m1 * t) % modulus, modulus


def intersect_empty_1d(first: LinearSet1D, second: LinearSet1D) -> bool:
    """Verdadeiro sse os conjuntos não têm inteiro em comum."""
    if first.is_singleton:
        return not member_1d(second, first.base)
    if second.is_singleton:
        return not member_1d(first, second.base)
    solution = crt(first.base % abs(first.period), abs(first.period), second.base % abs(second.period), abs(second.period))
    if solution is None:
        return True
    residue, modulus = solution
    lower: Optional[int] = None
    upper: Optional[int] = None
    for s in (first, second):
        if s.kind is SpanKind.INT:
            continue
        if s.period > 0:
            lower = s.base if lower is None else max(lower, s.base)
        else:
            upper = s.base if upper is None else min(upper, s.base)
    if lower is None or upper is None:
        return False
    smallest = lower + (residue - lower) % modulus
    return smallest > upper


Component = Union[LinearSet1D, LatticeCoset]


def _order_key(component: Component) -> tuple:
    if isinstance(component, LatticeCoset):
        return (0, component.lattice.basis, component.base)
    if component.is_singleton:
        return (3, component.base, 0)
    if component.kind is SpanKind.INT:
        return (0, component.base, component.period)
    if component.period > 0:
        return (1, component.base, component.period)
    return (2, -component.base, -component.period)


def component_contains(component: Component, value) -> bool:
    if isinstance(component, LatticeCoset):
        return coset_member(component, value)
    return member_1d(component, value)


def render_component(component: Component) -> str:
    if isinstance(component, LatticeCoset):
        return render_coset(component)
    return component.render()


def _proper_divisors(n: int) -> List[int]:
    small = [k for k in range(1, isqrt(n) + 1) if n % k == 0]
    return sorted({k for d in small for k in (d, n // d)} - {n})


def merge_residue_classes(components: Iterable[Component]) -> List[Component]:
    """
    Funde famílias completas de classes Z numa classe mais grossa

    {r + k·e + dZ : k = 0..d/e − 1} vira {r + eZ}; repete até nenhuma
    fusão ser possível, de modo que {0 + dZ} ∪ ... ∪ {d−1 + dZ} vira {0 +Z}.
    Os demais componentes passam intactos.
    """
    rest: List[Component] = []
    classes: Dict[int, Set[int]] = {}
    for c in components:
        if isinstance(c, LinearSet1D) and c.kind is SpanKind.INT and c.period:
            classes.setdefault(c.period, set()).add(c.base)
        else:
            rest.append(c)

    changed = True
    while changed:
        changed = False
        for modulus in sorted(classes, reverse=True):
            residues = classes[modulus]
            if len(residues) < 2:
                continue
            for step in _proper_divisors(modulus):
                counts = Counter(r % step for r in residues)
                full = {r for r, n in counts.items() if n == modulus // step}
                if not full:
                    continue
                residues = {r for r in residues if r % step not in full}
                classes.setdefault(step, set()).update(full)
                changed = True
            classes[modulus] = residues
        classes = {m: rs for m, rs in classes.items() if rs}

    merged = [LinearSet1D.residue_class(r, m) for m, rs in classes.items() for r in rs]
    return rest + merged


class ComponentIndex:
    """
    🗂️ Índice de componentes por módulo

    Classes Z ficam agrupadas por módulo e progressões N por (sentido,
    passo, resíduo). Duas classes distintas de mesmo módulo nunca se
    contêm, então a busca de quem cobre um componente só visita os
    módulos que dividem o seu período. Cosets d-D são comparados um a um.
    """

    def __init__(self, components: Sequence[Component]):
        self.components = tuple(components)
        self._classes: Dict[int, Dict[int, int]] = {}
        self._progressions: Dict[Tuple[int, int], Dict[int, List[int]]] = {}
        self._points: Dict[int, int] = {}
        self._cosets: List[int] = []
        for position, c in enumerate(self.components):
            if isinstance(c, LatticeCoset):
                self._cosets.append(position)
            elif c.is_singleton:
                self._points.setdefault(c.base, position)
            elif c.kind is SpanKind.INT:
                self._classes.setdefault(c.period, {}).setdefault(c.base, position)
            else:
                step = abs(c.period)
                key = (1 if c.period > 0 else -1, step)
                self._progressions.setdefault(key, {}).setdefault(c.base % step, []).append(position)

    def covering(self, item: Component) -> Iterator[int]:
        """Posições dos componentes que contêm `item`, o próprio incluído."""
        if isinstance(item, LatticeCoset):
            yield from (p for p in self._cosets if coset_subset(item, self.components[p]))
            return

        for modulus, residues in self._classes.items():
            if item.period % modulus == 0 and item.base % modulus in residues:
                yield residues[item.base % modulus]

        if item.kind is SpanKind.INT and not item.is_singleton:
            return
        for (sign, step), by_residue in self._progressions.items():
            if not item.is_singleton and ((item.period > 0) != (sign > 0) or item.period % step):
                continue
            for position in by_residue.get(item.base % step, ()):
                if subset_1d(item, self.components[position]):
                    yield position

        if item.is_singleton and item.base in self._points:
            yield self._points[item.base]

    def first_covering(self, item: Component) -> Optional[Component]:
        """Primeiro componente (na ordem do índice) que contém `item`, ou None."""
        position = min(self.covering(item), default=None)
        return None if position is None else self.components[position]


@dataclass(frozen=True)
class SemiLinearSet:
    """
    🧱 União finita de componentes lineares

    Forma canônica: nenhum componente contido em outro, ordenados por
    classes Z (base crescente), progressões ascendentes (base crescente),
    descendentes (base decrescente) e singletons (crescentes). Famílias
    completas de classes Z são fundidas antes (ver merge_residue_classes).
    """

    components: Tuple[Component, ...] = ()

    @classmethod
    def of(cls, components: Iterable[Component]) -> "SemiLinearSet":
        unique = sorted(set(merge_residue_classes(components)), key=_order_key)
        index = ComponentIndex(unique)
        kept = [
            c for position, c in enumerate(unique)
            if all(other == position for other in index.covering(c))
        ]
        return cls(components=tuple(kept))

    def union(self, other: "SemiLinearSet") -> "SemiLinearSet":
        return SemiLinearSet.of(self.components + other.components)

    def contains(self, value) -> bool:
        return any(component_contains(c, value) for c in self.components)

    def __contains__(self, value) -> bool:
        return self.contains(value)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def negated(self) -> "SemiLinearSet":
        return SemiLinearSet.of(c.negated() for c in self.components)  # type: ignore[union-attr]

    def render(self, unicode: bool = False) -> str:
        separator = UNION_UNICODE if unicode else UNION_ASCII
        if not self.components:
            return "{}"
        return separator.join(render_component(c) for c in self.components)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RationalCone:
    """Conjunto R+-linear {base + Σ p_i R+} com base inteira e geradores racionais."""

    base: IntVec
    generators: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def make(cls, base: Sequence[int], generators: Iterable[Sequence]) -> "RationalCone":
        exact = [Fraction(x) for x in base]
        if any(x.denominator != 1 for x in exact):
            raise PreconditionError(
                "RationalCone",
                f"a base deve ser inteira, recebido ({', '.join(str(x) for x in exact)})",
            )
        return cls(
            base=tuple(int(x) for x in exact),
            generators=tuple(tuple(Fraction(x) for x in g) for g in generators),
        )

    @property
    def dim(self) -> int:
        return len(self.base)

    @property
    def scale(self) -> int:
        """Menor múltiplo comum dos denominadores dos geradores."""
        return lcm(1, *(x.denominator for g in self.generators for x in g))

    def scaled_generators(self) -> List[IntVec]:
        k = self.scale
        return [tuple(int(x * k) for x in g) for g in self.generators]


@dataclass(frozen=True)
class NLinearSet:
    """Conjunto N-linear d-dimensional {base + Σ v_i N}."""

    base: IntVec
    periods: Tuple[IntVec, ...]

    def render(self) -> str:
        if len(self.base) == 1:
            head = str(self.base[0])
            tail = [f"+{v[0]}N" if v[0] != 1 else "+N" for v in self.periods]
        else:
            head = "(" + ", ".join(map(str, self.base)) + ")"
            tail = ["+(" + ", ".join(map(str, v)) + ")N" for v in self.periods]
        return "{" + " ".join([head] + tail) + "}"


def cone_contains(cone: RationalCone, y: Sequence[int]) -> bool:
    """Factibilidade exata de Σ λ_i p_i = y − base com λ >= 0."""
    target = [Fraction(a - b) for a, b in zip(y, cone.base)]
    return nonnegative_combination(cone.generators, target) is not None


def cone_decompose(cone: RationalCone, y: Sequence[int]) -> Optional[Tuple[IntVec, Tuple[int, ...]]]:
    """
    Decompõe um ponto inteiro do cone como y = base + v + Σ m_i k p_i

    Returns:
        (v, m) com v ponto inteiro do zonotopo e m_i naturais, ou None se
        y não pertence ao cone
    """
    target = [Fraction(a - b) for a, b in zip(y, cone.base)]
    weights = nonnegative_combination(cone.generators, target)
    if weights is None:
        return None
    k = cone.scale
    scaled = cone.scaled_generators()
    multipliers = tuple(floor(w / k) for w in weights)
    v = [a - b for a, b in zip(y, cone.base)]
    for m, g in zip(multipliers, scaled):
        v = [x - m * gi for x, gi in zip(v, g)]
    return tuple(v), multipliers


def zonotope_points(
    generators: Sequence[Sequence[int]],
    dim: int,
    box_cap: int,
) -> List[IntVec]:
    """Pontos inteiros de {Σ λ_i g_i : λ_i em [0, 1]} por enumeração da caixa."""
    lows = [sum(min(0, g[i]) for g in generators) for i in range(dim)]
    highs = [sum(max(0, g[i]) for g in generators) for i in range(dim)]
    volume = 1
    for lo, hi in zip(lows, highs):
        volume *= hi - lo + 1
    if volume > box_cap:
        raise ResourceLimitError("zonotope_box", f"caixa de {volume} pontos", limit=box_cap)
    fractional = [tuple(Fraction(x) for x in g) for g in generators]
    points = []
    for candidate in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if nonnegative_combination(fractional, [Fraction(x) for x in candidate], upper=Fraction(1)) is not None:
            points.append(tuple(candidate))
    return points


def integral_points(
    cone: RationalCone,
    max_generators: Optional[int] = None,
    box_cap: Optional[int] = None,
) -> NLinearSet:
    """
    Pontos inteiros de um cone racional como conjunto N-linear

    Com k o mmc dos denominadores, os períodos são os pontos inteiros não
    nulos do zonotopo Σ λ_i (k p_i), λ_i em [0, 1].

    Args:
        cone: Cone {x + Σ p_i R+}
        max_generators: Limite de geradores (padrão da configuração)
        box_cap: Limite do volume da caixa enumerada (padrão da configuração)

    Returns:
        {x + Σ v N} igual a S ∩ Z^d
    """
    if max_generators is None or box_cap is None:
        settings = get_settings()
        max_generators = settings.cone_max_generators if max_generators is None else max_generators
        box_cap = settings.zonotope_box_cap if box_cap is None else box_cap

    if len(cone.generators) > max_generators:
        raise ResourceLimitError(
            "cone_generators",
            f"{len(cone.generators)} geradores",
            limit=max_generators,
        )
    for g in cone.generators:
        if len(g) != cone.dim:
            raise PreconditionError("integral_points", "geradores com dimensão diferente da base")

    scaled = cone.scaled_generators()
    points = zonotope_points(scaled, cone.dim, box_cap)
    periods = tuple(sorted(p for p in points if any(p)))
    logger.debug(f"integral_points: k={cone.scale}, {len(periods)} períodos")
    return NLinearSet(base=cone.base, periods=periods)
