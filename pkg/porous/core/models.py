#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📊 Models - Modelos de dados do porous

Tipos de domínio compartilhados entre síntese, certificados, CLI e
benchmark: funções afins, sistemas 1-D, sistemas lineares d-dimensionais,
alvos, veredictos e testemunhas.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

from porous.algebra.intlat import IntMat, IntVec, LatticeCoset, as_matrix, coset_member, format_matrix, mat_vec
from porous.algebra.semilinear import LinearSet1D, SemiLinearSet, SpanKind, member_1d
from porous.core.exceptions import DimensionMismatchError, PreconditionError


class FnClass(Enum):
    """Classificação de funções afins x ↦ a·x + b"""
    REDUNDANT = "redundant"
    COUNTER_POS = "counter_pos"
    COUNTER_NEG = "counter_neg"
    GROWING = "growing"
    GROWING_INVERTING = "growing_inverting"
    PURE_INVERTER = "pure_inverter"


class Reachability(Enum):
    """Veredicto de alcançabilidade"""
    REACHABLE = "reachable"
    UNREACHABLE = "unreachable"


@dataclass(frozen=True)
class AffineFn:
    """
    📈 Função afim x ↦ a·x + b sobre os inteiros
    """

    a: int
    b: int = 0

    def __call__(self, x: int) -> int:
        return self.a * x + self.b

    @property
    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    @property
    def is_constant(self) -> bool:
        return self.a == 0

    def mirrored(self) -> "AffineFn":
        """Conjugada por x ↦ −x: (a, b) vira (a, −b)."""
        return AffineFn(self.a, -self.b)

    def expression(self, star: bool = False) -> str:
        """Expressão à direita de 'f(x) =', ex.: '2x - 3' ou '2*x - 3'."""
        if self.a == 0:
            return str(self.b)
        if self.a == 1:
            head = "x"
        elif self.a == -1:
            head = "-x"
        else:
            head = f"{self.a}*x" if star else f"{self.a}x"
        if self.b > 0:
            return f"{head} + {self.b}"
        if self.b < 0:
            return f"{head} - {-self.b}"
        return head

    def render(self) -> str:
        return f"f(x) = {self.expression()}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class PointTarget:
    """Alvo pontual {y}"""

    value: int

    def contains(self, y: int) -> bool:
        return y == self.value

    def as_set(self) -> LinearSet1D:
        return LinearSet1D.point(self.value)

    def negated(self) -> "PointTarget":
        return PointTarget(-self.value)

    def render(self) -> str:
        return f"{{{self.value}}}"


@dataclass(frozen=True)
class ZClassTarget:
    """Alvo classe residual {c + pZ}"""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0:
            raise PreconditionError("ZClassTarget", f"módulo deve ser positivo, recebido {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def contains(self, y: int) -> bool:
        return member_1d(self.as_set(), y)

    def as_set(self) -> LinearSet1D:
        return LinearSet1D.make(self.residue, self.modulus, SpanKind.INT)

    def negated(self) -> "ZClassTarget":
        return ZClassTarget(-self.residue, self.modulus)

    def render(self) -> str:
        return self.as_set().render()


Target = Union[PointTarget, ZClassTarget]


@dataclass(frozen=True)
class AffineSystem:
    """
    🔁 Sistema afim unidimensional

    Ponto inicial, funções afins (aplicadas de forma não determinística)
    e alvo opcional.
    """

    start: int
    fns: Tuple[AffineFn, ...]
    target: Optional[Target] = None

    @classmethod
    def make(cls, start: int, fns: Sequence[Union[AffineFn, Tuple[int, int]]], target: Optional[Union[Target, int]] = None) -> "AffineSystem":
        functions = tuple(f if isinstance(f, AffineFn) else AffineFn(*f) for f in fns)
        if isinstance(target, int):
            target = PointTarget(target)
        return cls(start=start, fns=functions, target=target)

    def describe(self) -> str:
        """Linha de interpretação: 'start: 1 target: {0} functions: [...]'."""
        target = self.target.render() if self.target is not None else "none"
        functions = ", ".join(f.render() for f in self.fns)
        return f"start: {self.start} target: {target} functions: [{functions}]"


LDSTarget = Union[IntVec, LatticeCoset]


@dataclass(frozen=True)
class LinearSystem:
    """
    🧊 Sistema dinâmico linear inteiro (LDS)

    Vetor inicial x0 e matrizes de atualização; determinístico sse há
    exatamente uma matriz.
    """

    x0: IntVec
    matrices: Tuple[IntMat, ...]
    target: Optional[LDSTarget] = None

    def __post_init__(self):
        if not self.matrices:
            raise PreconditionError("LinearSystem", "ao menos uma matriz é necessária")
        for m in self.matrices:
            if len(m) != self.dim:
                raise DimensionMismatchError("LinearSystem", self.dim, len(m))
        if isinstance(self.target, LatticeCoset):
            if self.target.dim != self.dim:
                raise DimensionMismatchError("LinearSystem.target", self.dim, self.target.dim)
        elif self.target is not None and len(self.target) != self.dim:
            raise DimensionMismatchError("LinearSystem.target", self.dim, len(self.target))

    @classmethod
    def make(cls, x0: Sequence[int], matrices: Sequence[Sequence[Sequence[int]]], target: Optional[LDSTarget] = None) -> "LinearSystem":
        if target is not None and not isinstance(target, LatticeCoset):
            target = tuple(int(v) for v in target)
        return cls(
            x0=tuple(int(v) for v in x0),
            matrices=tuple(as_matrix(m) for m in matrices),
            target=target,
        )

    @property
    def dim(self) -> int:
        return len(self.x0)

    def step(self, index: int, v: Sequence[int]) -> IntVec:
        return mat_vec(self.matrices[index], v)

    def target_contains(self, v: Sequence[int]) -> bool:
        if self.target is None:
            return False
        if isinstance(self.target, LatticeCoset):
            return coset_member(self.target, v)
        return tuple(v) == self.target

    def render_target(self) -> str:
        if self.target is None:
            return "none"
        if isinstance(self.target, LatticeCoset):
            return self.target.render()
        return "{(" + ", ".join(str(x) for x in self.target) + ")}"

    def describe(self) -> str:
        x0 = "(" + ", ".join(str(x) for x in self.x0) + ")"
        matrices = ", ".join(format_matrix(m) for m in self.matrices)
        return f"x0: {x0} target: {self.render_target()} matrices: [{matrices}]"


@dataclass(frozen=True)
class Witness:
    """
    🧾 Testemunha de alcançabilidade

    trace[i+1] é a imagem de trace[i] pela função (ou matriz) word[i].
    """

    word: Tuple[int, ...]
    trace: Tuple = ()

    def render(self) -> str:
        return " -> ".join(_format_value(v) for v in self.trace)


def _format_value(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(str(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class Decision:
    """
    ⚖️ Resultado de uma decisão de alcançabilidade

    Veredictos UNREACHABLE sempre trazem o invariante separador.
    """

    status: Reachability
    invariant: Optional[SemiLinearSet] = None
    witness: Optional[Witness] = None

    @property
    def reachable(self) -> bool:
        return self.status is Reachability.REACHABLE
