#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧮 porous - Invariantes porosos para sistemas afins e lineares inteiros

Sintetiza invariantes indutivos semi-lineares, decide alcançabilidade nos
casos decidíveis e emite certificados de não alcançabilidade verificáveis
de forma independente.

Principais componentes:
- Algebra: reticulados em forma normal de Hermite, conjuntos semi-lineares
- Synthesis: invariante Z-linear mais forte, alvos de dimensão cheia, 1-D afim
- Proof: verificação de certificados, testemunhas e relatórios
- CLI e Bench: linha de comando e benchmark estatístico
"""

from .core.exceptions import (
    PorousError,
    ConfigurationError,
    ParseError,
    DimensionMismatchError,
    PreconditionError,
    NotFullDimensionalError,
    ResourceLimitError,
    CertificateError,
)
from .core.models import (
    AffineFn,
    AffineSystem,
    Decision,
    LinearSystem,
    PointTarget,
    Reachability,
    Witness,
    ZClassTarget,
)
from .algebra.intlat import LatticeCoset, hnf
from .algebra.semilinear import LinearSet1D, SemiLinearSet
from .synthesis.affine1d import decide, invariant_for
from .synthesis.zinv import strongest_zlinear_invariant
from .synthesis.ztarget import decide_zlinear_target
from .proof.cert import check_inductive, find_witness

__version__ = "1.0.0"
__description__ = "Invariantes semi-lineares e alcançabilidade para sistemas inteiros"

__all__ = [
    # Erros
    'PorousError',
    'ConfigurationError',
    'ParseError',
    'DimensionMismatchError',
    'PreconditionError',
    'NotFullDimensionalError',
    'ResourceLimitError',
    'CertificateError',

    # Modelos
    'AffineFn',
    'AffineSystem',
    'Decision',
    'LinearSystem',
    'PointTarget',
    'Reachability',
    'Witness',
    'ZClassTarget',

    # Álgebra
    'LatticeCoset',
    'hnf',
    'LinearSet1D',
    'SemiLinearSet',

    # Síntese e prova
    'decide',
    'invariant_for',
    'strongest_zlinear_invariant',
    'decide_zlinear_target',
    'check_inductive',
    'find_witness',
]
