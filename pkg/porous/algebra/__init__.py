#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧮 Algebra - Reticulados, aritmética racional e conjuntos semi-lineares
"""

from .intlat import (
    Lattice,
    LatticeCoset,
    coset_covering,
    coset_image,
    coset_intersects,
    coset_member,
    coset_subset,
    hnf,
    lattice_member,
)
from .semilinear import (
    LinearSet1D,
    NLinearSet,
    RationalCone,
    SemiLinearSet,
    SpanKind,
    image_1d,
    integral_points,
    intersect_empty_1d,
    member_1d,
    subset_1d,
)

__all__ = [
    'Lattice',
    'LatticeCoset',
    'coset_covering',
    'coset_image',
    'coset_intersects',
    'coset_member',
    'coset_subset',
    'hnf',
    'lattice_member',
    'LinearSet1D',
    'NLinearSet',
    'RationalCone',
    'SemiLinearSet',
    'SpanKind',
    'image_1d',
    'integral_points',
    'intersect_empty_1d',
    'member_1d',
    'subset_1d',
]
