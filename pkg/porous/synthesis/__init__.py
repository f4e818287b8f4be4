#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🔒 Synthesis - Síntese de invariantes e procedimentos de decisão
"""

from .affbasis import AffineBasis, reachable_affine_basis
from .zinv import iterate_saturation, strongest_zlinear_invariant
from .ztarget import HybridTarget, decide_zlinear_target, decide_zlinear_targets, hybridize_target, residue_closure
from .affine1d import classify, decide, growth_bound, invariant_for, normalize, synthesize

__all__ = [
    'AffineBasis',
    'reachable_affine_basis',
    'iterate_saturation',
    'strongest_zlinear_invariant',
    'HybridTarget',
    'decide_zlinear_target',
    'decide_zlinear_targets',
    'hybridize_target',
    'residue_closure',
    'classify',
    'decide',
    'growth_bound',
    'invariant_for',
    'normalize',
    'synthesize',
]
