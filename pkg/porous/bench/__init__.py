#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🎲 Bench - Gerador de instâncias e benchmark estatístico
"""

from .generator import ALL_TYPES, FunctionType, all_combos, combo_mask, gen_random
from .runner import DEFAULT_SIZES, run_bench, summarize

__all__ = [
    'ALL_TYPES',
    'FunctionType',
    'all_combos',
    'combo_mask',
    'gen_random',
    'DEFAULT_SIZES',
    'run_bench',
    'summarize',
]
