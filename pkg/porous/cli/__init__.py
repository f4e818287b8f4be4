#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🚀 CLI - Formatos de instância e subcomandos
"""

from .instance import load_instance, parse_instance, render_instance
from .commands import CommandResult, run_check, run_strongest, run_ztarget

__all__ = [
    'load_instance',
    'parse_instance',
    'render_instance',
    'CommandResult',
    'run_check',
    'run_strongest',
    'run_ztarget',
]
