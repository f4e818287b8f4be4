#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
⚙️ Config - Configuração do porous
"""

from .settings import (
    ConfigLoader,
    PorousSettings,
    get_config_loader,
    get_settings,
    reset_settings,
)

__all__ = [
    'ConfigLoader',
    'PorousSettings',
    'get_config_loader',
    'get_settings',
    'reset_settings',
]
