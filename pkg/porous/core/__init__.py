#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🧱 Core - Exceções e modelos de domínio do porous
"""

from .exceptions import (
    PorousError,
    ConfigurationError,
    ParseError,
    DimensionMismatchError,
    PreconditionError,
    NotFullDimensionalError,
    ResourceLimitError,
    CertificateError,
    EXIT_CODES,
    get_exit_code,
    create_user_friendly_error,
)
from .models import (
    AffineFn,
    AffineSystem,
    Decision,
    FnClass,
    LinearSystem,
    PointTarget,
    Reachability,
    Witness,
    ZClassTarget,
)

__all__ = [
    'PorousError',
    'ConfigurationError',
    'ParseError',
    'DimensionMismatchError',
    'PreconditionError',
    'NotFullDimensionalError',
    'ResourceLimitError',
    'CertificateError',
    'EXIT_CODES',
    'get_exit_code',
    'create_user_friendly_error',
    'AffineFn',
    'AffineSystem',
    'Decision',
    'FnClass',
    'LinearSystem',
    'PointTarget',
    'Reachability',
    'Witness',
    'ZClassTarget',
]
