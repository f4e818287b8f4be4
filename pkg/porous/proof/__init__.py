#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
📜 Proof - Certificados, testemunhas e relatórios
"""

from .cert import (
    Certificate,
    CertificateFailure,
    ProofRow,
    check_inductive,
    find_witness,
    orbit_sample,
    replay,
    witness_is_valid,
)
from .formatter import ReportFormatter, render_table

__all__ = [
    'Certificate',
    'CertificateFailure',
    'ProofRow',
    'check_inductive',
    'find_witness',
    'orbit_sample',
    'replay',
    'witness_is_valid',
    'ReportFormatter',
    'render_table',
]
