#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
🚀 Lançador do porous

Equivalente a `python -m porous`; veja `python run_porous.py --help`.
"""

import sys

from porous.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
