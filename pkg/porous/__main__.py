#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Permite `python -m porous`."""

import sys

from porous.cli.main import main

sys.exit(main())
