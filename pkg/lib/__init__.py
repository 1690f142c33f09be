#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#
"""
Package with the command line runtime around the newtonbound library

Modules:
    background_thread
    constants
    fuzzer
    runner
    settings
    utils
"""

from lib.utils import log
