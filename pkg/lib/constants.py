#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#
"""
Various constant variables used by the command line runtime.
"""

# settings keys (see newtonbound.config.BoundConfig; the brute-force cap lives in newtonbound.bruteforceCap)
SETTINGS_FUZZ_N_MIN = 'fuzz.n_min'
SETTINGS_FUZZ_N_MAX = 'fuzz.n_max'
SETTINGS_FUZZ_E_MAX = 'fuzz.e_max'
SETTINGS_FUZZ_R_DENOMINATOR_CAP = 'fuzz.r_denominator_cap'
SETTINGS_FUZZ_WORKERS = 'fuzz.workers'
SETTINGS_FUZZ_TIGHTNESS_EVERY = 'fuzz.tightness_every'
SETTINGS_FUZZ_OUTPUT_DIR = 'fuzz.output_dir'

# defaults
DEFAULT_N_MIN = 4
DEFAULT_N_MAX = 12
DEFAULT_E_MAX = 50
DEFAULT_R_DENOMINATOR_CAP = 1000
DEFAULT_WORKERS = 1
DEFAULT_TIGHTNESS_EVERY = 100
DEFAULT_OUTPUT_DIR = 'counterexamples'

# process exit codes
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID_INPUT = 2
EXIT_CAP_EXCEEDED = 3

# output formats
FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'
FORMATS = (FORMAT_TEXT, FORMAT_JSON, FORMAT_CSV)

COUNTEREXAMPLE_PREFIX = 'counterexample-'

# chain minimum cross-check oracles
ORACLE_BRUTEFORCE = 'bruteforce'
ORACLE_DYNAMIC = 'dynamic'
