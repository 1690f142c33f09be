#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#

import newtonbound
from newtonbound.exceptions import ConfigError

from lib.constants import (
    DEFAULT_E_MAX,
    DEFAULT_N_MAX,
    DEFAULT_N_MIN,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_R_DENOMINATOR_CAP,
    DEFAULT_TIGHTNESS_EVERY,
    DEFAULT_WORKERS,
    SETTINGS_FUZZ_E_MAX,
    SETTINGS_FUZZ_N_MAX,
    SETTINGS_FUZZ_N_MIN,
    SETTINGS_FUZZ_OUTPUT_DIR,
    SETTINGS_FUZZ_R_DENOMINATOR_CAP,
    SETTINGS_FUZZ_TIGHTNESS_EVERY,
    SETTINGS_FUZZ_WORKERS,
)


class LimitSettings:
    @staticmethod
    def GetBruteforceCap() -> int:
        cap = newtonbound.bruteforceCap()
        if cap < 2:
            raise ConfigError(f'invalid brute-force cap: {cap}', field='bruteforce_cap')

        return cap


class CampaignSettings:
    """Static accessors for the fuzz campaign defaults; command line flags override them"""
    @staticmethod
    def GetMinimumSize() -> int:
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_N_MIN, DEFAULT_N_MIN, int)

    @staticmethod
    def GetMaximumSize() -> int:
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_N_MAX, DEFAULT_N_MAX, int)

    @staticmethod
    def GetMaximumDegreeDrop() -> int:
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_E_MAX, DEFAULT_E_MAX, int)

    @staticmethod
    def GetDenominatorCap() -> int:
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_R_DENOMINATOR_CAP, DEFAULT_R_DENOMINATOR_CAP, int)

    @staticmethod
    def GetNumberOfWorkers() -> int:
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_WORKERS, DEFAULT_WORKERS, int)

    @staticmethod
    def GetTightnessInterval() -> int:
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_TIGHTNESS_EVERY, DEFAULT_TIGHTNESS_EVERY, int)

    @staticmethod
    def GetOutputDirectory() -> str:
        """Directory counterexample instance files are written to

        :return: Configured directory, relative paths resolve against the working directory
        :rtype: str
        """
        return newtonbound.CONFIG.get(SETTINGS_FUZZ_OUTPUT_DIR, DEFAULT_OUTPUT_DIR)
