#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#

from threading import Thread


class BackgroundThread(Thread):
    """Daemon worker thread that can be asked to stop after its current job"""
    def __init__(self, name=None):
        self._stop_flag = False

        super(BackgroundThread, self).__init__(name=name, daemon=True)

    def stop(self, wait: bool = False, waitTimeout=None):
        self._stop_flag = True

        if wait and self.is_alive():
            self.join(waitTimeout)

    def should_stop(self) -> bool:
        return self._stop_flag
