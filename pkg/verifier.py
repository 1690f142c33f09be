#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#

import sys

from lib import runner
from lib.utils import log


if __name__ == '__main__':
    log('newtonbound verifier started')
    sys.exit(runner.run(sys.argv[1:]))
