#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#
"""
Collection of utility functions for logging and rendering output documents.

Functions:
    log
    enableConsoleLogging
    renderDocument
    renderJson
    renderCsv
    renderText
    writeCounterexample
"""

import csv
import io
import logging
import os
from typing import Dict, List, Optional

import newtonbound
from newtonbound.utils import canonicalJson, documentDigest

from lib.constants import COUNTEREXAMPLE_PREFIX, FORMAT_CSV, FORMAT_JSON

logger = logging.getLogger('newtonbound.cli')


def log(message: str, level: int = logging.INFO):
    """Log function to send logs into the newtonbound logger

    :param message: Log message
    :type message: str
    :param level: logging level (DEBUG, *INFO, WARNING, ERROR)
    :type level: int, optional
    """
    logger.log(level, f"[{newtonbound.PROJECT}] {message}")


def enableConsoleLogging(level: int = logging.DEBUG):
    """Attach a stderr handler to the package logger; stdout is left to the documents

    :param level: Minimum level to show
    :type level: int, optional
    """
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(newtonbound.logformat))
    newtonbound.log.addHandler(handler)
    newtonbound.log.setLevel(level)


def _cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, (list, tuple)):
        return ' '.join(_cell(item) for item in value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def _flatten(document: dict, prefix: str = '') -> dict:
    row = {}
    for key, value in document.items():
        if isinstance(value, dict):
            row.update(_flatten(value, f"{prefix}{key}."))
        else:
            row[f"{prefix}{key}"] = value
    return row


def renderJson(document: dict) -> str:
    return canonicalJson(document) + '\n'


def renderCsv(rows: List[Dict]) -> str:
    """Render flat rows as CSV with a header taken from the first row

    :param rows: Rows sharing the same keys
    :type rows: list
    :return: CSV text with '\\n' line endings
    :rtype: str
    """
    if not rows:
        return ''

    output = io.StringIO()
    writer = csv.DictWriter(output, fieldnames=list(rows[0].keys()), lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return output.getvalue()


def renderText(document: dict) -> str:
    lines = []
    for key in sorted(document):
        value = document[key]
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {line}" for line in renderText(value).splitlines())
        else:
            lines.append(f"{key}: {_cell(value)}")
    return '\n'.join(lines) + '\n'


def renderDocument(document: dict, fmt: str, rows: Optional[List[Dict]] = None, text: Optional[str] = None) -> str:
    """Render a command result in the requested output format

    :param document: The JSON document of the result
    :type document: dict
    :param fmt: One of text, json, csv
    :type fmt: str
    :param rows: Rows for the CSV form, defaults to the document flattened into a single row
    :type rows: list, optional
    :param text: Preformatted text form, defaults to a key: value listing
    :type text: str, optional
    :return: Rendered output ending with a newline
    :rtype: str
    """
    if fmt == FORMAT_JSON:
        return renderJson(document)
    if fmt == FORMAT_CSV:
        return renderCsv(rows if rows is not None else [_flatten(document)])
    return text if text is not None else renderText(document)


def writeCounterexample(document: dict, directory: str) -> str:
    """Persist a counterexample document named after its digest

    :param document: Instance plus evaluation that broke a claimed inequality
    :type document: dict
    :param directory: Target directory, created if needed
    :type directory: str
    :return: Path of the written file
    :rtype: str
    """
    if not directory:
        raise ValueError('invalid directory')

    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"{COUNTEREXAMPLE_PREFIX}{documentDigest(document)}.json")
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(renderJson(document))

    log(f"counterexample written to {path}", logging.WARNING)
    return path
