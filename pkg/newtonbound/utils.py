# -*- coding: utf-8 -*-
import hashlib
import json
import logging
from fractions import Fraction

from six import ensure_binary

from newtonbound.exceptions import BadInput

log = logging.getLogger('newtonbound')


def toRational(value, field=None):
    """ Returns the exact rational represented by value. Accepts int, Fraction and
        strings in the form 'p' or 'p/q'. Floats and bools are refused so no rounded
        value ever reaches a verdict.

        Parameters:
            value (int, Fraction, str): Value to convert.
            field (str): Name of the originating document field, used in error messages.

        Raises:
            :exc:`~newtonbound.exceptions.BadInput`: value is not an exact rational.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise BadInput('%s: expected an exact rational, got %r' % (field or 'value', value), field=field)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if '.' in text or 'e' in text.lower():
            raise BadInput('%s: decimals are not accepted, use "p/q" (got %r)' % (field or 'value', value),
                           field=field)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise BadInput('%s: malformed rational %r' % (field or 'value', value), field=field)
    raise BadInput('%s: expected an exact rational, got %r' % (field or 'value', value), field=field)


def toRationalList(values, field=None):
    """ Returns a tuple of rationals parsed with :func:`toRational`. """
    if not isinstance(values, (list, tuple)):
        raise BadInput('%s: expected a list' % (field or 'value'), field=field)
    return tuple(toRational(value, '%s[%d]' % (field or 'value', i)) for i, value in enumerate(values))


def toInteger(value, field=None):
    """ Returns value as int, refusing bools, floats and non-integral rationals. """
    if isinstance(value, bool):
        raise BadInput('%s: expected an integer, got %r' % (field or 'value', value), field=field)
    if isinstance(value, int):
        return value
    rational = toRational(value, field)
    if rational.denominator != 1:
        raise BadInput('%s: expected an integer, got %s' % (field or 'value', rational), field=field)
    return rational.numerator


def toIntegerList(values, field=None):
    """ Returns a tuple of ints parsed with :func:`toInteger`. """
    if not isinstance(values, (list, tuple)):
        raise BadInput('%s: expected a list' % (field or 'value'), field=field)
    return tuple(toInteger(value, '%s[%d]' % (field or 'value', i)) for i, value in enumerate(values))


def rational2str(value):
    """ Canonical text form of a rational: 'p/q' in lowest terms, 'p' for integers. """
    return str(Fraction(value))


def canonicalJson(document):
    """ Serializes a document with sorted keys and fixed separators. """
    return json.dumps(document, sort_keys=True, indent=2, separators=(',', ': '))


def documentDigest(document):
    """ Returns the SHA-1 hex digest of the canonical JSON form of document. """
    return hashlib.sha1(ensure_binary(json.dumps(document, sort_keys=True))).hexdigest()


def loadDocument(path):
    """ Loads a JSON object from path.

        Raises:
            :exc:`~newtonbound.exceptions.BadInput`: the file is missing, unreadable or
                not a JSON object.
    """
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            document = json.load(handle)
    except OSError as e:
        raise BadInput('cannot read %s: %s' % (path, e.strerror or e))
    except ValueError as e:
        raise BadInput('malformed JSON in %s: %s' % (path, e))
    if not isinstance(document, dict):
        raise BadInput('%s: expected a JSON object' % path)
    log.debug('Loaded document %s', path)
    return document


def requireField(document, name):
    """ Returns document[name], raising :exc:`BadInput` naming the missing field. """
    if name not in document:
        raise BadInput('missing field "%s"' % name, field=name)
    return document[name]
