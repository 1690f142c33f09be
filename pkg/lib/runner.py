#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#
"""
Command line runner: parses the arguments and calls the associated action.

Every action returns a Result; run() renders it to stdout and maps exceptions to the
exit code contract (0 success, 1 violation, 2 invalid input, 3 cap exceeded).

Functions:
    bound
    dual
    evalHeight
    fseq
    fuzz
    minpoly
    tightness
    verify
    readDocument
    buildParser
    main
    run
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional

import newtonbound
from newtonbound.bounds import (
    BoundCoefficient,
    BoundConstant,
    Prop1Report,
    TightnessCertificate,
    bound_coefficients,
    bound_constant,
    prop1_verify,
    tightness_certificate,
)
from newtonbound.exceptions import (
    BadInput,
    CapExceeded,
    InvariantBreach,
    NewtonBoundException,
    ProofViolation,
)
from newtonbound.heights import (
    DualData,
    HeightInput,
    MuCoefficientAudit,
    NormCertificate,
    dual_matrices,
    mu_coefficient_audit,
    theorem1_lhs,
    v_norm_certify,
)
from newtonbound.polygon import Chain, ChainMinimum, min_chain_bruteforce, min_chain_dynamic, min_chain_hull
from newtonbound.sequences import (
    CurveProfile,
    ESequence,
    GapWindow,
    RSequence,
    f_sequence,
    require_window,
)
from newtonbound.utils import (
    loadDocument,
    rational2str,
    requireField,
    toInteger,
    toIntegerList,
    toRational,
    toRationalList,
)

from lib.constants import (
    EXIT_CAP_EXCEEDED,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    EXIT_VIOLATION,
    FORMAT_TEXT,
    FORMATS,
    ORACLE_BRUTEFORCE,
    ORACLE_DYNAMIC,
)
from lib.fuzzer import CampaignReport, FuzzConfig, fuzz_campaign
from lib.settings import CampaignSettings, LimitSettings
from lib.utils import enableConsoleLogging, log, renderDocument, writeCounterexample


@dataclass
class Result:
    document: dict
    rows: Optional[List[Dict]] = None
    text: Optional[str] = None
    exitCode: int = EXIT_OK


def _loadInstance(path: str):
    """Parse an instance file {"e": [...], "r": ["p/q", ...], "s": int, "t": int}

    :param path: Path of the instance file
    :type path: str
    :return: Raw e values, raw r values and the window
    :rtype: tuple
    """
    document = loadDocument(path)
    e = toIntegerList(requireField(document, 'e'), 'e')
    r = toRationalList(requireField(document, 'r'), 'r')
    window = GapWindow(requireField(document, 's'), requireField(document, 't'))
    return e, r, window


def _csvList(value: str, field: str) -> List[str]:
    if value is None:
        return []
    items = [item.strip() for item in value.split(',') if item.strip()]
    if not items:
        raise BadInput(f'{field}: expected a comma separated list', field=field)
    return items


def fseq(options: argparse.Namespace) -> Result:
    profile = CurveProfile(options.d, options.g)
    values = f_sequence(profile).values
    return Result(
        document={'d': profile.d, 'g': profile.g, 'N': profile.N, 'f': list(values)},
        rows=[{'i': i, 'f': value} for i, value in enumerate(values, start=1)],
        text=' '.join(str(value) for value in values) + '\n')


def bound(options: argparse.Namespace) -> Result:
    if options.instance:
        e, _, window = _loadInstance(options.instance)
        e = ESequence(e)
        require_window(len(e), window, strict=False)
        name = 'B'
    else:
        for flag in ('d', 'g', 's', 't'):
            if getattr(options, flag) is None:
                raise BadInput(f'bound needs --instance or all of --d --g --s --t (missing --{flag})', field=flag)
        profile = CurveProfile(options.d, options.g)
        window = GapWindow(options.s, options.t)
        require_window(profile.N, window, strict=True)
        e = f_sequence(profile)
        name = 'A'

    value, argmax = bound_constant(e, window)
    coefficients = bound_coefficients(e, window)
    return Result(
        document={
            'constant': name,
            'e': list(e.values),
            's': window.s,
            't': window.t,
            'value': rational2str(value),
            'argmax': argmax,
            'coefficients': [coefficient.toDocument() for coefficient in coefficients],
        },
        rows=[coefficient.toDocument() for coefficient in coefficients],
        text=f"{name}({window.s},{window.t}) = {rational2str(value)} (i={argmax})\n")


def minpoly(options: argparse.Namespace) -> Result:
    e, r, _ = _loadInstance(options.instance)
    e, r = ESequence(e), RSequence(r)
    minimum = min_chain_hull(e, r)
    cap = LimitSettings.GetBruteforceCap()
    if options.oracle == ORACLE_DYNAMIC:
        oracle = min_chain_dynamic(e, r)
    else:
        oracle = min_chain_bruteforce(e, r, cap)
    if oracle.value != minimum.value:
        raise InvariantBreach(f'hull minimum {minimum.value} disagrees with oracle minimum {oracle.value}')
    document = dict(minimum.toDocument(), oracle_witness=list(oracle.witness.indices))
    return Result(
        document=document,
        text=f"S = {rational2str(minimum.value)}\nwitness: {' '.join(str(i) for i in minimum.witness)}\n")


def verify(options: argparse.Namespace) -> Result:
    e, r, window = _loadInstance(options.instance)
    report = prop1_verify(e, r, window, cap=LimitSettings.GetBruteforceCap())
    document = report.toDocument()
    if report.slack < 0:
        writeCounterexample(document, options.output_dir or CampaignSettings.GetOutputDirectory())
        return Result(document, exitCode=EXIT_VIOLATION)
    return Result(document)


def tightness(options: argparse.Namespace) -> Result:
    e, _, window = _loadInstance(options.instance)
    certificate = tightness_certificate(ESequence(e), window, cap=LimitSettings.GetBruteforceCap())
    return Result(certificate.toDocument(), rows=certificate.rows())


def evalHeight(options: argparse.Namespace) -> Result:
    data = HeightInput.fromDocument(loadDocument(options.input))
    lhs = theorem1_lhs(data)
    audit = mu_coefficient_audit(data.profile, data.window)
    return Result(
        document={'input': data.toDocument(), 'lhs': rational2str(lhs), 'audit': audit.toDocument()},
        rows=audit.rows())


def dual(options: argparse.Namespace) -> Result:
    window = GapWindow(options.s, options.t)
    coefficients = toIntegerList(_csvList(options.n, 'n'), 'n') if options.n else ()
    data = dual_matrices(coefficients, window, options.size, options.cap)
    document = {'dual': data.toDocument()}
    rows = data.rows()
    if options.norms:
        certificate = v_norm_certify(data, _csvList(options.norms, 'norms'), options.inflation)
        document['certificate'] = certificate.toDocument()
        rows = certificate.rows()
        if not certificate.all_passed:
            log(f"norm certificate fails at inflation {options.inflation}, "
                f"minimal inflation is {rational2str(certificate.minimal_inflation)}")
    return Result(document, rows=rows)


def fuzz(options: argparse.Namespace) -> Result:
    config = FuzzConfig.fromSettings(
        options.seed, options.count,
        n_min=options.n_min, n_max=options.n_max, e_max=options.e_max,
        r_denominator_cap=options.r_denominator_cap, tightness_every=options.tightness_every)
    workers = options.workers if options.workers is not None else CampaignSettings.GetNumberOfWorkers()
    report = fuzz_campaign(config, workers=workers, progress=options.progress)

    document = report.toDocument(timing=options.timing)
    if report.failed:
        directory = options.output_dir or CampaignSettings.GetOutputDirectory()
        document['counterexamples'] = [writeCounterexample(item, directory) for item in report.counterexamples]
        return Result(document, exitCode=EXIT_VIOLATION)
    return Result(document)


ACTIONS = {
    'fseq': fseq,
    'bound': bound,
    'minpoly': minpoly,
    'verify': verify,
    'tightness': tightness,
    'eval-height': evalHeight,
    'dual': dual,
    'fuzz': fuzz,
}


def _readSequence(document: dict):
    profile = CurveProfile(toInteger(requireField(document, 'd'), 'd'), toInteger(requireField(document, 'g'), 'g'))
    values = ESequence(toIntegerList(requireField(document, 'f'), 'f'))
    if values != f_sequence(profile):
        raise BadInput(f'f does not match the profile d={profile.d}, g={profile.g}', field='f')
    return profile, values


def _readBound(document: dict):
    e = ESequence(toIntegerList(requireField(document, 'e'), 'e'))
    window = GapWindow(requireField(document, 's'), requireField(document, 't'))
    constant = BoundConstant(toRational(requireField(document, 'value'), 'value'),
                             toInteger(requireField(document, 'argmax'), 'argmax'))
    coefficients = [BoundCoefficient.fromDocument(item) for item in requireField(document, 'coefficients')]
    return e, window, constant, coefficients


def _readMinimum(document: dict):
    return ChainMinimum.fromDocument(document), \
        Chain(toIntegerList(requireField(document, 'oracle_witness'), 'oracle_witness'))


def _readHeight(document: dict):
    return (HeightInput.fromDocument(requireField(document, 'input')),
            toRational(requireField(document, 'lhs'), 'lhs'),
            MuCoefficientAudit.fromDocument(requireField(document, 'audit')))


def _readDual(document: dict):
    certificate = document.get('certificate')
    return (DualData.fromDocument(requireField(document, 'dual')),
            NormCertificate.fromDocument(certificate) if certificate is not None else None)


READERS = {
    'fseq': _readSequence,
    'bound': _readBound,
    'minpoly': _readMinimum,
    'verify': Prop1Report.fromDocument,
    'tightness': TightnessCertificate.fromDocument,
    'eval-height': _readHeight,
    'dual': _readDual,
    'fuzz': CampaignReport.fromDocument,
}


def readDocument(command: str, document: dict):
    """Parse the JSON document of a command back into the library types it was built from

    :param command: Name of the command that emitted the document
    :type command: str
    :param document: The decoded JSON document
    :type document: dict
    :return: (CurveProfile, ESequence) for fseq, (ESequence, GapWindow, BoundConstant, [BoundCoefficient])
        for bound, (ChainMinimum, Chain) for minpoly, Prop1Report, TightnessCertificate,
        (HeightInput, Fraction, MuCoefficientAudit) for eval-height, (DualData, NormCertificate or None)
        for dual and CampaignReport for fuzz
    """
    if command not in READERS:
        raise BadInput(f'unknown command {command!r}', field='command')
    return READERS[command](document)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadInput(message)


def buildParser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=FORMAT_TEXT, help='output format (default: text)')
    common.add_argument('--verbose', action='store_true', help='log to stderr')
    common.add_argument('--output-dir', help='directory for counterexample files')

    parser = _Parser(prog='verifier', description='Exact Newton polygon bound verifier')
    parser.add_argument('--version', action='version', version=f"{newtonbound.PROJECT} {newtonbound.VERSION}")
    commands = parser.add_subparsers(dest='command', metavar='command', parser_class=_Parser)
    commands.required = True

    sub = commands.add_parser('fseq', parents=[common], help='print the f-sequence of a profile')
    sub.add_argument('--d', type=int, required=True)
    sub.add_argument('--g', type=int, required=True)

    sub = commands.add_parser('bound', parents=[common], help='print A(s,t) or B(s,t) and its argmax')
    sub.add_argument('--d', type=int)
    sub.add_argument('--g', type=int)
    sub.add_argument('--s', type=int)
    sub.add_argument('--t', type=int)
    sub.add_argument('--instance')

    for name, description in (('minpoly', 'print the chain minimum S and a witness chain'),
                              ('verify', 'verify the inequality on an instance'),
                              ('tightness', 'emit the equality certificate at the maximizing vertex')):
        sub = commands.add_parser(name, parents=[common], help=description)
        sub.add_argument('--instance', required=True)
        if name == 'minpoly':
            sub.add_argument('--oracle', choices=(ORACLE_BRUTEFORCE, ORACLE_DYNAMIC), default=ORACLE_BRUTEFORCE,
                             help='cross-check: exhaustive (capped) or dynamic program')

    sub = commands.add_parser('eval-height', parents=[common], help='evaluate the height inequality left side')
    sub.add_argument('--input', required=True)

    sub = commands.add_parser('dual', parents=[common], help='build the dual basis and certify its norms')
    sub.add_argument('--size', type=int, required=True)
    sub.add_argument('--s', type=int, required=True)
    sub.add_argument('--t', type=int, required=True)
    sub.add_argument('--n', help='comma separated n_{s+1},...,n_{t-1}')
    sub.add_argument('--cap', type=int, required=True, help='bound on |n_i|')
    sub.add_argument('--norms', help='comma separated norms X_1,...,X_N')
    sub.add_argument('--inflation', default='1')

    sub = commands.add_parser('fuzz', parents=[common], help='run a seeded counterexample search')
    sub.add_argument('--seed', type=int, required=True)
    sub.add_argument('--count', type=int, required=True)
    sub.add_argument('--n-min', type=int)
    sub.add_argument('--n-max', type=int)
    sub.add_argument('--e-max', type=int)
    sub.add_argument('--r-denominator-cap', type=int)
    sub.add_argument('--tightness-every', type=int)
    sub.add_argument('--workers', type=int)
    sub.add_argument('--progress', action='store_true')
    sub.add_argument('--timing', action='store_true', help='include wall time in the report')

    return parser


def run(argv: list, stdout=None) -> int:
    """Function runner: parses argv (without the program name) and calls the associated action

    :param argv: Command line arguments
    :type argv: list
    :param stdout: Stream for the rendered document, defaults to sys.stdout
    :return: Process exit code
    :rtype: int
    """
    stdout = stdout or sys.stdout
    try:
        options = buildParser().parse_args(argv)
    except BadInput as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except SystemExit as exit:  # --help / --version
        return exit.code or EXIT_OK

    if options.verbose:
        enableConsoleLogging()

    action = ACTIONS[options.command]
    log(f"executing action '{options.command}'...", logging.DEBUG)
    try:
        result = action(options)
    except BadInput as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except CapExceeded as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except ProofViolation as error:
        print(f"violation: {error}", file=sys.stderr)
        if error.document is not None:
            writeCounterexample(error.document, options.output_dir or CampaignSettings.GetOutputDirectory())
        return EXIT_VIOLATION
    except (InvariantBreach, NewtonBoundException) as error:
        print(f"violation: {error}", file=sys.stderr)
        return EXIT_VIOLATION

    stdout.write(renderDocument(result.document, options.format, rows=result.rows, text=result.text))
    return result.exitCode


def main():
    sys.exit(run(sys.argv[1:]))
