#!/usr/bin/python
# -*- coding: utf-8 -*-
#  Copyright (C) 2026 newtonbound contributors
#
#  SPDX-License-Identifier: GPL-2.0-or-later
#
"""
Seeded counterexample search for the chain-minimum inequality.

Every instance k of a campaign draws from its own generator seeded with
deriveSeed(seed, k), so an instance depends only on (seed, k, config). Workers pull
instance numbers from a queue and the outcomes are merged in instance order,
which makes the report independent of the number of workers.

Classes:
    FuzzConfig
    InstanceOutcome
    CampaignReport
    CampaignWorkerThread

Functions:
    deriveSeed
    plateauInstance
    checkInstance
    fuzz_campaign
"""

import hashlib
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from queue import Empty, Queue
from typing import List, Optional, Tuple

from six import ensure_binary

from newtonbound.bounds import prop1_verify, tightness_certificate
from newtonbound.exceptions import ConfigError, DegenerateVertex, InvariantBreach, ProofViolation
from newtonbound.sequences import ESequence, GapWindow, RSequence
from newtonbound.utils import rational2str

from lib.background_thread import BackgroundThread
from lib.settings import CampaignSettings, LimitSettings
from lib.utils import log

try:
    from tqdm import tqdm
except ImportError:
    tqdm = None


@dataclass(frozen=True)
class FuzzConfig:
    seed: int
    count: int
    n_min: int = 4
    n_max: int = 12
    e_max: int = 50
    r_denominator_cap: int = 1000
    tightness_every: int = 100
    bruteforce_cap: int = 20

    def validate(self) -> 'FuzzConfig':
        """Raise :exc:`ConfigError` unless 3 <= n_min <= n_max <= cap and count >= 1"""
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f'seed must be a 64-bit unsigned integer (got {self.seed})', field='seed')
        if self.count < 1:
            raise ConfigError(f'count must be >= 1 (got {self.count})', field='count')
        if not 3 <= self.n_min <= self.n_max <= self.bruteforce_cap:
            raise ConfigError(
                f'need 3 <= n_min <= n_max <= {self.bruteforce_cap} (got n_min={self.n_min}, n_max={self.n_max})',
                field='n_max')
        if self.e_max < 1:
            raise ConfigError(f'e_max must be >= 1 (got {self.e_max})', field='e_max')
        if self.r_denominator_cap < 1:
            raise ConfigError(f'r_denominator_cap must be >= 1 (got {self.r_denominator_cap})',
                              field='r_denominator_cap')
        if self.tightness_every < 1:
            raise ConfigError(f'tightness_every must be >= 1 (got {self.tightness_every})', field='tightness_every')
        return self

    @classmethod
    def fromSettings(cls, seed: int, count: int, **overrides) -> 'FuzzConfig':
        values = {
            'n_min': CampaignSettings.GetMinimumSize(),
            'n_max': CampaignSettings.GetMaximumSize(),
            'e_max': CampaignSettings.GetMaximumDegreeDrop(),
            'r_denominator_cap': CampaignSettings.GetDenominatorCap(),
            'tightness_every': CampaignSettings.GetTightnessInterval(),
            'bruteforce_cap': LimitSettings.GetBruteforceCap(),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(seed=seed, count=count, **values)


def deriveSeed(seed: int, index: int) -> int:
    """64-bit sub-seed of instance index, independent of any other instance"""
    digest = hashlib.sha1(ensure_binary(f"{seed}:{index}")).hexdigest()
    return int(digest[:16], 16)


def plateauInstance(rng: random.Random, config: FuzzConfig) -> Tuple[ESequence, RSequence, GapWindow]:
    """Draw one instance: N uniform in [n_min, n_max], a window with 1 <= s < t <= N, e_2..e_N
    sorted uniform draws from [0, e_max] flattened to e_s on the window, r sorted descending
    draws p/q with 1 <= q <= r_denominator_cap and |p| <= 10 q_cap

    :param rng: Generator seeded with the instance sub-seed
    :type rng: random.Random
    :return: The e-sequence, r-sequence and window
    :rtype: tuple
    """
    n = rng.randint(config.n_min, config.n_max)
    s = rng.randint(1, n - 1)
    t = rng.randint(s + 1, n)

    e = [0] + sorted(rng.randint(0, config.e_max) for _ in range(n - 1))
    for j in range(s + 1, t):
        e[j - 1] = e[s - 1]

    bound = 10 * config.r_denominator_cap
    r = sorted((Fraction(rng.randint(-bound, bound), rng.randint(1, config.r_denominator_cap)) for _ in range(n)),
               reverse=True)
    return ESequence(tuple(e)), RSequence(tuple(r)), GapWindow(s, t)


@dataclass(frozen=True)
class InstanceOutcome:
    index: int
    slack: Optional[Fraction] = None
    violated: bool = False
    mismatch: bool = False
    tightness_checked: bool = False
    tightness_passed: bool = False
    document: Optional[dict] = field(default=None, repr=False)


def _instanceDocument(e: ESequence, r: RSequence, window: GapWindow) -> dict:
    return {
        'e': list(e.values),
        'r': [rational2str(value) for value in r.values],
        's': window.s,
        't': window.t,
    }


def checkInstance(index: int, config: FuzzConfig) -> InstanceOutcome:
    """Generate instance index, verify the inequality and, on every tightness_every-th
    instance, the equality at the maximizing vertex

    :return: Outcome; document is set whenever something failed
    :rtype: InstanceOutcome
    """
    e, r, window = plateauInstance(random.Random(deriveSeed(config.seed, index)), config)
    document = _instanceDocument(e, r, window)
    try:
        report = prop1_verify(e, r, window, cap=config.bruteforce_cap)
    except InvariantBreach as error:
        log(f"instance {index}: {error}", logging.WARNING)
        return InstanceOutcome(index, mismatch=True, document=document)

    violated = report.slack < 0
    tightnessChecked = tightnessPassed = False
    if index % config.tightness_every == 0:
        try:
            tightness_certificate(e, window, cap=config.bruteforce_cap)
            tightnessChecked = tightnessPassed = True
        except DegenerateVertex:
            pass
        except ProofViolation as error:
            log(f"instance {index}: {error}", logging.WARNING)
            tightnessChecked = True

    failed = violated or (tightnessChecked and not tightnessPassed)
    return InstanceOutcome(index, report.slack, violated, False, tightnessChecked, tightnessPassed,
                           dict(document, report=report.toDocument()) if failed else None)


class CampaignWorkerThread(BackgroundThread):
    def __init__(self, config: FuzzConfig, jobs: Queue, outcomes: Queue, name: str = "CampaignWorkerThread"):
        self._config = config
        self._jobs = jobs
        self._outcomes = outcomes

        super(CampaignWorkerThread, self).__init__(name=name)

    def run(self):
        while not self.should_stop():
            try:
                index = self._jobs.get_nowait()
            except Empty:
                return

            try:
                self._outcomes.put(checkInstance(index, self._config))
            except Exception as error:  # surfaced by fuzz_campaign in instance order
                self._outcomes.put((index, error))
            finally:
                self._jobs.task_done()


@dataclass
class CampaignReport:
    seed: int
    count: int
    instances: int = 0
    violations: int = 0
    mismatches: int = 0
    min_slack: Optional[Fraction] = None
    tightness_checks: int = 0
    tightness_passed: int = 0
    counterexamples: List[dict] = field(default_factory=list, repr=False)
    wall_time: Optional[float] = None

    @property
    def failed(self) -> bool:
        return bool(self.violations or self.mismatches or self.tightness_checks != self.tightness_passed)

    def add(self, outcome: InstanceOutcome):
        self.instances += 1
        if outcome.slack is not None and (self.min_slack is None or outcome.slack < self.min_slack):
            self.min_slack = outcome.slack
        self.violations += int(outcome.violated)
        self.mismatches += int(outcome.mismatch)
        self.tightness_checks += int(outcome.tightness_checked)
        self.tightness_passed += int(outcome.tightness_passed)
        if outcome.document is not None:
            self.counterexamples.append(outcome.document)

    def toDocument(self, timing: bool = False) -> dict:
        document = {
            'seed': self.seed,
            'count': self.count,
            'instances': self.instances,
            'violations': self.violations,
            'mismatches': self.mismatches,
            'min_slack': rational2str(self.min_slack) if self.min_slack is not None else None,
            'tightness_checks': self.tightness_checks,
            'tightness_passed': self.tightness_passed,
        }
        if timing and self.wall_time is not None:
            document['wall_time'] = round(self.wall_time, 3)
        return document

    @classmethod
    def fromDocument(cls, document: dict) -> 'CampaignReport':
        minSlack = document.get('min_slack')
        return cls(
            seed=document['seed'],
            count=document['count'],
            instances=document['instances'],
            violations=document['violations'],
            mismatches=document['mismatches'],
            min_slack=Fraction(minSlack) if minSlack is not None else None,
            tightness_checks=document['tightness_checks'],
            tightness_passed=document['tightness_passed'],
            wall_time=document.get('wall_time'),
        )


def fuzz_campaign(config: FuzzConfig, workers: int = 1, progress: bool = False) -> CampaignReport:
    """Run a seeded campaign

    :param config: Campaign configuration, validated here
    :type config: FuzzConfig
    :param workers: Number of worker threads
    :type workers: int
    :param progress: Show a tqdm progress bar on stderr if tqdm is installed
    :type progress: bool
    :return: Report identical for identical configs regardless of workers
    :rtype: CampaignReport
    """
    config.validate()
    if workers < 1:
        raise ConfigError(f'workers must be >= 1 (got {workers})', field='workers')

    started = time.monotonic()
    jobs = Queue()
    outcomes = Queue()
    for index in range(config.count):
        jobs.put(index)

    threads = [CampaignWorkerThread(config, jobs, outcomes, name=f"CampaignWorkerThread-{i}")
               for i in range(min(workers, config.count))]
    for thread in threads:
        thread.start()

    bar = tqdm(total=config.count, unit='instance') if progress and tqdm is not None else None
    collected = []
    try:
        while len(collected) < config.count:
            collected.append(outcomes.get())
            if bar is not None:
                bar.update(1)
    finally:
        if bar is not None:
            bar.close()
        for thread in threads:
            thread.stop(wait=True)

    collected.sort(key=lambda item: item[0] if isinstance(item, tuple) else item.index)
    report = CampaignReport(config.seed, config.count)
    for item in collected:
        if isinstance(item, tuple):
            raise item[1]
        report.add(item)
    report.wall_time = time.monotonic() - started

    log(f"campaign seed={config.seed} count={config.count}: {report.violations} violations, "
        f"{report.mismatches} mismatches, min slack {report.min_slack}, {report.wall_time:.2f}s")
    return report
