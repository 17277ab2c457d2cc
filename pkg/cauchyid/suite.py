"""The verification engine: a registry of identity checks, each evaluated on
seeded random inputs over one or more rings."""
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor
import logging
import random

from cauchyid.config import default_config
from cauchyid.generators import trial_seed
from cauchyid.parameters import trial_plan
from cauchyid.reports import VerificationReport
from cauchyid.ring import RATIONAL, RingContext, parse_ring


Check = namedtuple("Check", ("func", "ordered_only", "description"))
Trial = namedtuple("Trial", ("rng", "context", "max_n", "index", "config"))


def default_contexts(config):
    """The rationals and the prime field of DEFAULT_PRIME"""
    return [RATIONAL, RingContext.prime(config.DEFAULT_PRIME)]


class Suite(object):

    def __init__(self, config=None):
        self.config = config or default_config()
        self.checks = OrderedDict()
        self.log = logging.getLogger(__name__)

    def register_check(self, tag, func, ordered_only=False, description=None):
        """Register a check function under tag. The function receives a
        Trial and returns (lhs, rhs, spec_echo); ordered_only checks run
        over the rationals whatever rings are requested."""
        if tag in self.checks:
            raise KeyError("Check {} is already registered".format(tag))
        self.checks[tag] = Check(func, ordered_only,
                                 description or (func.__doc__ or "").strip())

    def check(self, tag, ordered_only=False, description=None):
        """Returns a decorator registering the decorated function"""
        def _decorator(func):
            self.register_check(tag, func, ordered_only, description)
            return func
        return _decorator

    def _rings(self, check, contexts):
        if check.ordered_only:
            return [str(RATIONAL)]
        return [str(context) for context in contexts]

    def plan(self, seed, trials, contexts, tags=None):
        tags = list(self.checks) if tags is None else tags
        unknown = [tag for tag in tags if tag not in self.checks]
        if unknown:
            raise KeyError("Unknown checks: {}".format(", ".join(unknown)))
        return trial_plan(seed, OrderedDict(
            (tag, self._rings(self.checks[tag], contexts)) for tag in tags),
            trials)

    def run_trial(self, item, max_n):
        """Evaluates one planned trial. The generator is seeded from the
        whole item, so a trial does not depend on what ran before it."""
        check = self.checks[item['check']]
        rng = random.Random(trial_seed(item['seed'], item['check'],
                                       item['ring'], item['trial']))
        trial = Trial(rng, parse_ring(item['ring']), max_n, item['trial'],
                      self.config)
        lhs, rhs, spec_echo = check.func(trial)
        report = VerificationReport(item['check'], lhs, rhs, spec_echo,
                                    seed=item['seed'], trial=item['trial'])
        if not report.passed:
            self.log.warning("{} failed on trial {} over {}: {} != {}"
                             .format(item['check'], item['trial'],
                                     item['ring'], report.lhs, report.rhs))
        return report

    def _run_item(self, args):
        return self.run_trial(*args)

    def run(self, seed, trials, max_n, contexts=None, tags=None, workers=1):
        """Runs every requested check for trials trials per ring. Reports
        come back ordered by check, ring and trial index however many
        workers share the load."""
        if trials < 1:
            raise ValueError("Need at least one trial, got {}".format(trials))
        if max_n < 1:
            raise ValueError("Need a size bound of at least 1, got {}"
                             .format(max_n))
        contexts = contexts or default_contexts(self.config)
        plan = self.plan(seed, trials, contexts, tags)
        self.log.info("Running {} trials of {} checks"
                      .format(len(plan), len(tags or self.checks)))

        jobs = [(item, max_n) for item in plan]
        if workers > 1:
            chunksize = max(1, len(jobs) // (4 * workers))
            with ProcessPoolExecutor(max_workers=workers) as executor:
                return list(executor.map(self._run_item, jobs,
                                         chunksize=chunksize))
        return [self._run_item(job) for job in jobs]
