from __future__ import annotations

import typing

from twisted.internet import reactor
from twisted.internet.base import ReactorBase
from twisted.internet.defer import Deferred, DeferredList, FirstError
from twisted.internet.threads import deferToThreadPool
from twisted.python.failure import Failure

from ..log import log_message
from .simulate import COUNTING_CLASSES, CountReport, run_trial, summarize, trial_seeds
from .surface import EPSILON
from .suspension import IrreduciblePermutation


class TrialRunner:
    """
    Runs independent simulation trials on a twisted thread pool and gathers
    them into a single report.

    Every trial gets its own seed, so the report is the same as the one
    from empirical_constant() with the same arguments, whatever order the
    trials finish in.
    """

    def __init__(
        self,
        pi: typing.Union[IrreduciblePermutation, typing.Sequence[int]],
        counting_class: str,
        L: float,
        trials: int,
        seed: typing.Optional[int] = None,
        epsilon: float = EPSILON,
        reactor: ReactorBase = reactor,
        threadpool=None,
    ):
        if counting_class not in COUNTING_CLASSES:
            raise ValueError(f"Invalid counting class: {counting_class!r}")
        if trials < 1:
            raise ValueError(f"Invalid number of trials: {trials}")
        if not isinstance(pi, IrreduciblePermutation):
            pi = IrreduciblePermutation(tuple(pi))

        self.pi = pi
        self.counting_class = counting_class
        self.L = L
        self.trials = trials
        self.seed = seed
        self.epsilon = epsilon
        self.reactor = reactor
        self.threadpool = threadpool
        self.finished = 0

    def log_message(self, message: str) -> None:
        log_message(message)

    def on_trial_done(self, count: int, index: int) -> int:
        self.finished += 1
        self.log_message(
            f"Trial {index + 1}/{self.trials} done, N({self.L}) = {count} "
            f"[{self.finished}/{self.trials} finished]"
        )
        return count

    def on_all_done(self, results: typing.List[typing.Tuple[bool, int]]) -> CountReport:
        counts = [count for _, count in results]
        return summarize(counts, self.counting_class, self.L)

    @staticmethod
    def unwrap_failure(failure: Failure) -> Failure:
        """
        DeferredList wraps the first failing trial in FirstError; hand the
        original failure on instead.
        """
        if failure.check(FirstError):
            return failure.value.subFailure
        return failure

    def start(self) -> Deferred:
        """
        Schedule every trial and return a Deferred that fires with the
        CountReport.
        """
        threadpool = self.threadpool or self.reactor.getThreadPool()
        deferreds = []
        for index, trial_seed in enumerate(trial_seeds(self.seed, self.trials)):
            d = deferToThreadPool(
                self.reactor,
                threadpool,
                run_trial,
                self.pi,
                self.counting_class,
                self.L,
                trial_seed,
                self.epsilon,
            )
            d.addCallback(self.on_trial_done, index)
            deferreds.append(d)

        gathered = DeferredList(deferreds, fireOnOneErrback=True, consumeErrors=True)
        gathered.addCallbacks(self.on_all_done, self.unwrap_failure)
        return gathered

    def run(self) -> CountReport:
        """
        Drive the reactor until every trial has finished.
        """
        self.log_message(
            f"Running {self.trials} trials of {self.counting_class} up to L={self.L} "
            f"on suspensions of {self.pi}"
        )
        outcome: typing.List[typing.Any] = []

        def finish(result):
            outcome.append(result)
            self.reactor.stop()

        self.reactor.callWhenRunning(lambda: self.start().addBoth(finish))
        self.reactor.run()

        result = outcome[0]
        if isinstance(result, Failure):
            result.raiseException()
        return result
