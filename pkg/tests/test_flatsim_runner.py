from __future__ import annotations

import pytest
from twisted.python.failure import Failure

import saddlecount.flatsim.runner
from saddlecount.errors import SamplingFailure
from saddlecount.flatsim.runner import TrialRunner
from saddlecount.flatsim.simulate import CLOSED, empirical_constant


class ImmediateThreadPool:
    """
    Runs every job on the calling thread.
    """

    def callInThreadWithCallback(self, onResult, f, *args, **kwargs):
        try:
            result = f(*args, **kwargs)
        except Exception:
            onResult(False, Failure())
        else:
            onResult(True, result)


class FakeReactor:
    def __init__(self):
        self.threadpool = ImmediateThreadPool()
        self.pending = []
        self.stopped = False

    def getThreadPool(self):
        return self.threadpool

    def callFromThread(self, f, *args, **kwargs):
        f(*args, **kwargs)

    def callWhenRunning(self, f, *args, **kwargs):
        self.pending.append((f, args, kwargs))

    def run(self):
        for f, args, kwargs in self.pending:
            f(*args, **kwargs)

    def stop(self):
        self.stopped = True


def test_runner_matches_sequential_run():
    reactor = FakeReactor()
    runner = TrialRunner((2, 1), CLOSED, 2.0, 3, seed=5, reactor=reactor)
    report = runner.run()
    assert reactor.stopped
    assert runner.finished == 3
    assert report == empirical_constant((2, 1), CLOSED, 2.0, 3, seed=5)


def test_runner_uses_the_given_threadpool():
    reactor = FakeReactor()
    reactor.threadpool = None
    runner = TrialRunner(
        (4, 3, 2, 1), CLOSED, 1.5, 2, seed=1, reactor=reactor, threadpool=ImmediateThreadPool()
    )
    assert runner.run().trials == 2


def test_runner_logs_progress(capsys):
    TrialRunner((2, 1), CLOSED, 1.0, 2, seed=0, reactor=FakeReactor()).run()
    err = capsys.readouterr().err
    assert "Running 2 trials" in err
    assert "Trial 1/2 done" in err
    assert "[2/2 finished]" in err


def test_runner_raises_the_trial_error(monkeypatch):
    def fail(*args):
        raise SamplingFailure("Invalid suspension")

    monkeypatch.setattr(saddlecount.flatsim.runner, "run_trial", fail)
    runner = TrialRunner((2, 1), CLOSED, 1.0, 3, seed=0, reactor=FakeReactor())
    with pytest.raises(SamplingFailure):
        runner.run()


@pytest.mark.parametrize(
    "counting_class,trials", [("everything", 2), (CLOSED, 0)],
)
def test_runner_rejects_bad_arguments(counting_class, trials):
    with pytest.raises(ValueError):
        TrialRunner((2, 1), counting_class, 1.0, trials, reactor=FakeReactor())
