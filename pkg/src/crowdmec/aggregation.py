"""Answer aggregation for binary crowd tasks.

Task types are the integers -1 and +1. Three aggregators act on the
commits of one task:

* ``benchmark_answer`` - unweighted sign vote, used only to judge which
  commits earn a reward and which pay a penalty,
* ``final_answer`` - expected-gain-weighted sign vote, the answer that
  is actually returned to the publisher,
* ``majority_answer`` - same computation as the benchmark, but playing
  the role of the *final* answer in the flat-payment baseline.

Ties resolve to +1 everywhere: sign(0) = +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .incentive import MAX_ORDER, MIN_ORDER, truthful_expected_gain

TASK_TYPES = (-1, 1)


def sign(value) -> int:
    """-1 for negative values, +1 otherwise (zero counts as +1)."""
    return -1 if value < 0 else 1


class Judgement(Enum):
    REWARDED = "rewarded"
    PENALIZED = "penalized"


@dataclass(frozen=True)
class Commit:
    """One worker's (answer, belief, order) submission for one task."""

    worker_id: str
    task_id: str
    answer: int
    belief: float
    order: int

    def __post_init__(self):
        if self.answer not in TASK_TYPES:
            raise ValueError(f"answer must be -1 or +1, got {self.answer!r}")
        if not 0.5 <= self.belief <= 1.0:
            raise ValueError(f"belief must lie in [0.5, 1], got {self.belief!r}")
        if not MIN_ORDER <= self.order <= MAX_ORDER:
            raise ValueError(
                f"order must be in [{MIN_ORDER}, {MAX_ORDER}], got {self.order!r}"
            )


def _checked_task_commits(commits) -> list[Commit]:
    commits = list(commits)
    if not commits:
        raise ValueError("commit list must be nonempty")
    task_id = commits[0].task_id
    for c in commits:
        if c.task_id != task_id:
            raise ValueError(
                f"commits mix task ids {task_id!r} and {c.task_id!r}"
            )
    return commits


def benchmark_answer(commits) -> int:
    """Sign of the unweighted answer sum; judges rewards, never published."""
    commits = _checked_task_commits(commits)
    return sign(sum(c.answer for c in commits))


def majority_answer(commits) -> int:
    """Final answer of the flat-payment baseline: the plain majority sign."""
    commits = _checked_task_commits(commits)
    return sign(sum(c.answer for c in commits))


def final_answer(commits) -> int:
    """Sign of the expected-gain-weighted answer sum.

    Each commit is weighted by ``truthful_expected_gain(order, belief)``,
    so a single high-belief commit can outvote a low-belief majority.
    """
    commits = _checked_task_commits(commits)
    return sign(
        sum(truthful_expected_gain(c.order, c.belief) * c.answer for c in commits)
    )


def judge(commit: Commit, benchmark: int) -> Judgement:
    """Rewarded iff the commit's answer matches the benchmark answer."""
    if benchmark not in TASK_TYPES:
        raise ValueError(f"benchmark must be -1 or +1, got {benchmark!r}")
    if commit.answer == benchmark:
        return Judgement.REWARDED
    return Judgement.PENALIZED
