"""Double-entry settlement of rewards, penalties, and brokerage.

Money only ever moves between accounts, so the sum of all balances in a
ledger is zero at all times. A settled commit produces:

* Rewarded: publisher pays ``reward(k, x)`` to the worker, plus
  ``eta * reward / len(mns)`` brokerage to each serving masternode.
* Penalized: the worker pays ``penalty(k, x)`` to the publisher, and
  each serving masternode pays its equal share of ``eta * penalty``
  back to the publisher (the publisher is the injured party, so the
  masternodes' penalty share flows to it).

Zero-amount movements (e.g. belief exactly 0.5, or eta = 0) produce no
postings at all. Worker balances may go negative; deposits are treated
as unbounded credit rather than escrow.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .aggregation import Commit, Judgement
from .incentive import penalty as penalty_fn
from .incentive import reward as reward_fn


class Role(Enum):
    PUBLISHER = "Publisher"
    WORKER = "Worker"
    MASTERNODE = "Masternode"


@dataclass(frozen=True)
class Account:
    role: Role
    id: str


class Memo(Enum):
    REWARD = "Reward"
    PENALTY = "Penalty"
    BROKERAGE_ON_REWARD = "BrokerageOnReward"
    BROKERAGE_ON_PENALTY = "BrokerageOnPenalty"


@dataclass(frozen=True)
class LedgerPosting:
    """One signed money movement: ``amount`` flows debit -> credit."""

    debit: Account
    credit: Account
    amount: float
    memo: Memo

    def __post_init__(self):
        if not self.amount > 0.0:
            raise ValueError(f"posting amount must be > 0, got {self.amount!r}")
        if self.debit == self.credit:
            raise ValueError(f"posting may not debit and credit {self.debit}")


class Ledger:
    """Account balances plus an append-only journal of postings."""

    def __init__(self):
        self._balances: dict[Account, float] = {}
        self._journal: list[LedgerPosting] = []

    def apply(self, postings) -> "Ledger":
        """Apply postings in order; appends them to the journal."""
        for p in postings:
            self._balances[p.debit] = self._balances.get(p.debit, 0.0) - p.amount
            self._balances[p.credit] = self._balances.get(p.credit, 0.0) + p.amount
            self._journal.append(p)
        return self

    @property
    def journal(self) -> tuple[LedgerPosting, ...]:
        return tuple(self._journal)

    def net_position(self, account: Account) -> float:
        """Credits minus debits; zero for accounts never posted."""
        return self._balances.get(account, 0.0)

    def balances(self) -> dict[Account, float]:
        return dict(self._balances)

    def total_by_memo(self, memo: Memo) -> float:
        return sum(p.amount for p in self._journal if p.memo is memo)


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not 0.0 <= eta < 1.0:
        raise ValueError(f"brokerage ratio eta must lie in [0, 1), got {eta!r}")
    return eta


def settle_commit(
    commit: Commit,
    judgement: Judgement,
    publisher: Account,
    eta: float,
    serving_mns,
) -> list[LedgerPosting]:
    """Postings settling one judged commit between its stakeholders.

    ``serving_mns`` are the masternodes that relayed this commit's data;
    the brokerage ``eta * amount`` is split equally between them.
    """
    eta = _check_eta(eta)
    mns = list(serving_mns)
    if not mns:
        raise ValueError("serving masternode list must be nonempty")
    for mn in mns:
        if mn.role is not Role.MASTERNODE:
            raise ValueError(f"serving account {mn} is not a masternode")
    if publisher.role is not Role.PUBLISHER:
        raise ValueError(f"account {publisher} is not a publisher")

    worker = Account(Role.WORKER, commit.worker_id)
    postings: list[LedgerPosting] = []
    if judgement is Judgement.REWARDED:
        r = reward_fn(commit.order, commit.belief)
        if r > 0.0:
            postings.append(LedgerPosting(publisher, worker, r, Memo.REWARD))
        share = eta * r / len(mns)
        if share > 0.0:
            postings.extend(
                LedgerPosting(publisher, mn, share, Memo.BROKERAGE_ON_REWARD)
                for mn in mns
            )
    else:
        p = penalty_fn(commit.order, commit.belief)
        if p > 0.0:
            postings.append(LedgerPosting(worker, publisher, p, Memo.PENALTY))
        share = eta * p / len(mns)
        if share > 0.0:
            postings.extend(
                LedgerPosting(mn, publisher, share, Memo.BROKERAGE_ON_PENALTY)
                for mn in mns
            )
    return postings


JOURNAL_CSV_HEADER = (
    "run_id",
    "seq",
    "debit_role",
    "debit_id",
    "credit_role",
    "credit_id",
    "amount",
    "memo",
)


def write_journal_csv(ledger: Ledger, run_id: str, path) -> None:
    """Export the journal, one row per posting in application order."""
    with open(Path(path), "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(JOURNAL_CSV_HEADER)
        for seq, p in enumerate(ledger.journal):
            writer.writerow(
                (
                    run_id,
                    seq,
                    p.debit.role.value,
                    p.debit.id,
                    p.credit.role.value,
                    p.credit.id,
                    repr(p.amount),
                    p.memo.value,
                )
            )
