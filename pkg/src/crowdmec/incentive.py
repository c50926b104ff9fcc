"""Reward-penalty functions for belief-elicitation crowd tasks.

A worker answers a binary task and commits a belief value ``x`` in
[0.5, 1], her stated probability that the answer will be judged
correct. Judged-correct answers earn ``reward(k, x)``; judged-wrong
answers cost ``penalty(k, x)``. The integer order ``k >= 2`` selects
one member of a polynomial function family with three properties:

* a worker maximizes her expected gain exactly by committing her true
  confidence (grid-searched in the test suite),
* reward and penalty both increase strictly with ``x`` on (0.5, 1),
* reward(k, 0.5) = penalty(k, 0.5) = 0 and reward(k, 1) = 1.

``truthful_expected_gain(k, c)`` is the expected gain of a truthful
commit and doubles as the weight of that commit in the final-answer
aggregation (see :mod:`crowdmec.aggregation`).

All belief arguments accept numpy arrays and broadcast elementwise;
the order ``k`` is always a scalar integer.
"""

from __future__ import annotations

import numbers

import numpy as np

MIN_ORDER = 2
# Denominators grow as 2**k; orders beyond this have no practical use
# and only invite float overflow.
MAX_ORDER = 64


def _checked_order(k) -> int:
    if isinstance(k, bool) or not isinstance(k, numbers.Integral):
        raise ValueError(f"order k must be an integer >= {MIN_ORDER}, got {k!r}")
    k = int(k)
    if not MIN_ORDER <= k <= MAX_ORDER:
        raise ValueError(
            f"order k must be in [{MIN_ORDER}, {MAX_ORDER}], got {k}"
        )
    return k


def _check_unit_belief(name: str, value) -> None:
    arr = np.asarray(value, dtype=float)
    if arr.size == 0 or not np.all((arr >= 0.5) & (arr <= 1.0)):
        raise ValueError(f"{name} must lie in [0.5, 1], got {value!r}")


def _denominator(k: int) -> float:
    return 2.0**k - k - 1


def reward(k, x):
    """Reward for a judged-correct commit with belief ``x`` at order ``k``.

    Evaluates (-(k-1) 2^k x^k + 2^k k x^(k-1) - (k+1)) / (2^k - k - 1),
    which rises from 0 at x = 0.5 to exactly 1 at x = 1.
    """
    k = _checked_order(k)
    _check_unit_belief("belief x", x)
    t = 2.0 * x  # 2**k * x**k overflows long before (2x)**k does
    num = -(k - 1) * t**k + 2.0 * k * t ** (k - 1) - (k + 1)
    return num / _denominator(k)


def penalty(k, x):
    """Penalty for a judged-wrong commit with belief ``x`` at order ``k``.

    Evaluates ((k-1) 2^k x^k - (k-1)) / (2^k - k - 1); zero at x = 0.5,
    growing to (k-1)(2^k - 1)/(2^k - k - 1) at x = 1.
    """
    k = _checked_order(k)
    _check_unit_belief("belief x", x)
    t = 2.0 * x
    return (k - 1) * (t**k - 1.0) / _denominator(k)


def expected_gain(k, x, c):
    """Expected gain of committing belief ``x`` when the true confidence is ``c``.

    c * reward(k, x) - (1 - c) * penalty(k, x). The maximum over x sits
    at x = c, so truthful committing is the worker's best strategy.
    """
    _check_unit_belief("confidence c", c)
    return c * reward(k, x) - (1.0 - c) * penalty(k, x)


def truthful_expected_gain(k, c):
    """Expected gain of a truthful commit (x = c) in closed form.

    (2^k c^k - 2ck + k - 1) / (2^k - k - 1); matches
    ``expected_gain(k, c, c)`` and maps [0.5, 1] onto [0, 1]
    monotonically, which is what qualifies it as an aggregation weight.
    """
    k = _checked_order(k)
    _check_unit_belief("confidence c", c)
    t = 2.0 * c
    return (t**k - 2.0 * c * k + k - 1) / _denominator(k)


def major_expected_gain(rho, c):
    """Expected gain under a flat per-accepted-answer payment ``rho``.

    Models the majority-vote baseline where a worker is paid ``rho``
    whenever her answer is accepted, so the expected gain is c * rho.
    """
    if not np.all(np.asarray(rho, dtype=float) >= 0.0):
        raise ValueError(f"rho must be >= 0, got {rho!r}")
    _check_unit_belief("confidence c", c)
    return c * rho
