"""Two-player join/leave games solved by exhaustive enumeration.

Two edge servers each choose to join a shared trading ecosystem or to
leave and trade through a remote intermediary. Two parameterizations
are provided:

* ``table1_game`` - the intermediated economy: a unilateral joiner
  transfers alpha (or beta) of its cooperation surplus to the leaver.
* ``table2_game`` - the trustless economy: a unilateral move only costs
  the small service fees eps1/eps2, so joining pays off regardless of
  the other player's choice.

Equilibrium notions are computed over the 4-profile space, exact and
complete. ``strong_nash`` uses the strict-improvement coalition
definition (Aumann): a profile survives unless some coalition - {A},
{B}, or {A, B} - has a joint deviation making *every* member strictly
better off. Note that under this definition the intermediated game's
strong equilibria are the asymmetric profiles whenever alpha < c and
beta < d; (leave, leave) is not among them, and leave is only weakly
dominant at the boundary alpha = c, beta = d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class Strategy(Enum):
    JOIN = "join"
    LEAVE = "leave"

    def __lt__(self, other):
        if not isinstance(other, Strategy):
            return NotImplemented
        return self.value < other.value


class Profile(NamedTuple):
    a: Strategy
    b: Strategy


PROFILES = (
    Profile(Strategy.JOIN, Strategy.JOIN),
    Profile(Strategy.JOIN, Strategy.LEAVE),
    Profile(Strategy.LEAVE, Strategy.JOIN),
    Profile(Strategy.LEAVE, Strategy.LEAVE),
)

PLAYERS = ("A", "B")
DOMINANCE_MODES = ("strict", "weak")


@dataclass(frozen=True, eq=True)
class TwoByTwoGame:
    """Payoff table mapping each profile to (payoff_A, payoff_B)."""

    payoffs: tuple[tuple[float, float], tuple[float, float], tuple[float, float], tuple[float, float]]

    def __post_init__(self):
        if len(self.payoffs) != 4:
            raise ValueError("a 2x2 game needs exactly 4 payoff pairs")
        for pair in self.payoffs:
            if len(pair) != 2 or not all(math.isfinite(v) for v in pair):
                raise ValueError(f"payoffs must be finite pairs, got {pair!r}")

    def payoff(self, profile: Profile) -> tuple[float, float]:
        return self.payoffs[PROFILES.index(Profile(*profile))]


def _game_from_map(mapping) -> TwoByTwoGame:
    return TwoByTwoGame(tuple(tuple(mapping[p]) for p in PROFILES))


def _check_positive(**named) -> None:
    for name, value in named.items():
        if not value > 0:
            raise ValueError(f"game parameter {name} must be > 0, got {value!r}")


def table1_game(a, b, c, d, alpha, beta) -> TwoByTwoGame:
    """Join/leave payoffs of the intermediated economy.

    Requires 0 < alpha <= c and 0 < beta <= d: a unilateral joiner can
    give away at most the cooperation surplus it would have earned.
    """
    _check_positive(a=a, b=b, c=c, d=d, alpha=alpha, beta=beta)
    if alpha > c:
        raise ValueError(f"note violated: 0 < alpha <= c requires alpha <= {c}, got {alpha}")
    if beta > d:
        raise ValueError(f"note violated: 0 < beta <= d requires beta <= {d}, got {beta}")
    J, L = Strategy.JOIN, Strategy.LEAVE
    return _game_from_map(
        {
            Profile(J, J): (a + c, b + d),
            Profile(J, L): (a + c - alpha, b + d + alpha),
            Profile(L, J): (a + c + beta, b + d - beta),
            Profile(L, L): (a, b),
        }
    )


def table2_game(a, b, c, d, eps1, eps2, alpha=None, beta=None) -> TwoByTwoGame:
    """Join/leave payoffs of the trustless economy.

    Requires 0 < eps1, eps2 < min(c, d). When the companion
    intermediated parameters alpha/beta are supplied, also checks that
    the service fees undercut them (eps1, eps2 < alpha, beta).
    """
    _check_positive(a=a, b=b, c=c, d=d, eps1=eps1, eps2=eps2)
    bound = min(c, d)
    if eps1 >= bound:
        raise ValueError(f"note violated: eps1 < c, d requires eps1 < {bound}, got {eps1}")
    if eps2 >= bound:
        raise ValueError(f"note violated: eps2 < c, d requires eps2 < {bound}, got {eps2}")
    for name, companion in (("alpha", alpha), ("beta", beta)):
        if companion is not None and not (eps1 < companion and eps2 < companion):
            raise ValueError(
                f"note violated: eps1, eps2 < alpha, beta requires both below {name} = {companion}"
            )
    J, L = Strategy.JOIN, Strategy.LEAVE
    return _game_from_map(
        {
            Profile(J, J): (a + c, b + d),
            Profile(J, L): (a + c - eps2, b + d - eps2),
            Profile(L, J): (a + c - eps1, b + d - eps1),
            Profile(L, L): (a, b),
        }
    )


def _other(strategy: Strategy) -> Strategy:
    return Strategy.LEAVE if strategy is Strategy.JOIN else Strategy.JOIN


def pure_nash(game: TwoByTwoGame) -> set[Profile]:
    """Profiles with no strictly improving unilateral deviation."""
    result = set()
    for prof in PROFILES:
        pa, pb = game.payoff(prof)
        a_dev = game.payoff(Profile(_other(prof.a), prof.b))[0] > pa
        b_dev = game.payoff(Profile(prof.a, _other(prof.b)))[1] > pb
        if not a_dev and not b_dev:
            result.add(prof)
    return result


def strong_nash(game: TwoByTwoGame) -> set[Profile]:
    """Profiles surviving all coalition deviations (strict-improvement rule).

    Coalitions {A} and {B} reproduce the Nash condition; coalition
    {A, B} may jump to any other profile and blocks it only if both
    players gain strictly.
    """
    result = set()
    for prof in PROFILES:
        pa, pb = game.payoff(prof)
        blocked = (
            game.payoff(Profile(_other(prof.a), prof.b))[0] > pa
            or game.payoff(Profile(prof.a, _other(prof.b)))[1] > pb
        )
        if not blocked:
            for alt in PROFILES:
                if alt == prof:
                    continue
                qa, qb = game.payoff(alt)
                if qa > pa and qb > pb:
                    blocked = True
                    break
        if not blocked:
            result.add(prof)
    return result


def dominant_strategies(game: TwoByTwoGame, player: str, mode: str = "strict") -> set[Strategy]:
    """Strategies of ``player`` that dominate the alternative.

    ``mode="strict"``: strictly better against every opponent strategy.
    ``mode="weak"``: never worse, strictly better at least once.
    """
    if player not in PLAYERS:
        raise ValueError(f"player must be one of {PLAYERS}, got {player!r}")
    if mode not in DOMINANCE_MODES:
        raise ValueError(f"mode must be one of {DOMINANCE_MODES}, got {mode!r}")
    side = PLAYERS.index(player)
    result = set()
    for mine in Strategy:
        other_strat = _other(mine)
        diffs = []
        for opp in Strategy:
            prof = Profile(mine, opp) if side == 0 else Profile(opp, mine)
            alt = Profile(other_strat, opp) if side == 0 else Profile(opp, other_strat)
            diffs.append(game.payoff(prof)[side] - game.payoff(alt)[side])
        if mode == "strict":
            dominant = all(d > 0 for d in diffs)
        else:
            dominant = all(d >= 0 for d in diffs) and any(d > 0 for d in diffs)
        if dominant:
            result.add(mine)
    return result


def pareto_frontier(game: TwoByTwoGame) -> set[Profile]:
    """Profiles not Pareto-dominated (weakly better for both, strictly for one)."""
    result = set()
    for prof in PROFILES:
        pa, pb = game.payoff(prof)
        dominated = False
        for alt in PROFILES:
            if alt == prof:
                continue
            qa, qb = game.payoff(alt)
            if qa >= pa and qb >= pb and (qa > pa or qb > pb):
                dominated = True
                break
        if not dominated:
            result.add(prof)
    return result
