"""Exact Ehrenfeucht-Fraisse games on ternary structures."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import BudgetExceeded, ContractError
from .nondef import TernaryStructure, check_partial_isomorphism

DEFAULT_BUDGET = 10**8


def state_budget() -> int:
    raw = os.environ.get("TOLLWALK_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise ContractError(f"TOLLWALK_BUDGET must be a number, got {raw!r}") from None


def estimate_states(a: TernaryStructure, b: TernaryStructure, r: int) -> int:
    return ((a.n + b.n) * max(a.n, b.n)) ** r


@dataclass
class EFGameResult:
    rounds: int
    winner: str  # "Spoiler" or "Duplicator"
    trace: list = field(default_factory=list)  # [(side, spoiler_vertex, reply_or_None)]
    states: int = 0

    def lines(self) -> list[str]:
        out = []
        for i, (side, v, reply) in enumerate(self.trace, 1):
            shown = "none" if reply is None else reply
            out.append(f"round {i}: spoiler side={side} v={v}; duplicator v={shown}")
        return out


def _extends(a, b, pairs, x, y) -> bool:
    """Whether adding ``x -> y`` to the partial isomorphism ``pairs`` keeps it one."""
    for p, q in pairs:
        if p == x or q == y:
            return p == x and q == y
    dom = [p for p, _ in pairs] + [x]
    img = [q for _, q in pairs] + [y]
    k = len(dom) - 1
    for i in range(len(dom)):
        for j in range(len(dom)):
            for idx in ((k, i, j), (i, k, j), (i, j, k)):
                s, t, u = idx
                if a.D(dom[s], dom[t], dom[u]) != b.D(img[s], img[t], img[u]):
                    return False
    return True


def ef_solve(a: TernaryStructure, b: TernaryStructure, r: int, budget: int | None = None) -> EFGameResult:
    """Minimax value of the ``r``-move game; Duplicator wins iff the final map is a partial isomorphism.

    Refuses (``BudgetExceeded``) when the crude state estimate
    ``((|A|+|B|) * max(|A|,|B|))^r`` exceeds the budget; strategy mode is
    the alternative for large gadgets.
    """
    if r < 1 or a.n < 1 or b.n < 1:
        raise ContractError("ef_solve needs r >= 1 and non-empty structures")
    limit = state_budget() if budget is None else budget
    est = estimate_states(a, b, r)
    if est > limit:
        raise BudgetExceeded(
            f"estimated {est} game states exceeds budget {limit}; "
            "use strategy mode or raise TOLLWALK_BUDGET"
        )
    memo: dict = {}
    counter = [0]

    def moves(pairs):
        used_a = {p for p, _ in pairs}
        used_b = {q for _, q in pairs}
        out = [("A", x) for x in range(a.n) if x not in used_a]
        out += [("B", y) for y in range(b.n) if y not in used_b]
        return out

    def replies(pairs, side, v):
        if side == "A":
            return [y for y in range(b.n) if _extends(a, b, pairs, v, y)]
        return [x for x in range(a.n) if _extends(a, b, pairs, x, v)]

    def duplicator_wins(pairs, left) -> bool:
        if left == 0:
            return True
        key = (frozenset(pairs), left)
        hit = memo.get(key)
        if hit is not None:
            return hit
        counter[0] += 1
        if counter[0] > limit:
            raise BudgetExceeded(f"visited more than {limit} states")
        result = True
        for side, v in moves(pairs):
            if not any(
                duplicator_wins(pairs + ((v, c) if side == "A" else (c, v),), left - 1)
                for c in replies(pairs, side, v)
            ):
                result = False
                break
        memo[key] = result
        return result

    winner = "Duplicator" if duplicator_wins((), r) else "Spoiler"

    # principal line: Spoiler's first winning move against Duplicator's first legal reply,
    # or Duplicator's first winning reply against Spoiler's first move
    trace = []
    pairs = ()
    for left in range(r, 0, -1):
        options = moves(pairs)
        if not options:
            break
        if winner == "Spoiler":
            for side, v in options:
                cands = replies(pairs, side, v)
                if not any(
                    duplicator_wins(pairs + ((v, c) if side == "A" else (c, v),), left - 1) for c in cands
                ):
                    break
            reply = cands[0] if cands else None
        else:
            side, v = options[0]
            reply = next(
                c
                for c in replies(pairs, side, v)
                if duplicator_wins(pairs + ((v, c) if side == "A" else (c, v),), left - 1)
            )
        trace.append((side, v, reply))
        if reply is None:
            break
        pairs = pairs + ((v, reply) if side == "A" else (reply, v),)
    return EFGameResult(r, winner, trace, counter[0])


def replay(a: TernaryStructure, b: TernaryStructure, result: EFGameResult) -> bool:
    """Whether the trace's final map is a partial isomorphism (and every reply existed)."""
    pairs = []
    for side, v, reply in result.trace:
        if reply is None:
            return False
        pairs.append((v, reply) if side == "A" else (reply, v))
    return check_partial_isomorphism(pairs, a, b)
