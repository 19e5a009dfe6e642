"""A first-letter-preserving bijection between two avoidance classes.

The map sends permutations avoiding {1342, 1432} to permutations avoiding
{1234, 1243} of the same length, fixing every left-to-right minimum (in
particular the first letter, so the refined counts agree class-to-class).

Writing 1 = a_1 < a_2 < ... < a_r for the left-to-right minima (a_r is the
first letter), the forward map performs one rewrite per minimum, smallest
first.  Stage t collects the values larger than a_t sitting strictly to the
right of a_t; the portion strictly right of a_{t-1} keeps its order and
moves to the front of those slots, the portion between a_t and a_{t-1} is
reversed behind it.  Stage 1 (around the letter 1) is a plain reversal of
everything to the right of 1.  Each stage is invertible from the minima
alone, and running stages largest-minimum-first undoes the map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Pair, Perm, avoids, check_permutation, left_right_minima

#: Domain of the forward map.
SOURCE_PAIR: Pair = ((1, 3, 4, 2), (1, 4, 3, 2))
#: Codomain of the forward map.
TARGET_PAIR: Pair = ((1, 2, 3, 4), (1, 2, 4, 3))


class DomainError(ValueError):
    """Input permutation lies outside the class the map is defined on."""


@dataclass(frozen=True)
class BijectionTrace:
    """Intermediate permutations of one forward application, per stage.

    ``stages[t]`` is the permutation after the stage handling the t-th
    smallest minimum (``stages[0]`` is the input), so ``stages[-1]`` is the
    image.  ``minima`` holds (position, value) pairs, 1-based, in position
    order (hence decreasing in value).
    """

    start: Perm
    stages: tuple[Perm, ...]
    minima: tuple[tuple[int, int], ...]

    @property
    def image(self) -> Perm:
        return self.stages[-1]


def _stage_slots(work: list[int], pos: int, val: int) -> list[int]:
    """0-based indices right of 1-based position ``pos`` holding values > val."""
    return [idx for idx in range(pos, len(work)) if work[idx] > val]


def _check_domain(perm: Perm, pair: Pair, direction: str) -> None:
    check_permutation(perm)
    if not avoids(perm, *pair):
        pats = " and ".join("".join(map(str, p)) for p in pair)
        raise DomainError(f"the {direction} map needs its input to avoid {pats}")


def forward_trace(perm: Perm) -> BijectionTrace:
    """Apply the forward map, recording every stage.

    >>> forward_trace((3, 5, 2, 4, 1)).stages[-1]
    (3, 4, 2, 5, 1)
    """
    perm = tuple(perm)
    _check_domain(perm, SOURCE_PAIR, "forward")
    minima = left_right_minima(perm)
    r = len(minima)
    work = list(perm)
    stages = [perm]
    for t in range(1, r + 1):
        pos_t, val_t = minima[r - t]
        slots = _stage_slots(work, pos_t, val_t)
        values = [work[idx] for idx in slots]
        if t == 1:
            keep = 0
        else:
            pos_prev = minima[r - t + 1][0]
            keep = sum(1 for idx in slots if idx >= pos_prev)
        tail = values[len(values) - keep:] if keep else []
        head = values[: len(values) - keep]
        refill = tail + head[::-1]
        for idx, v in zip(slots, refill):
            work[idx] = v
        stages.append(tuple(work))
    return BijectionTrace(start=perm, stages=tuple(stages), minima=tuple(minima))


def forward(perm: Perm) -> Perm:
    """Image of an avoider of 1342 and 1432 under the forward map.

    >>> forward((1, 3, 2))
    (1, 2, 3)
    """
    return forward_trace(perm).image


def inverse(perm: Perm) -> Perm:
    """Preimage under :func:`forward`; input must avoid 1234 and 1243.

    >>> inverse((3, 4, 2, 5, 1))
    (3, 5, 2, 4, 1)
    """
    perm = tuple(perm)
    _check_domain(perm, TARGET_PAIR, "inverse")
    minima = left_right_minima(perm)
    r = len(minima)
    work = list(perm)
    for t in range(r, 0, -1):
        pos_t, val_t = minima[r - t]
        slots = _stage_slots(work, pos_t, val_t)
        values = [work[idx] for idx in slots]
        if t == 1:
            keep = 0
        else:
            pos_prev = minima[r - t + 1][0]
            keep = sum(1 for idx in slots if idx >= pos_prev)
        tail = values[:keep]
        head = values[keep:][::-1]
        refill = head + tail
        for idx, v in zip(slots, refill):
            work[idx] = v
    result = tuple(work)
    # the backward composition inverts forward stage by stage, so this only
    # fires if the input was outside the image of the map
    if not avoids(result, *SOURCE_PAIR):
        raise DomainError("input is not the image of any avoider of 1342 and 1432")
    return result
