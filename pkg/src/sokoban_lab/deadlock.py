"""Deadlock identification: static dead squares and dynamic freeze detection.

Both rules are sound: they only ever reject states from which no goal
configuration is reachable, so pruning with them never loses solutions.
"""

from dataclasses import dataclass
from functools import lru_cache

from .board import Direction, Grid, Square, in_bounds, move
from .errors import BoxNotPresentError
from .state import State

_VERTICAL = (Direction.UP, Direction.DOWN)
_HORIZONTAL = (Direction.LEFT, Direction.RIGHT)


@dataclass(frozen=True)
class DeadSquareMap:
    """Per-floor-square liveness: a square is dead iff a lone box there can
    never be pushed to any goal.  Walls are not in the domain."""

    floor: frozenset[Square]
    dead: frozenset[Square]

    def is_dead(self, square: Square) -> bool:
        return square in self.dead


@lru_cache(maxsize=None)
def dead_squares(grid: Grid) -> DeadSquareMap:
    """Static single-box analysis via backward pull BFS from all goals.

    A square is live iff it can be reached by pulling a box outward from
    some goal; pulling a box from b to b+d needs both b+d and b+2d to be
    non-wall squares.  Pusher reachability is deliberately ignored.
    """
    live: set[Square] = set(grid.goals)
    stack = list(grid.goals)
    while stack:
        sq = stack.pop()
        for d in Direction:
            dest = move(sq, d)
            beyond = move(sq, d, 2)
            if (
                dest not in live
                and _is_floor(grid, dest)
                and _is_floor(grid, beyond)
            ):
                live.add(dest)
                stack.append(dest)
    return DeadSquareMap(floor=grid.floor, dead=grid.floor - live)


def _is_floor(grid: Grid, square: Square) -> bool:
    return in_bounds(grid, square) and square not in grid.walls


def _blocks_statically(grid: Grid, square: Square) -> bool:
    return not in_bounds(grid, square) or square in grid.walls


def _frozen(
    grid: Grid, boxes: frozenset[Square], box: Square, assumed: frozenset[Square]
) -> tuple[bool, set[Square]]:
    """Is `box` immovable on both axes?  Returns (frozen, cited boxes).

    A neighboring box already assumed frozen on the current recursion path
    counts as blocking (mutual support: neither box can move first).  The
    cited set collects every box whose frozenness the proof relies on.
    """
    assumed = assumed | {box}
    cited = {box}
    for axis in (_VERTICAL, _HORIZONTAL):
        n1, n2 = move(box, axis[0]), move(box, axis[1])
        if _blocks_statically(grid, n1) or _blocks_statically(grid, n2):
            continue
        blocked = False
        for n in (n1, n2):
            if n in boxes:
                if n in assumed:
                    blocked = True
                    break
                sub_frozen, sub_cited = _frozen(grid, boxes, n, assumed)
                if sub_frozen:
                    cited |= sub_cited
                    blocked = True
                    break
        if not blocked:
            return False, set()
    return True, cited


def frozen_cluster_off_goal(grid: Grid, boxes: frozenset[Square], box: Square) -> bool:
    """Freeze verdict on a raw box set (fast path used by the search loop)."""
    frozen, cluster = _frozen(grid, boxes, box, frozenset())
    if not frozen:
        return False
    return any(b not in grid.goal_set for b in cluster)


def is_freeze_deadlock(grid: Grid, state: State, just_pushed: Square) -> bool:
    """True iff the box at `just_pushed` sits in a frozen cluster that still
    has a box off-goal.  Never true for a goal state."""
    if just_pushed not in state.boxes:
        raise BoxNotPresentError(f"no box at {just_pushed}")
    return frozen_cluster_off_goal(grid, state.boxes, just_pushed)
