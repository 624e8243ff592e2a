"""Push-level search states and transition mechanics.

A State is a box set plus a normalized pusher position: the row-major
minimum of the pusher's reachable region.  Two placements that differ only
by where the pusher stands inside one region collapse to the same State,
which keeps the search space small.
"""

from collections import deque
from dataclasses import dataclass, field

from .board import Direction, Grid, Square, in_bounds, move
from .errors import IllegalPushError, IllegalStartError

StateKey = tuple[frozenset[Square], Square]


@dataclass(frozen=True)
class Step:
    """One box push: the box's source square and the push direction.

    `id` is the step's ordinal inside a Solution; it is excluded from
    equality so that freshly generated pushes compare by mechanics alone.
    """

    box_from: Square
    direction: Direction
    id: int = field(default=0, compare=False)


@dataclass(frozen=True)
class State:
    boxes: frozenset[Square]
    pusher_norm: Square


def reachable_region(
    grid: Grid, boxes: frozenset[Square] | set[Square], start: Square
) -> frozenset[Square]:
    """All squares the pusher can walk to from `start` (4-connected, no pushes)."""
    if not in_bounds(grid, start) or start in grid.walls or start in boxes:
        raise IllegalStartError(f"pusher cannot stand at {start}")
    seen = {start}
    queue = deque([start])
    while queue:
        sq = queue.popleft()
        for d in Direction:
            nxt = move(sq, d)
            if (
                nxt not in seen
                and in_bounds(grid, nxt)
                and nxt not in grid.walls
                and nxt not in boxes
            ):
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def normalize_pusher(grid: Grid, boxes: frozenset[Square] | set[Square], pusher: Square) -> Square:
    """Row-major minimum of the pusher's reachable region."""
    return min(reachable_region(grid, boxes, pusher))


def make_state(grid: Grid, boxes: frozenset[Square] | set[Square], pusher: Square) -> State:
    return State(frozenset(boxes), normalize_pusher(grid, boxes, pusher))


def initial_state(grid: Grid) -> State:
    return make_state(grid, grid.initial_boxes, grid.initial_pusher)


def is_goal_state(grid: Grid, state: State) -> bool:
    return state.boxes == grid.goal_set


def state_key(state: State) -> StateKey:
    """Canonical hashable encoding of a State."""
    return (state.boxes, state.pusher_norm)


def _push_free(grid: Grid, boxes: frozenset[Square], square: Square) -> bool:
    """Whether a box may be pushed onto `square`."""
    return in_bounds(grid, square) and square not in grid.walls and square not in boxes


def legal_pushes(grid: Grid, state: State) -> list[Step]:
    """All currently legal pushes, ordered box row-major then U/R/D/L."""
    region = reachable_region(grid, state.boxes, state.pusher_norm)
    pushes = []
    for box in sorted(state.boxes):
        for d in Direction:
            stand = move(box, d.opposite)
            if stand in region and _push_free(grid, state.boxes, move(box, d)):
                pushes.append(Step(box, d))
    return pushes


def apply_push(grid: Grid, state: State, step: Step) -> State:
    """Apply one push; the pusher ends on the box's old square."""
    box, d = step.box_from, step.direction
    dest = move(box, d)
    stand = move(box, d.opposite)
    if box not in state.boxes or not _push_free(grid, state.boxes, dest):
        raise IllegalPushError(f"cannot push box at {box} {d.name.lower()}")
    region = reachable_region(grid, state.boxes, state.pusher_norm)
    if stand not in region:
        raise IllegalPushError(f"pusher cannot reach {stand} to push box at {box}")
    new_boxes = state.boxes - {box} | {dest}
    return State(new_boxes, normalize_pusher(grid, new_boxes, box))
