"""Manhattan-family heuristics for the informed strategies.

`h_prepaired` pairs the k-th box (row-major) with the k-th goal and sums
the Manhattan distances; it is cheap but carries no admissibility
guarantee.  `h_nearest_goal` lets every box pick its closest goal, which
never overestimates the remaining push count and is consistent.
"""

from enum import Enum
from typing import Callable

from .board import Grid, Square
from .state import State


class HeuristicKind(Enum):
    PREPAIRED = "prepaired"
    NEAREST_GOAL = "nearest"


def manhattan(a: Square, b: Square) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def h_prepaired(grid: Grid, state: State) -> int:
    """Sum of Manhattan distances under rank pairing in row-major order."""
    return sum(
        manhattan(box, goal) for box, goal in zip(sorted(state.boxes), grid.goals)
    )


def h_nearest_goal(grid: Grid, state: State) -> int:
    """Sum over boxes of the Manhattan distance to the nearest goal."""
    return sum(min(manhattan(box, goal) for goal in grid.goals) for box in state.boxes)


HeuristicFn = Callable[[Grid, State], int]

_FUNCTIONS: dict[HeuristicKind, HeuristicFn] = {
    HeuristicKind.PREPAIRED: h_prepaired,
    HeuristicKind.NEAREST_GOAL: h_nearest_goal,
}


def heuristic_for(kind: HeuristicKind) -> HeuristicFn:
    return _FUNCTIONS[kind]
