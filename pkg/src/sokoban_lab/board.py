"""Level geometry: XSB parsing, rendering, and the tile blocking predicate.

Coordinates are (row, col) tuples, 0-based, row-major.  A Grid is immutable
and holds only the static geometry plus the initial box/pusher placement;
the moving parts live in :mod:`sokoban_lab.state`.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import (
    BoxGoalCountMismatchError,
    EmptyLevelError,
    IllegalPlacementError,
    LevelError,
    MultiplePushersError,
    NoPusherError,
    OutOfBoundsError,
    UnenclosedPlayfieldError,
)

Square = tuple[int, int]


class Direction(Enum):
    """The four push/walk directions. Definition order fixes tie-breaking."""

    UP = (-1, 0)
    RIGHT = (0, 1)
    DOWN = (1, 0)
    LEFT = (0, -1)

    @property
    def opposite(self) -> "Direction":
        dr, dc = self.value
        return Direction((-dr, -dc))


def move(square: Square, direction: Direction, steps: int = 1) -> Square:
    """Square reached from `square` after `steps` unit moves in `direction`."""
    dr, dc = direction.value
    return (square[0] + dr * steps, square[1] + dc * steps)


class TileKind(Enum):
    """Occupancy of a square; goals are an overlay flag, not a kind."""

    EMPTY = "empty"
    ROCK = "rock"
    BOX = "box"
    PUSHER = "pusher"

    @property
    def blocks(self) -> bool:
        """Whether this occupancy blocks pusher movement and box pushes."""
        return self in (TileKind.ROCK, TileKind.BOX)


@dataclass(frozen=True)
class Grid:
    """Immutable level: walls, goals, and the initial placement.

    `goals` and `initial_boxes` are stored in row-major order.
    """

    width: int
    height: int
    walls: frozenset[Square]
    goals: tuple[Square, ...]
    initial_boxes: tuple[Square, ...]
    initial_pusher: Square

    @cached_property
    def goal_set(self) -> frozenset[Square]:
        return frozenset(self.goals)

    @cached_property
    def floor(self) -> frozenset[Square]:
        """All in-bounds squares that are not walls."""
        return frozenset(
            (r, c)
            for r in range(self.height)
            for c in range(self.width)
            if (r, c) not in self.walls
        )


def in_bounds(grid: Grid, square: Square) -> bool:
    r, c = square
    return 0 <= r < grid.height and 0 <= c < grid.width


def tile_at(
    grid: Grid, boxes: frozenset[Square] | set[Square], pusher: Square, square: Square
) -> tuple[TileKind, bool]:
    """Occupancy kind at `square` plus its goal-overlay flag."""
    if not in_bounds(grid, square):
        raise OutOfBoundsError(f"square {square} outside {grid.width}x{grid.height} grid")
    if square in grid.walls:
        return TileKind.ROCK, False
    is_goal = square in grid.goal_set
    if square in boxes:
        return TileKind.BOX, is_goal
    if square == pusher:
        return TileKind.PUSHER, is_goal
    return TileKind.EMPTY, is_goal


def tile_blocks(grid: Grid, boxes: frozenset[Square] | set[Square], square: Square) -> bool:
    """True iff `square` is a wall or currently holds a box."""
    if not in_bounds(grid, square):
        raise OutOfBoundsError(f"square {square} outside {grid.width}x{grid.height} grid")
    return square in grid.walls or square in boxes


_FLOOR_CHARS = {" ", "-"}
_CELL_CHARS = {"#", "@", "+", "$", "*", "."} | _FLOOR_CHARS


def parse_level(text: str) -> Grid:
    """Parse an XSB level string into a Grid.

    Symbols: `#` wall, `@` pusher, `+` pusher on goal, `$` box, `*` box on
    goal, `.` goal, space or `-` floor.  Short lines are right-padded with
    floor.  Raises a LevelError subclass when the level is malformed.
    """
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise EmptyLevelError("level contains no squares")

    height = len(lines)
    width = max(len(line) for line in lines)

    walls: set[Square] = set()
    goals: list[Square] = []
    boxes: list[Square] = []
    pushers: list[Square] = []
    for r, line in enumerate(lines):
        for c, ch in enumerate(line):
            if ch not in _CELL_CHARS:
                raise LevelError(f"unknown level character {ch!r} at row {r}, col {c}")
            sq = (r, c)
            if ch == "#":
                walls.add(sq)
            elif ch == ".":
                goals.append(sq)
            elif ch == "$":
                boxes.append(sq)
            elif ch == "*":
                boxes.append(sq)
                goals.append(sq)
            elif ch == "@":
                pushers.append(sq)
            elif ch == "+":
                pushers.append(sq)
                goals.append(sq)

    if not pushers:
        raise NoPusherError("level has no pusher (@ or +)")
    if len(pushers) > 1:
        raise MultiplePushersError(f"level has {len(pushers)} pushers, expected exactly 1")
    if not boxes and not goals:
        raise BoxGoalCountMismatchError("level needs at least one box and one goal")
    if len(boxes) != len(goals):
        raise BoxGoalCountMismatchError(
            f"{len(boxes)} box(es) vs {len(goals)} goal(s); counts must match"
        )

    grid = Grid(
        width=width,
        height=height,
        walls=frozenset(walls),
        goals=tuple(sorted(goals)),
        initial_boxes=tuple(sorted(boxes)),
        initial_pusher=pushers[0],
    )
    _check_enclosed(grid)
    return grid


def _check_enclosed(grid: Grid) -> None:
    """Flood fill from the pusher through non-wall squares; stepping outside
    the text bounds means the playfield is not enclosed."""
    seen = {grid.initial_pusher}
    stack = [grid.initial_pusher]
    while stack:
        sq = stack.pop()
        for d in Direction:
            nxt = move(sq, d)
            if not in_bounds(grid, nxt):
                raise UnenclosedPlayfieldError(
                    f"pusher can escape the grid via {sq} moving {d.name.lower()}"
                )
            if nxt not in grid.walls and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)


def render(grid: Grid, boxes: frozenset[Square] | set[Square], pusher: Square) -> str:
    """Render a placement back to XSB text (trailing floor trimmed per line)."""
    for b in boxes:
        if not in_bounds(grid, b) or b in grid.walls:
            raise IllegalPlacementError(f"box at {b} is on a wall or out of bounds")
    if not in_bounds(grid, pusher) or pusher in grid.walls:
        raise IllegalPlacementError(f"pusher at {pusher} is on a wall or out of bounds")
    if pusher in boxes:
        raise IllegalPlacementError(f"pusher and box overlap at {pusher}")

    rows = []
    for r in range(grid.height):
        row = []
        for c in range(grid.width):
            kind, is_goal = tile_at(grid, boxes, pusher, (r, c))
            if kind is TileKind.ROCK:
                row.append("#")
            elif kind is TileKind.BOX:
                row.append("*" if is_goal else "$")
            elif kind is TileKind.PUSHER:
                row.append("+" if is_goal else "@")
            else:
                row.append("." if is_goal else " ")
        rows.append("".join(row).rstrip())
    return "\n".join(rows)
