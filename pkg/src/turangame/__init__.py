"""Constructor-Blocker triangle games on K_n.

Engine, strategy library, exact solver, and bound-audit harness for
scoring games where Constructor maximizes the number of triangles in
her graph under a legality constraint (forbidden paths or stars, K4,
planarity, or a fixed convex embedding) while Blocker spoils.
"""

from .graphcore import BACKEND_NAME, Graph, StructureKind, StructureTag, find_structure
from .constraints import Constraint, ConstraintKind, chords_cross, is_legal, is_planar, parse_constraint
from .engine import GameConfig, GameResult, GameState, Player, play_game

__all__ = [
    "BACKEND_NAME",
    "Graph",
    "StructureKind",
    "StructureTag",
    "find_structure",
    "Constraint",
    "ConstraintKind",
    "chords_cross",
    "is_legal",
    "is_planar",
    "parse_constraint",
    "GameConfig",
    "GameResult",
    "GameState",
    "Player",
    "play_game",
]

__version__ = "0.1.0"
