"""Strategy registry: CLI/config selection strings to implementations."""

from __future__ import annotations

from ..engine import GameConfig, Player
from .base import Strategy, StrategyConfigError
from .baselines import GreedyBlock, GreedyTriangle, RandomStrategy
from .bigstar import ConstructorSk
from .convex import BlockerECB, ConstructorECB
from .paths import BlockerP4, BlockerP6, ConstructorP6
from .pendant import PendantLeg, PendantLegPlan
from .planar import ConstructorPCB
from .potential import PotentialBreaker, PotentialMaker, TrianglePotential, potential_value
from .samecc import SameComponentBlocker
from .stars import BlockerS4, BlockerS5NoK4, ConstructorS4, ConstructorS5

REGISTRY: dict[str, type] = {
    "random": RandomStrategy,
    "greedy-tri": GreedyTriangle,
    "greedy-block": GreedyBlock,
    "es-maker": PotentialMaker,
    "es-breaker": PotentialBreaker,
    "pendant-leg": PendantLeg,
    "c-p6": ConstructorP6,
    "b-p4": BlockerP4,
    "b-p6": BlockerP6,
    "c-s4": ConstructorS4,
    "b-s4": BlockerS4,
    "c-s5": ConstructorS5,
    "b-s5": BlockerS5NoK4,
    "c-sk": ConstructorSk,
    "c-pcb": ConstructorPCB,
    "c-ecb": ConstructorECB,
    "b-ecb": BlockerECB,
}


def strategy_names() -> list[str]:
    return sorted(REGISTRY) + ["samecc:<inner>"]


def make_strategy(name: str, side: Player, config: GameConfig) -> Strategy:
    """Instantiate a strategy from its selection string."""
    if name.startswith("samecc:"):
        inner_name = name.split(":", 1)[1]
        inner = make_strategy(inner_name, side, config)
        return SameComponentBlocker(side, config, inner)
    cls = REGISTRY.get(name)
    if cls is None:
        raise StrategyConfigError(f"unknown strategy {name!r}; known: {', '.join(strategy_names())}")
    return cls(side, config)


__all__ = [
    "REGISTRY",
    "Strategy",
    "StrategyConfigError",
    "make_strategy",
    "strategy_names",
    "PendantLegPlan",
    "TrianglePotential",
    "potential_value",
    "SameComponentBlocker",
]
