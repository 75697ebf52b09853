from dataclasses import dataclass

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.siegel_point import (
    ActionOutcome,
    LowerSiegelPoint,
    SiegelPoint,
)
from src.usecases.v1.schemas.api.commands import ActInput, ActResult


@dataclass
class ActContext:
    """Shared state of the handlers of the act command."""

    dto: ActInput
    s: BlockSymplectic | None = None
    z: SiegelPoint | LowerSiegelPoint | None = None
    outcome: ActionOutcome | None = None
    result: ActResult | None = None
