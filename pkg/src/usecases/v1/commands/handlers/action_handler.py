"""This module defines the `ActionHandler`, which evaluates Phi_S(Z)."""
from loguru import logger

from src.domain.services.siegel import mobius_apply
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.cor_handler_interface import IHandler
from src.usecases.v1.schemas.base.act_context import ActContext


class ActionHandler(IHandler[ActContext]):
    """2. Applies the Möbius action."""

    def __init__(
        self,
        tol: Tolerance,
        next_handler: IHandler[ActContext] | None = None,
    ):
        super().__init__(next_handler)
        self.tol = tol

    def handle(self, context: ActContext) -> ActContext:
        if context.s is None or context.z is None:
            raise RuntimeError("ActionHandler needs a validated S and Z.")
        context.outcome = mobius_apply(context.s, context.z, self.tol)
        logger.info(
            f"Phi_S(Z): {context.outcome.status} "
            f"(cond(F) = {context.outcome.cond_f:.3e})."
        )
        return super().handle(context)
