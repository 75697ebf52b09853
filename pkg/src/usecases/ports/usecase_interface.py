"""
This module defines the `IUsecase` interface, which is a base interface for
use cases.

Every command of the command-line front end is one use case. Execution is
synchronous: the work is dense linear algebra, not I/O.
"""
from abc import ABC, abstractmethod


class IUsecase[TInput, TOutput](ABC):
    """Base interface for Use Cases."""

    @abstractmethod
    def execute(self, input_data: TInput) -> TOutput:
        """Executes the application logic of the use case."""
        ...
