"""
This module defines the interface for the Chain of Responsibility (CoR)
handlers.

Each handler does one step of a request, stores its product on the shared
context and passes the context to the next handler in the chain.
"""
from abc import ABC, abstractmethod


class IHandler[T](ABC):
    """Base class for the handlers in the chain."""

    def __init__(self, next_handler: "IHandler[T] | None" = None):
        """
        Initializes the handler with an optional next handler.

        Args:
            next_handler: The next handler in the chain.
        """
        self._next_handler = next_handler

    def set_next(self, handler: "IHandler[T]") -> "IHandler[T]":
        """
        Sets the next handler in the chain.

        Args:
            handler: The next handler.

        Returns:
            The next handler, so calls can be chained.
        """
        self._next_handler = handler
        return handler

    @abstractmethod
    def handle(self, context: T) -> T:
        """
        Handles a request, then delegates to the next handler if any.

        Args:
            context: The request context.

        Returns:
            The context as left by the last handler.
        """
        if self._next_handler:
            return self._next_handler.handle(context)
        return context
