"""This module contains the dependency injection containers."""
