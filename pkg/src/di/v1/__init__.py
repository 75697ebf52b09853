"""This module contains the dependency injection
factories for version 1 of the toolkit."""
