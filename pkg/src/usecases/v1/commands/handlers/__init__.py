"""Handlers of the act command chain."""
