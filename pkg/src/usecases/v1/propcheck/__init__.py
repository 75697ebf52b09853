"""Seeded property suites and their runner."""
