"""This module contains the adapters for the application."""
