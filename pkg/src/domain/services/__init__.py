"""This module contains the domain services for the application."""
