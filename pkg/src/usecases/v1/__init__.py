"""This module contains version 1 of the application's use cases."""
