"""This module contains the application's use cases."""
