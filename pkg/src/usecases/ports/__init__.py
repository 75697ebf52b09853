"""This module contains the ports for the use cases."""
