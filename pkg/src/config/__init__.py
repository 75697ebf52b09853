"""This module contains the application's configuration."""
