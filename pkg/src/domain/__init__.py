"""This module contains the domain models 
and business logic of the application."""
