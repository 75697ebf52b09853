"""Initialize the source path."""
