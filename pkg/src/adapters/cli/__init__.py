"""The `siegel` command line front end."""
