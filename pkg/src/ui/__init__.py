"""UI Layer - Command-line interface."""
