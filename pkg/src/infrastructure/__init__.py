"""Infrastructure Layer - External adapters."""
