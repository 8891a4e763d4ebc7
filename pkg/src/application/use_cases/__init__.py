"""Use Cases - Application business logic."""
