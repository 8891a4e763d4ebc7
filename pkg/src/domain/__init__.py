"""Domain Layer - Pure business logic."""
