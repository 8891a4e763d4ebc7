"""Domain Entities."""
