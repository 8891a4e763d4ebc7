"""View Models."""
