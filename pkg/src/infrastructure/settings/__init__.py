"""Run configuration storage adapters."""
