"""Exact linear solver adapters."""
