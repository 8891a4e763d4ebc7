"""Ports - Interfaces for infrastructure adapters."""
