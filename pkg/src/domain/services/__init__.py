"""Domain Services - Pure logic operations."""
