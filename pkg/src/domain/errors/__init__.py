"""Domain Errors and Exceptions."""
