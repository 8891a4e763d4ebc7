"""UI layer tests."""
