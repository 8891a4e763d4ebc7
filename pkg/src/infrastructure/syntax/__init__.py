"""Text and JSON codecs for forms."""
