"""Application Layer - Use Cases and Ports."""
