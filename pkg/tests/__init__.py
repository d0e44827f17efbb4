"""fanocalc tests package."""
