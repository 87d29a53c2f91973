"""HTTP service wrapping the report layer."""
