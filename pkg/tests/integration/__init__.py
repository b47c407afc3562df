"""Acceptance tests for ginarl: full gin pipeline at default coefficient bounds."""
