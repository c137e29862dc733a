"""Geometry tests."""
