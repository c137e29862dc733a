"""Diagram tests."""
