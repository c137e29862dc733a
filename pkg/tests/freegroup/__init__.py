"""Freegroup tests."""
