"""Octdecomp tests."""
