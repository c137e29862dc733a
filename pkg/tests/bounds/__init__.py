"""Bounds tests."""
