"""Utility modules: logging and extended-rational arithmetic."""
