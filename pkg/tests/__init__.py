"""Test package for heytingkit."""
