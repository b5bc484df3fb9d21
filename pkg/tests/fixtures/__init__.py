"""Test fixtures and sample data for colorweight tests."""
