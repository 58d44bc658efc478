"""Test suite for braidpy."""
