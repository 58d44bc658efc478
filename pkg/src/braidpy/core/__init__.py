"""Core algebra for braidpy."""
