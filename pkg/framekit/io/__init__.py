# framekit/io/__init__.py
"""Frame files, report schemas and deterministic JSON output."""
